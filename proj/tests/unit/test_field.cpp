#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "secant/field.hpp"
#include "secant/gr26.hpp"

using namespace secant;

namespace {

oracle::Grid random_grid(std::size_t rows, std::size_t cols, long long lo, long long hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(lo, hi);
  oracle::Grid g(rows, oracle::Row(cols));
  for (auto& r : g)
    for (auto& x : r) x = d(rng);
  return g;
}

IntMatrix to_int(const oracle::Grid& g) {
  IntMatrix m(g.size(), g.empty() ? 0 : g[0].size());
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c) m(r, c) = static_cast<long>(g[r][c]);
  return m;
}

DenseMatrix to_dense(const oracle::Grid& g, const PrimeModulus& p) {
  DenseMatrix m(g.size(), g.empty() ? 0 : g[0].size());
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c) m(r, c) = p.reduce(g[r][c]);
  return m;
}

// Random rows drawn from a span of `rank` random vectors, so ranks are controlled.
oracle::Grid low_rank_grid(std::size_t rows, std::size_t cols, std::size_t rank, std::mt19937_64& rng) {
  const auto basis = random_grid(rank, cols, -3, 3, rng);
  const auto coeffs = random_grid(rows, rank, -2, 2, rng);
  oracle::Grid g(rows, oracle::Row(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t c = 0; c < cols; ++c) g[r][c] += coeffs[r][i] * basis[i][c];
  return g;
}

}  // namespace

TEST_CASE("prime modulus validation") {
  CHECK_NOTHROW(PrimeModulus{});
  CHECK(PrimeModulus{}.value() == 32003);
  CHECK(PrimeModulus(PrimeModulus::kSecondDefault).value() == 46337);
  CHECK_THROWS_AS(PrimeModulus(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(32001), std::invalid_argument);
  CHECK(PrimeModulus(32003).supports_cube_roots());
  CHECK(PrimeModulus(46337).supports_cube_roots());
  // 65521 is prime but 1 mod 3, so it is usable for ranks and not for cube roots.
  CHECK_FALSE(PrimeModulus(65521).supports_cube_roots());
}

TEST_CASE("modular arithmetic") {
  const PrimeModulus p;
  CHECK(p.reduce(-1) == 32002);
  CHECK(p.reduce(ExactInt("-32004")) == 32002);
  CHECK(p.reduce(ExactInt("100000000000000000000")) == p.reduce(ExactInt(ExactInt("100000000000000000000") % 32003)));
  CHECK(p.mul(p.inv(12345), 12345) == 1);
  CHECK_THROWS_AS(p.inv(0), std::domain_error);
  CHECK(p.centered(32002) == -1);
  CHECK(p.centered(5) == 5);
  CHECK(p.pow(3, 32002) == 1);
}

TEST_CASE("rank_mod_p examples") {
  const PrimeModulus p;
  CHECK(rank_mod_p(identity_mod_p(5), p) == 5);
  CHECK(rank_mod_p(DenseMatrix(3, 7, 0), p) == 0);
  CHECK(rank_mod_p(ContractionMatrix(fano_tensor()).mod_p(p), p) == 21);
}

TEST_CASE("det_exact examples") {
  IntMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  CHECK(det_exact(m) == -2);
  IntMatrix id(21, 21, 0);
  for (int i = 0; i < 21; ++i) id(i, i) = 1;
  CHECK(det_exact(id) == 1);
  CHECK(det_exact(IntMatrix(0, 0)) == 1);
  CHECK(ContractionMatrix(fano_tensor()).determinant() == -2);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(det_exact(IntMatrix(65, 65)), std::invalid_argument);
}

TEST_CASE("det_exact agrees with cofactor expansion on random 4x4 matrices") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_grid(4, 4, -9, 9, rng);
    CHECK(det_exact(to_int(g)) == oracle::cofactor_det(g));
  }
  // Larger sizes exercise the exact divisions in the fraction-free recurrence.
  for (int n = 5; n <= 7; ++n) {
    const auto g = random_grid(n, n, -9, 9, rng);
    CHECK(det_exact(to_int(g)) == oracle::cofactor_det(g));
  }
  // Singular matrices, including a zero leading pivot.
  oracle::Grid z{{0, 1, 2}, {0, 3, 4}, {5, 6, 7}};
  CHECK(det_exact(to_int(z)) == oracle::cofactor_det(z));
  oracle::Grid dup{{1, 2, 3}, {2, 4, 6}, {7, 8, 9}};
  CHECK(det_exact(to_int(dup)) == 0);
}

TEST_CASE("det_mod_p matches the exact determinant reduced") {
  std::mt19937_64 rng(5);
  const PrimeModulus p;
  for (int i = 0; i < 50; ++i) {
    const auto g = random_grid(6, 6, -50, 50, rng);
    CHECK(det_mod_p(to_dense(g, p), p) == p.reduce(oracle::cofactor_det(g)));
  }
}

TEST_CASE("rank agrees with a schoolbook elimination oracle") {
  std::mt19937_64 rng(7);
  for (std::uint32_t prime : {32003u, 46337u, 3u, 7u}) {
    const PrimeModulus p(prime);
    for (int i = 0; i < 40; ++i) {
      const std::size_t rows = 1 + rng() % 30;
      const std::size_t cols = 1 + rng() % 30;
      const std::size_t r = 1 + rng() % std::min(rows, cols);
      const auto g = low_rank_grid(rows, cols, r, rng);
      const auto expected = oracle::naive_rank_mod_p(g, prime);
      CHECK(rank_mod_p(to_dense(g, p), p) == expected);
      EchelonBasis basis(cols, p);
      for (std::size_t row = 0; row < rows; ++row) basis.insert(to_dense(g, p).row(row));
      CHECK(basis.rank() == expected);
    }
  }
}

TEST_CASE("echelon basis with long rows of large residues") {
  // Many reductions of large entries stress the delayed modular reduction.
  std::mt19937_64 rng(3);
  const PrimeModulus p(46337);
  const std::size_t cols = 400;
  oracle::Grid g(300, oracle::Row(cols));
  for (auto& row : g)
    for (auto& x : row) x = static_cast<long long>(uniform_residue(rng, p));
  for (std::size_t r = 250; r < 300; ++r)
    for (std::size_t c = 0; c < cols; ++c) g[r][c] = (g[r - 250][c] * 46336 + g[r - 200][c] * 17) % 46337;
  EchelonBasis basis(cols, p);
  const DenseMatrix m = to_dense(g, p);
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  CHECK(basis.rank() == oracle::naive_rank_mod_p(g, 46337));
  CHECK(basis.rank() == 250);
  CHECK(basis.contains(m.row(299)));
  CHECK_THROWS_AS(basis.insert(std::vector<Residue>(cols + 1, 0)), std::invalid_argument);
}

TEST_CASE("rank bounds for stacked matrices") {
  std::mt19937_64 rng(21);
  const PrimeModulus p;
  for (int i = 0; i < 50; ++i) {
    const std::size_t cols = 2 + rng() % 15;
    auto a = low_rank_grid(1 + rng() % 10, cols, 1 + rng() % 3, rng);
    auto b = low_rank_grid(1 + rng() % 10, cols, 1 + rng() % 3, rng);
    const auto ra = rank_mod_p(to_dense(a, p), p);
    const auto rb = rank_mod_p(to_dense(b, p), p);
    auto stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    const auto rs = rank_mod_p(to_dense(stacked, p), p);
    CHECK(rs >= std::max(ra, rb));
    CHECK(rs <= ra + rb);
    CHECK(ra <= std::min(a.size(), cols));
  }
}

TEST_CASE("rank mod p never exceeds the rank over the rationals") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const auto g = low_rank_grid(21, 21, 1 + rng() % 21, rng);
    const IntMatrix m = to_int(g);
    const auto exact = rank_exact(m);
    for (std::uint32_t prime : {3u, 5u, 32003u}) {
      const PrimeModulus p(prime);
      CHECK(rank_mod_p(reduce_mod_p(m, p), p) <= exact);
    }
    CHECK(rank_mod_p(reduce_mod_p(m, PrimeModulus{}), PrimeModulus{}) == exact);
  }
  // A matrix that only drops rank mod 3.
  IntMatrix t(2, 2);
  t(0, 0) = 1;
  t(0, 1) = 1;
  t(1, 0) = 1;
  t(1, 1) = 4;
  CHECK(rank_exact(t) == 2);
  CHECK(rank_mod_p(reduce_mod_p(t, PrimeModulus(3)), PrimeModulus(3)) == 1);
}

TEST_CASE("cube roots modulo p") {
  const PrimeModulus p;
  CHECK(cube_root_exponent(p) == 21335);
  CHECK(3 * 21335 == 2 * 32002 + 1);
  CHECK(cube_root_mod_p(0, p) == 0);
  CHECK(cube_root_mod_p(1, p) == 1);
  CHECK(cube_root_mod_p(8, p) == 2);
  CHECK(cube_root_mod_p(p.neg(1), p) == p.neg(1));
  std::mt19937_64 rng(1);
  for (const PrimeModulus q : {PrimeModulus(32003), PrimeModulus(46337)}) {
    for (int i = 0; i < 1000; ++i) {
      const Residue x = uniform_residue(rng, q);
      CHECK(cube_root_mod_p(q.mul(x, q.mul(x, x)), q) == x);
    }
  }
  CHECK_THROWS_AS(cube_root_mod_p(8, PrimeModulus(65521)), std::invalid_argument);
  CHECK_THROWS_AS(cube_root_exponent(PrimeModulus(7)), std::invalid_argument);
}

TEST_CASE("signed integer cube roots") {
  CHECK(integer_cube_root_signed(-27) == -3);
  CHECK(integer_cube_root_signed(0) == 0);
  CHECK(integer_cube_root_signed(-1) == -1);
  CHECK(integer_cube_root_signed(ExactInt("1000000000000000000000000000000")) == ExactInt("10000000000"));
  CHECK_THROWS_AS(integer_cube_root_signed(2), NotACube);
  CHECK_THROWS_AS(integer_cube_root_signed(-9), NotACube);
}

TEST_CASE("uniform residues are deterministic and in range") {
  const PrimeModulus p(7);
  std::mt19937_64 a(99), b(99);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const Residue x = uniform_residue(a, p);
    CHECK(x == uniform_residue(b, p));
    REQUIRE(x < 7);
    ++hist[x];
  }
  for (int h : hist) CHECK(h > 800);
}
