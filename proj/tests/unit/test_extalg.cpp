#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "secant/extalg.hpp"
#include "secant/gr26.hpp"
#include "secant/tensor_format.hpp"

using namespace secant;

namespace {

using Sparse = std::map<std::vector<int>, long long>;

Sparse to_sparse(const IntMultivector& w) {
  Sparse out;
  for (const auto& [s, c] : w.terms()) out[s.indices()] = c.get_si();
  return out;
}

IntMultivector from_sparse(int dim, int degree, const Sparse& terms) {
  IntMultivector w(dim, degree);
  for (const auto& [idx, c] : terms) w.add(IndexSet(std::span<const int>(idx)), static_cast<long>(c));
  return w;
}

IntMultivector random_form(int dim, int degree, std::mt19937_64& rng, int bound = 4, double density = 0.5) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::bernoulli_distribution keep(density);
  IntMultivector w(dim, degree);
  for (IndexSet s : subsets_of(IndexSet::range(0, dim - 1), degree))
    if (keep(rng)) w.add(s, coef(rng));
  return w;
}

IntMatrix random_rows(int rows, int cols, std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = coef(rng);
  return m;
}

oracle::Grid to_grid(const IntMatrix& m) {
  oracle::Grid g(m.rows(), oracle::Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c).get_si();
  return g;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(18, 3) == 816);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ull);
  CHECK(binomial(100, 3) == 161700);
  CHECK_THROWS_AS(binomial(100, 50), std::overflow_error);
}

TEST_CASE("index sets") {
  const IndexSet s{4, 0, 2};
  CHECK(s.indices() == std::vector<int>{0, 2, 4});
  CHECK(s.size() == 3);
  CHECK(s.max() == 4);
  CHECK(s.position(4) == 2);
  CHECK(s.to_string() == "{0,2,4}");
  CHECK(IndexSet::range(3, 5) == IndexSet{3, 4, 5});
  CHECK(IndexSet::range(5, 3).empty());
  CHECK(IndexSet{1, 2}.subset_of(IndexSet{0, 1, 2}));
  CHECK_THROWS(IndexSet({1, 1}));
  CHECK_THROWS(IndexSet({64}));
  CHECK_THROWS(IndexSet({-1}));
}

TEST_CASE("colex rank and unrank") {
  CHECK(rank_of_subset(IndexSet{0, 1, 2}) == 0);
  for (int n : {2, 5, 9, 17}) CHECK(unrank_subset(binomial(n + 1, 3) - 1, n, 3) == IndexSet{n - 2, n - 1, n});
  CHECK_THROWS_AS(unrank_subset(120, 9, 3), std::out_of_range);

  // Exhaustive comparison with an independently sorted enumeration.
  const auto reference = oracle::colex_subsets(9, 3);
  REQUIRE(reference.size() == 120);
  const auto ours = subsets_of(IndexSet::range(0, 9), 3);
  REQUIRE(ours.size() == 120);
  for (std::uint64_t r = 0; r < 120; ++r) {
    CHECK(ours[r].indices() == reference[r]);
    CHECK(rank_of_subset(ours[r]) == r);
    CHECK(unrank_subset(r, 9, 3) == ours[r]);
  }
  for (int d = 0; d <= 6; ++d) {
    const auto all = subsets_of(IndexSet::range(0, 7), d);
    CHECK(all.size() == binomial(8, d));
    for (std::uint64_t r = 0; r < all.size(); ++r) CHECK(rank_of_subset(unrank_subset(r, 7, d)) == r);
  }
}

TEST_CASE("signs") {
  CHECK(merge_sign(IndexSet{0, 1}, IndexSet{2, 3}) == 1);
  CHECK(merge_sign(IndexSet{0, 2}, IndexSet{1, 3}) == -1);
  CHECK(merge_sign(IndexSet{0, 2}, IndexSet{2, 3}) == 0);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> seq{0, 1, 2, 3, 4, 5};
    std::shuffle(seq.begin(), seq.end(), rng);
    seq.resize(1 + rng() % 6);
    CHECK(sort_sign(seq) == oracle::inversion_sign(seq));
  }
  CHECK(sort_sign(std::vector<int>{3, 1, 3}) == 0);
}

TEST_CASE("wedge_vectors examples") {
  IntMatrix e(3, 7, 0);
  e(0, 0) = e(1, 1) = e(2, 2) = 1;
  const auto w = wedge_vectors(e, IntRing{});
  CHECK(w.size() == 1);
  CHECK(w.coefficient(IndexSet{0, 1, 2}) == 1);

  IntMatrix swapped(2, 4, 0);
  swapped(0, 1) = 1;
  swapped(1, 0) = 1;
  const auto v = wedge_vectors(swapped, IntRing{});
  CHECK(v.size() == 1);
  CHECK(v.coefficient(IndexSet{0, 1}) == -1);

  IntMatrix sums(3, 6, 0);
  for (int i = 0; i < 3; ++i) sums(i, i) = sums(i, i + 3) = 1;
  const auto x = wedge_vectors(sums, IntRing{});
  CHECK(x.size() == 8);
  CHECK(to_sparse(x) == oracle::minor_expansion(to_grid(sums)));
}

TEST_CASE("wedge_vectors agrees with the minor oracle and the iterated wedge") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 3 + static_cast<int>(rng() % 5);
    const int d = 1 + static_cast<int>(rng() % dim);
    const IntMatrix rows = random_rows(d, dim, rng);
    const auto w = wedge_vectors(rows, IntRing{});
    CHECK(to_sparse(w) == oracle::minor_expansion(to_grid(rows)));

    std::vector<ExactInt> first(dim);
    for (int c = 0; c < dim; ++c) first[c] = rows(0, c);
    auto iterated = vector_multivector<IntRing>(first);
    for (int r = 1; r < d; ++r) {
      std::vector<ExactInt> v(dim);
      for (int c = 0; c < dim; ++c) v[c] = rows(r, c);
      iterated = wedge(iterated, vector_multivector<IntRing>(v));
    }
    CHECK(iterated == w);
  }
}

TEST_CASE("wedge examples") {
  const auto e01 = basis_multivector<IntRing>(4, IndexSet{0, 1});
  const auto e23 = basis_multivector<IntRing>(4, IndexSet{2, 3});
  const auto e02 = basis_multivector<IntRing>(4, IndexSet{0, 2});
  const auto e13 = basis_multivector<IntRing>(4, IndexSet{1, 3});
  CHECK(wedge(e01, e23).coefficient(IndexSet{0, 1, 2, 3}) == 1);
  CHECK(wedge(e02, e13).coefficient(IndexSet{0, 1, 2, 3}) == -1);
  std::mt19937_64 rng(2);
  for (int degree : {1, 3}) {
    const auto a = random_form(7, degree, rng);
    CHECK(wedge(a, a).is_zero());
  }
  CHECK_THROWS_AS(wedge(basis_multivector<IntRing>(4, IndexSet{0, 1, 2}), e23), std::invalid_argument);
  CHECK_THROWS_AS(wedge(e01, basis_multivector<IntRing>(5, IndexSet{2, 3})), std::invalid_argument);
}

TEST_CASE("wedge matches a brute-force oracle, is bilinear and associative") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 4 + static_cast<int>(rng() % 4);  // n <= 7
    const int da = 1 + static_cast<int>(rng() % 2);
    const int db = 1 + static_cast<int>(rng() % 2);
    const int dc = 1 + static_cast<int>(rng() % std::max(1, dim - da - db));
    if (da + db + dc > dim) continue;
    const auto a = random_form(dim, da, rng);
    const auto a2 = random_form(dim, da, rng);
    const auto b = random_form(dim, db, rng);
    const auto c = random_form(dim, dc, rng);
    CHECK(to_sparse(wedge(a, b)) == oracle::brute_wedge(to_sparse(a), to_sparse(b)));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a + a2, b) == wedge(a, b) + wedge(a2, b));
    CHECK(wedge(a.scaled(3), b) == wedge(a, b).scaled(3));
    // Graded commutativity: a ^ b = (-1)^(da db) b ^ a.
    CHECK(wedge(a, b) == wedge(b, a).scaled((da * db) % 2 ? -1 : 1));
  }
}

TEST_CASE("wedge_vectors is alternating") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 5 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 3);
    IntMatrix rows = random_rows(d, dim, rng);
    const auto w = wedge_vectors(rows, IntRing{});
    const int i = static_cast<int>(rng() % (d - 1));
    IntMatrix swapped = rows;
    for (int c = 0; c < dim; ++c) std::swap(swapped(i, c), swapped(i + 1, c));
    CHECK(wedge_vectors(swapped, IntRing{}) == w.scaled(-1));
    IntMatrix repeated = rows;
    for (int c = 0; c < dim; ++c) repeated(i + 1, c) = repeated(i, c);
    CHECK(wedge_vectors(repeated, IntRing{}).is_zero());
  }
}

TEST_CASE("modular multivectors") {
  const ModRing ring{PrimeModulus(7)};
  ModMultivector w(4, 2, ring);
  w.add(IndexSet{0, 1}, 3);
  w.add(IndexSet{0, 1}, 4);
  CHECK(w.is_zero());
  w.add(IndexSet{2, 3}, 5);
  CHECK(w.scaled(3).coefficient(IndexSet{2, 3}) == 1);
  CHECK(w.dense().size() == 6);
  CHECK(w.dense()[rank_of_subset(IndexSet{2, 3})] == 5);
  CHECK_THROWS_AS(w.add(IndexSet{0, 1, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(w.add(IndexSet{0, 4}, 1), std::invalid_argument);
}

TEST_CASE("pairing matrix examples") {
  const auto e123 = three_form({{{1, 2, 3}, 1}});
  const IntMatrix m = pairing_matrix(e123);
  CHECK(rank_exact(m) == 6);
  const IndexSet avoided{0, 1, 2};
  for (IndexSet eta : subsets_of(IndexSet::range(0, 6), 2)) {
    for (IndexSet eta2 : subsets_of(IndexSet::range(0, 6), 2)) {
      const bool nonzero = m(rank_of_subset(eta2), rank_of_subset(eta)) != 0;
      const bool expected = (eta & avoided).empty() && (eta2 & avoided).empty() && (eta & eta2).empty();
      CHECK(nonzero == expected);
    }
  }
  CHECK(pairing_matrix(IntMultivector(7, 3)) == IntMatrix(21, 21, 0));
  CHECK(rank_exact(pairing_matrix(fano_tensor())) == 21);
  CHECK_THROWS_AS(pairing_matrix(IntMultivector(6, 3)), std::invalid_argument);
  CHECK_THROWS_AS(pairing_matrix(IntMultivector(7, 2)), std::invalid_argument);
}

TEST_CASE("pairing matrix entries follow the defining wedge") {
  std::mt19937_64 rng(40);
  const auto w = random_form(7, 3, rng);
  const IntMatrix m = pairing_matrix(w);
  const IndexSet all = IndexSet::range(0, 6);
  for (IndexSet eta : subsets_of(all, 2)) {
    for (IndexSet eta2 : subsets_of(all, 2)) {
      const auto prod = wedge(wedge(basis_multivector<IntRing>(7, eta), basis_multivector<IntRing>(7, eta2)), w);
      CHECK(m(rank_of_subset(eta2), rank_of_subset(eta)) == prod.coefficient(all));
    }
  }
}

TEST_CASE("pairing matrix is symmetric and linear") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const auto w = random_form(7, 3, rng, 9, 0.7);
    const IntMatrix m = pairing_matrix(w);
    CHECK(m == m.transposed());
    if (i % 5 == 0) {
      const auto w2 = random_form(7, 3, rng, 9, 0.7);
      const IntMatrix sum = pairing_matrix(w + w2);
      const IntMatrix m2 = pairing_matrix(w2);
      bool linear = true;
      for (std::size_t r = 0; r < 21; ++r)
        for (std::size_t c = 0; c < 21; ++c) linear = linear && sum(r, c) == m(r, c) + m2(r, c);
      CHECK(linear);
    }
  }
}

TEST_CASE("transform preserves decomposability and the pairing rank") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    const IntMatrix g = random_unimodular(7, rng);
    CHECK(det_exact(g) == 1);
    const IntMatrix rows = random_rows(3, 7, rng);
    // g maps v to g v; the wedge of the images is the transformed wedge.
    IntMatrix images(3, 7);
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 7; ++j) {
        ExactInt acc = 0;
        for (int c = 0; c < 7; ++c) acc += g(j, c) * rows(r, c);
        images(r, j) = acc;
      }
    CHECK(transform(wedge_vectors(rows, IntRing{}), g) == wedge_vectors(images, IntRing{}));
    const auto w = random_form(7, 3, rng, 3, 0.3);
    CHECK(rank_exact(pairing_matrix(transform(w, g))) == rank_exact(pairing_matrix(w)));
  }
}

TEST_CASE("tensor text format") {
  const auto fano = load_tensor(SECANT_TEST_DATA "/fano.tensor");
  CHECK(fano == fano_tensor());
  const auto s2 = load_tensor(SECANT_TEST_DATA "/sigma2.tensor");
  CHECK(s2 == three_form({{{1, 2, 3}, 1}, {{4, 5, 6}, 1}}));
  CHECK(parse_tensor(format_tensor(fano)) == fano);
  CHECK(parse_tensor(format_tensor(fano, true)) == fano);
  CHECK(parse_tensor("# nothing\n\ndim 5 degree 2\n4 0 : 7 # trailing\n").coefficient(IndexSet{0, 4}) == -7);
  CHECK(parse_tensor("dim 7 degree 3\n0 1 2 : 123456789012345678901234567890\n").coefficient(IndexSet{0, 1, 2}) ==
        ExactInt("123456789012345678901234567890"));

  try {
    load_tensor(SECANT_TEST_DATA "/bad_repeat.tensor");
    FAIL("expected a format error");
  } catch (const TensorFormatError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_tensor(""), TensorFormatError);
  CHECK_THROWS_AS(parse_tensor("dim 7 deg 3\n"), TensorFormatError);
  CHECK_THROWS_AS(parse_tensor("dim 7 degree 3 zero_based\n"), TensorFormatError);
  CHECK_THROWS_AS(parse_tensor("dim 7 degree 3\n0 1 : 1\n"), TensorFormatError);
  CHECK_THROWS_AS(parse_tensor("dim 7 degree 3\n0 1 7 : 1\n"), TensorFormatError);
  CHECK_THROWS_AS(parse_tensor("dim 7 degree 3 one_based\n0 1 2 : 1\n"), TensorFormatError);
  CHECK_THROWS_AS(parse_tensor("dim 7 degree 3\n0 1 2 1\n"), TensorFormatError);
  CHECK_THROWS_AS(parse_tensor("dim 7 degree 3\n0 1 2 : x\n"), TensorFormatError);
  CHECK_THROWS(load_tensor(SECANT_TEST_DATA "/does_not_exist.tensor"));
}
