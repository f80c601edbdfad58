#include "secant/field.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace secant {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2)
    if (value % d == 0) return false;
  return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("PrimeModulus: " + std::to_string(p) +
                                " is not an odd prime below 2^31");
}

Residue PrimeModulus::reduce(const ExactInt& x) const {
  ExactInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p_);
  return static_cast<Residue>(r.get_ui());
}

Residue PrimeModulus::pow(Residue base, std::uint64_t exponent) const {
  Residue result = 1 % p_;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Residue PrimeModulus::inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeModulus::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

Residue uniform_residue(std::mt19937_64& rng, const PrimeModulus& p) {
  const std::uint64_t m = p.value();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<Residue>(x % m);
}

DenseMatrix identity_mod_p(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix reduce_mod_p(const IntMatrix& m, const PrimeModulus& p) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = p.reduce(m(r, c));
  return out;
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(std::size_t cols, PrimeModulus p) : cols_(cols), p_(p) {
  // Number of multiply-adds a reduced accumulator entry can absorb before
  // it has to be brought back below p.
  const std::uint64_t q = p_.value() - 1ull;
  lazy_budget_ = (std::numeric_limits<std::uint64_t>::max() - p_.value()) / (q * q);
}

std::vector<std::uint64_t> EchelonBasis::reduce(std::span<const Residue> row) const {
  if (row.size() != cols_) throw std::invalid_argument("EchelonBasis: row width mismatch");
  const std::uint64_t p = p_.value();
  std::vector<std::uint64_t> acc(row.begin(), row.end());
  std::uint64_t pending = 0;
  for (const Pivot& pivot : pivots_) {
    const std::uint64_t c = acc[pivot.col] % p;
    if (c == 0) {
      acc[pivot.col] = 0;
      continue;
    }
    if (pending == lazy_budget_) {
      for (std::size_t j = pivot.col; j < cols_; ++j) acc[j] %= p;
      pending = 0;
    }
    const std::uint64_t factor = p - c;
    const Residue* src = pivot.row.data();
    std::uint64_t* dst = acc.data();
    for (std::size_t j = pivot.col; j < cols_; ++j) dst[j] += factor * src[j];
    ++pending;
  }
  for (auto& v : acc) v %= p;
  return acc;
}

bool EchelonBasis::insert(std::span<const Residue> row) {
  auto acc = reduce(row);
  auto lead = std::find_if(acc.begin(), acc.end(), [](std::uint64_t v) { return v != 0; });
  if (lead == acc.end()) return false;

  const auto col = static_cast<std::size_t>(lead - acc.begin());
  const Residue scale = p_.inv(static_cast<Residue>(*lead));
  Pivot pivot{col, std::vector<Residue>(cols_, 0)};
  for (std::size_t j = col; j < cols_; ++j)
    pivot.row[j] = p_.mul(static_cast<Residue>(acc[j]), scale);

  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col,
                              [](const Pivot& p, std::size_t c) { return p.col < c; });
  pivots_.insert(pos, std::move(pivot));
  return true;
}

bool EchelonBasis::contains(std::span<const Residue> row) const {
  auto acc = reduce(row);
  return std::all_of(acc.begin(), acc.end(), [](std::uint64_t v) { return v == 0; });
}

std::size_t rank_mod_p(const DenseMatrix& m, const PrimeModulus& p) {
  EchelonBasis basis(m.cols(), p);
  for (std::size_t r = 0; r < m.rows() && basis.rank() < m.cols(); ++r) basis.insert(m.row(r));
  return basis.rank();
}

Residue det_mod_p(DenseMatrix m, const PrimeModulus& p) {
  if (!m.is_square()) throw std::invalid_argument("det_mod_p: matrix is not square");
  const std::size_t n = m.rows();
  Residue det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m(r, c) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(r, j), m(c, j));
      det = p.neg(det);
    }
    det = p.mul(det, m(c, c));
    const Residue inv = p.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Residue f = p.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = p.sub(m(i, j), p.mul(f, m(c, j)));
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Exact integer routines

ExactInt det_exact(const IntMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("det_exact: matrix is not square");
  const std::size_t n = input.rows();
  if (n > kMaxExactDeterminant)
    throw std::invalid_argument("det_exact: size " + std::to_string(n) + " exceeds limit");
  if (n == 0) return 1;

  IntMatrix m = input;
  ExactInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ExactInt v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank_exact(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = input(r, c);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && a[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(a[r], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::uint64_t cube_root_exponent(const PrimeModulus& p) {
  if (!p.supports_cube_roots())
    throw std::invalid_argument("cube roots need p = 2 (mod 3); got p = " +
                                std::to_string(p.value()));
  // p - 1 = 1 (mod 3), so 3 * (2(p-1)+1)/3 = 1 (mod p-1).
  const std::uint64_t order = p.value() - 1ull;
  return (2 * order + 1) / 3;
}

Residue cube_root_mod_p(Residue c, const PrimeModulus& p) {
  return p.pow(c % p.value(), cube_root_exponent(p));
}

ExactInt integer_cube_root_signed(const ExactInt& c) {
  ExactInt root;
  if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), 3) == 0)
    throw NotACube(c.get_str() + " is not a perfect cube");
  return root;
}

}  // namespace secant
