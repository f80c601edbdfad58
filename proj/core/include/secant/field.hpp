#pragma once

// Exact arithmetic substrate: prime fields, dense matrices, incremental
// row echelon forms over GF(p), and exact integer determinants.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace secant {

using ExactInt = mpz_class;
using Residue = std::uint32_t;

/// Thrown when an exact integer has no integral cube root.
class NotACube : public std::domain_error {
 public:
  explicit NotACube(const std::string& what) : std::domain_error(what) {}
};

bool is_prime(std::uint64_t value);

/// An odd prime p < 2^31 together with the arithmetic of GF(p).
class PrimeModulus {
 public:
  static constexpr std::uint32_t kDefault = 32003;
  static constexpr std::uint32_t kSecondDefault = 46337;

  explicit PrimeModulus(std::uint32_t p = kDefault);

  std::uint32_t value() const { return p_; }

  /// True when x -> x^3 is a bijection of GF(p), i.e. p = 2 (mod 3).
  bool supports_cube_roots() const { return p_ % 3 == 2; }

  Residue reduce(std::int64_t x) const {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue reduce(const ExactInt& x) const;

  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue base, std::uint64_t exponent) const;
  /// Multiplicative inverse; throws std::domain_error for zero.
  Residue inv(Residue a) const;

  /// Representative in (-p/2, p/2].
  std::int64_t centered(Residue a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint32_t p_;
};

/// Uniform element of GF(p), drawn by rejection so the stream is portable.
Residue uniform_residue(std::mt19937_64& rng, const PrimeModulus& p);

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const T> values) {
    if (values.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  bool is_square() const { return rows_ == cols_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using DenseMatrix = Matrix<Residue>;
using IntMatrix = Matrix<ExactInt>;

DenseMatrix identity_mod_p(std::size_t n);
DenseMatrix reduce_mod_p(const IntMatrix& m, const PrimeModulus& p);

/// Row echelon basis of a growing subspace of GF(p)^cols.
///
/// Rows are inserted one at a time; each insertion reduces the new row
/// against the stored pivots and keeps it when a nonzero remainder is left.
/// Stored rows are monic and vanish left of their pivot column.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t cols, PrimeModulus p);

  /// Returns true when the row was independent of the current span.
  bool insert(std::span<const Residue> row);
  bool contains(std::span<const Residue> row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  const PrimeModulus& modulus() const { return p_; }

 private:
  struct Pivot {
    std::size_t col;
    std::vector<Residue> row;
  };

  std::vector<std::uint64_t> reduce(std::span<const Residue> row) const;

  std::size_t cols_;
  PrimeModulus p_;
  std::uint64_t lazy_budget_;
  std::vector<Pivot> pivots_;  // sorted by col
};

std::size_t rank_mod_p(const DenseMatrix& m, const PrimeModulus& p);

/// Determinant over GF(p) by Gaussian elimination.
Residue det_mod_p(DenseMatrix m, const PrimeModulus& p);

/// Largest dimension accepted by det_exact.
inline constexpr std::size_t kMaxExactDeterminant = 64;

/// Fraction-free (Bareiss) determinant. Requires a square matrix of size
/// at most kMaxExactDeterminant.
ExactInt det_exact(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank_exact(const IntMatrix& m);

/// The unique x in GF(p) with x^3 = c. Requires p = 2 (mod 3).
Residue cube_root_mod_p(Residue c, const PrimeModulus& p);

/// Exponent e with (c^e)^3 = c for every c in GF(p); p = 2 (mod 3).
std::uint64_t cube_root_exponent(const PrimeModulus& p);

/// Signed integer cube root; throws NotACube when c is not a perfect cube.
ExactInt integer_cube_root_signed(const ExactInt& c);

}  // namespace secant
