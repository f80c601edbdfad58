#pragma once

// Exterior algebra of K^dim: subsets of coordinates as bitmasks, colex
// ranking, sparse multivectors over a coefficient ring, and the wedge pairing.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "secant/field.hpp"

namespace secant {

/// Maximum ambient dimension (number of coordinates) an IndexSet can address.
inline constexpr int kMaxDim = 64;

/// C(n, k) with C(n, k) = 0 for k < 0 or k > n. Throws on overflow.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// A set of coordinate indices in [0, kMaxDim), stored as a bitmask.
/// Comparing the masks as integers is exactly colexicographic order.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> indices) : IndexSet(std::span<const int>(indices.begin(), indices.size())) {}
  explicit IndexSet(std::span<const int> indices);

  /// {first, first+1, ..., last}; empty when last < first.
  static IndexSet range(int first, int last);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  /// Largest index, or -1 when empty.
  constexpr int max() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }
  /// Number of elements strictly below i.
  constexpr int position(int i) const {
    return std::popcount(bits_ & ((std::uint64_t{1} << i) - 1));
  }

  std::vector<int> indices() const;
  std::string to_string() const;

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet without(int i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr IndexSet with(int i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Sign (+1 or -1) of the shuffle placing the elements of a before those of
/// b into increasing order; 0 when a and b intersect.
int merge_sign(IndexSet a, IndexSet b);

/// Sign of the permutation sorting seq, or 0 when seq has a repeated entry.
int sort_sign(std::span<const int> seq);

/// Colex rank among the d-subsets of [0, n], d = s.size().
std::uint64_t rank_of_subset(IndexSet s);
/// Inverse of rank_of_subset; throws std::out_of_range when rank >= C(n+1, d).
IndexSet unrank_subset(std::uint64_t rank, int n, int d);

/// All d-subsets of `support` in colex order.
std::vector<IndexSet> subsets_of(IndexSet support, int d);

// ---------------------------------------------------------------------------
// Coefficient rings

/// GF(p) coefficients.
struct ModRing {
  using Scalar = Residue;
  PrimeModulus modulus;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(std::int64_t v) const { return modulus.reduce(v); }
  bool is_zero(Scalar a) const { return a == 0; }
  Scalar add(Scalar a, Scalar b) const { return modulus.add(a, b); }
  Scalar mul(Scalar a, Scalar b) const { return modulus.mul(a, b); }
  Scalar neg(Scalar a) const { return modulus.neg(a); }
  Scalar signed_scalar(int sign, Scalar a) const { return sign < 0 ? neg(a) : a; }
  Scalar determinant(Matrix<Scalar> m) const { return det_mod_p(std::move(m), modulus); }
};

/// Exact integer coefficients.
struct IntRing {
  using Scalar = ExactInt;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(std::int64_t v) const { return Scalar(static_cast<long>(v)); }
  bool is_zero(const Scalar& a) const { return a == 0; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar signed_scalar(int sign, const Scalar& a) const { return sign < 0 ? Scalar(-a) : a; }
  Scalar determinant(const Matrix<Scalar>& m) const { return det_exact(m); }
};

// ---------------------------------------------------------------------------
// Multivector

/// Sparse homogeneous element of the degree-`degree` exterior power of
/// Ring^dim. Zero coefficients are never stored.
template <class Ring>
class Multivector {
 public:
  using Scalar = typename Ring::Scalar;
  using Terms = std::map<IndexSet, Scalar>;

  Multivector(int dim, int degree, Ring ring = Ring{}) : dim_(dim), degree_(degree), ring_(ring) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("Multivector: dimension out of range");
    if (degree < 0 || degree > dim) throw std::invalid_argument("Multivector: degree out of range");
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(IndexSet s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  /// Adds c to the coefficient of s.
  void add(IndexSet s, const Scalar& c) {
    if (s.size() != degree_ || s.max() >= dim_)
      throw std::invalid_argument("Multivector::add: index set " + s.to_string() +
                                  " does not fit degree/dimension");
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    require_compatible(o);
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }

  Multivector scaled(const Scalar& c) const {
    Multivector out(dim_, degree_, ring_);
    for (const auto& [s, v] : terms_) out.add(s, ring_.mul(c, v));
    return out;
  }

  /// Dense coefficient vector indexed by colex rank.
  std::vector<Scalar> dense() const {
    std::vector<Scalar> out(binomial(dim_, degree_), ring_.zero());
    for (const auto& [s, c] : terms_) out[rank_of_subset(s)] = c;
    return out;
  }

  bool operator==(const Multivector& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

  void require_compatible(const Multivector& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_)
      throw std::invalid_argument("Multivector: incompatible operands");
  }

 private:
  int dim_;
  int degree_;
  Ring ring_;
  Terms terms_;
};

using ModMultivector = Multivector<ModRing>;
using IntMultivector = Multivector<IntRing>;

/// Single basis element e_S.
template <class Ring>
Multivector<Ring> basis_multivector(int dim, IndexSet s, Ring ring = Ring{}) {
  Multivector<Ring> out(dim, s.size(), ring);
  out.add(s, ring.one());
  return out;
}

/// Exterior product. Throws when degrees overflow the dimension.
template <class Ring>
Multivector<Ring> wedge(const Multivector<Ring>& a, const Multivector<Ring>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  if (a.degree() + b.degree() > a.dim()) throw std::invalid_argument("wedge: degree overflow");
  const Ring& ring = a.ring();
  Multivector<Ring> out(a.dim(), a.degree() + b.degree(), ring);
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      const int sign = merge_sign(sa, sb);
      if (sign == 0) continue;
      out.add(sa | sb, ring.signed_scalar(sign, ring.mul(ca, cb)));
    }
  }
  return out;
}

/// Degree-one multivector with the given coordinates.
template <class Ring>
Multivector<Ring> vector_multivector(std::span<const typename Ring::Scalar> v, Ring ring = Ring{}) {
  Multivector<Ring> out(static_cast<int>(v.size()), 1, ring);
  for (std::size_t i = 0; i < v.size(); ++i) out.add(IndexSet{static_cast<int>(i)}, v[i]);
  return out;
}

/// v_0 ^ ... ^ v_{d-1}: the coefficient at I is the d x d minor of the
/// stacked row matrix on the columns I.
template <class Ring>
Multivector<Ring> wedge_vectors(const Matrix<typename Ring::Scalar>& rows, Ring ring = Ring{}) {
  const int d = static_cast<int>(rows.rows());
  const int dim = static_cast<int>(rows.cols());
  if (d > dim) throw std::invalid_argument("wedge_vectors: more vectors than coordinates");
  Multivector<Ring> out(dim, d, ring);
  Matrix<typename Ring::Scalar> minor(d, d);
  for (IndexSet cols : subsets_of(IndexSet::range(0, dim - 1), d)) {
    const auto idx = cols.indices();
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) minor(r, c) = rows(r, idx[c]);
    out.add(cols, ring.determinant(minor));
  }
  return out;
}

/// Image of w under the linear map with matrix g (columns are images of the
/// basis vectors): sum of w_S times the wedge of g's columns in S.
template <class Ring>
Multivector<Ring> transform(const Multivector<Ring>& w, const Matrix<typename Ring::Scalar>& g) {
  const int dim = w.dim();
  if (static_cast<int>(g.rows()) != dim || static_cast<int>(g.cols()) != dim)
    throw std::invalid_argument("transform: matrix size mismatch");
  const Ring& ring = w.ring();
  Multivector<Ring> out(dim, w.degree(), ring);
  for (const auto& [s, c] : w.terms()) {
    const auto idx = s.indices();
    Matrix<typename Ring::Scalar> cols(idx.size(), dim);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (int j = 0; j < dim; ++j) cols(r, j) = g(j, idx[r]);
    out += wedge_vectors(cols, ring).scaled(c);
  }
  return out;
}

inline constexpr int kPairingDim = 7;
inline constexpr int kPairingSize = 21;

/// The 21 x 21 matrix M of the pairing (eta, eta') -> eta ^ eta' ^ w for a
/// 3-vector w on K^7: M[rank(eta'), rank(eta)] is the coefficient of
/// e_0 ^ ... ^ e_6 in eta ^ eta' ^ w. Rows and columns follow colex order of
/// the 2-subsets.
template <class Ring>
Matrix<typename Ring::Scalar> pairing_matrix(const Multivector<Ring>& w) {
  if (w.dim() != kPairingDim || w.degree() != 3)
    throw std::invalid_argument("pairing_matrix: need a 3-vector on K^7");
  const Ring& ring = w.ring();
  Matrix<typename Ring::Scalar> m(kPairingSize, kPairingSize, ring.zero());
  const IndexSet all = IndexSet::range(0, kPairingDim - 1);
  for (const auto& [t, c] : w.terms()) {
    const IndexSet rest(all.bits() & ~t.bits());
    for (IndexSet eta : subsets_of(rest, 2)) {
      const IndexSet eta2(rest.bits() & ~eta.bits());
      const int sign = merge_sign(eta, eta2) * merge_sign(eta | eta2, t);
      auto& entry = m(rank_of_subset(eta2), rank_of_subset(eta));
      entry = ring.add(entry, ring.signed_scalar(sign, c));
    }
  }
  return m;
}

}  // namespace secant
