#pragma once

// Points of Gr(k,n) over GF(p) as (k+1) x (n+1) row matrices, their Pluecker
// images, affine tangent frames, and coordinate sub-Grassmannian spans.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "secant/extalg.hpp"
#include "secant/field.hpp"

namespace secant {

/// Thrown when a tangent frame spans less than (k+1)(n-k)+1 dimensions.
class RankDrop : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// dim of the affine tangent space to the cone over Gr(k,n).
constexpr std::uint64_t tangent_dimension(int k, int n) {
  return static_cast<std::uint64_t>(k + 1) * static_cast<std::uint64_t>(n - k) + 1;
}

/// Coordinate subspace of K^{n+1}: vectors vanishing outside `support`.
struct CoordinateSubspace {
  int n = 0;
  IndexSet support;

  CoordinateSubspace() = default;
  CoordinateSubspace(int n, IndexSet support);

  /// Subspace cut out by x_i = 0 for i in `zeros`.
  static CoordinateSubspace vanishing_on(int n, IndexSet zeros);

  int dimension() const { return support.size(); }
  friend bool operator==(const CoordinateSubspace&, const CoordinateSubspace&) = default;
};

class GrassPoint {
 public:
  /// Validates shape and full row rank; throws std::invalid_argument.
  GrassPoint(int k, int n, DenseMatrix rows, PrimeModulus modulus);

  int k() const { return k_; }
  int n() const { return n_; }
  const DenseMatrix& rows() const { return rows_; }
  const PrimeModulus& modulus() const { return modulus_; }

  /// Coordinates where some row is nonzero.
  IndexSet support() const;

 private:
  int k_;
  int n_;
  DenseMatrix rows_;
  PrimeModulus modulus_;
};

/// Coordinate point spanned by e_a for a in `a` (|a| = k+1).
GrassPoint coordinate_point(IndexSet a, int n, PrimeModulus modulus);

ModMultivector pluecker(const GrassPoint& pt);

struct TangentFrame {
  GrassPoint point;
  std::vector<ModMultivector> generators;  // (k+1)(n+1) of them, index i*(n+1)+j
};

/// Generators v_0 ^ .. ^ e_j (slot i) ^ .. ^ v_k for 0 <= i <= k, 0 <= j <= n.
/// Throws RankDrop when their span is not (k+1)(n-k)+1 dimensional.
TangentFrame tangent_frame(const GrassPoint& pt);

/// The same generators as dense colex-indexed rows, computed from the k x k
/// minors of the point; row i*(n+1)+j is generator (i, j).
DenseMatrix tangent_frame_rows(const GrassPoint& pt);

/// Inserts the tangent generators into `basis`; returns the rank gained.
std::size_t append_tangent_frame(const GrassPoint& pt, EchelonBasis& basis);

/// (k+1)-subsets meeting `a` in at least k elements (|a| = k+1).
std::vector<IndexSet> monomial_tangent_basis(IndexSet a, int k, int n);

/// Random point whose rows are supported on `constraint` (or everywhere).
/// Resamples up to kMaxResample times until the rows have full rank.
GrassPoint random_point(int k, int n, const std::optional<CoordinateSubspace>& constraint,
                        std::mt19937_64& rng, PrimeModulus modulus);
inline constexpr int kMaxResample = 8;

/// Basis of the d-th exterior power of a coordinate subspace: all d-subsets
/// of its support.
std::vector<IndexSet> subgrassmannian_span(const CoordinateSubspace& L, int d);

/// Inserts e_I for every I in `sets` into `basis`; returns the rank gained.
std::size_t append_coordinate_vectors(const std::vector<IndexSet>& sets, EchelonBasis& basis);

/// Dimension of {v : v ^ w = 0}; w is decomposable iff this equals deg(w).
std::size_t annihilator_dimension(const ModMultivector& w);
bool is_decomposable(const ModMultivector& w);

/// True when a = c * b for some nonzero c.
bool proportional(const ModMultivector& a, const ModMultivector& b);

}  // namespace secant
