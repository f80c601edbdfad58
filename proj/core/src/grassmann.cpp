#include "secant/grassmann.hpp"

#include <string>

namespace secant {

CoordinateSubspace::CoordinateSubspace(int n_, IndexSet support_) : n(n_), support(support_) {
  if (n < 0 || n + 1 > kMaxDim) throw std::invalid_argument("CoordinateSubspace: n out of range");
  if (support.empty()) throw std::invalid_argument("CoordinateSubspace: empty support");
  if (support.max() > n) throw std::invalid_argument("CoordinateSubspace: support exceeds [0, n]");
}

CoordinateSubspace CoordinateSubspace::vanishing_on(int n, IndexSet zeros) {
  return CoordinateSubspace(n, IndexSet(IndexSet::range(0, n).bits() & ~zeros.bits()));
}

GrassPoint::GrassPoint(int k, int n, DenseMatrix rows, PrimeModulus modulus)
    : k_(k), n_(n), rows_(std::move(rows)), modulus_(modulus) {
  if (k < 0 || n < k || n + 1 > kMaxDim) throw std::invalid_argument("GrassPoint: need 0 <= k <= n < 64");
  if (rows_.rows() != static_cast<std::size_t>(k + 1) || rows_.cols() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("GrassPoint: basis matrix must be (k+1) x (n+1)");
  for (std::size_t r = 0; r < rows_.rows(); ++r)
    for (Residue v : rows_.row(r))
      if (v >= modulus_.value()) throw std::invalid_argument("GrassPoint: entries must be reduced");
  if (rank_mod_p(rows_, modulus_) != static_cast<std::size_t>(k + 1))
    throw std::invalid_argument("GrassPoint: rows are linearly dependent");
}

IndexSet GrassPoint::support() const {
  IndexSet s;
  for (std::size_t r = 0; r < rows_.rows(); ++r)
    for (std::size_t c = 0; c < rows_.cols(); ++c)
      if (rows_(r, c) != 0) s = s.with(static_cast<int>(c));
  return s;
}

GrassPoint coordinate_point(IndexSet a, int n, PrimeModulus modulus) {
  const auto idx = a.indices();
  DenseMatrix rows(idx.size(), n + 1);
  for (std::size_t r = 0; r < idx.size(); ++r) rows(r, idx[r]) = 1;
  return GrassPoint(static_cast<int>(idx.size()) - 1, n, std::move(rows), modulus);
}

ModMultivector pluecker(const GrassPoint& pt) {
  return wedge_vectors(pt.rows(), ModRing{pt.modulus()});
}

TangentFrame tangent_frame(const GrassPoint& pt) {
  const int k = pt.k();
  const int n = pt.n();
  const ModRing ring{pt.modulus()};
  TangentFrame frame{pt, {}};
  frame.generators.reserve(static_cast<std::size_t>(k + 1) * (n + 1));

  EchelonBasis basis(binomial(n + 1, k + 1), pt.modulus());
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= n; ++j) {
      DenseMatrix rows = pt.rows();
      for (int c = 0; c <= n; ++c) rows(i, c) = (c == j) ? 1 : 0;
      auto g = wedge_vectors(rows, ring);
      basis.insert(g.dense());
      frame.generators.push_back(std::move(g));
    }
  }
  if (basis.rank() != tangent_dimension(k, n))
    throw RankDrop("tangent frame has rank " + std::to_string(basis.rank()) + ", expected " +
                   std::to_string(tangent_dimension(k, n)));
  return frame;
}

DenseMatrix tangent_frame_rows(const GrassPoint& pt) {
  const int k = pt.k();
  const int n = pt.n();
  const PrimeModulus& p = pt.modulus();
  const auto minors_index = subsets_of(IndexSet::range(0, n), k);
  DenseMatrix out(static_cast<std::size_t>(k + 1) * (n + 1), binomial(n + 1, k + 1));

  DenseMatrix minor(k, k);
  for (int i = 0; i <= k; ++i) {
    for (IndexSet cols : minors_index) {
      const auto idx = cols.indices();
      for (int r = 0, src = 0; src <= k; ++src) {
        if (src == i) continue;
        for (int c = 0; c < k; ++c) minor(r, c) = pt.rows()(src, idx[c]);
        ++r;
      }
      const Residue m = k == 0 ? 1 : det_mod_p(minor, p);
      if (m == 0) continue;
      // v_0 ^ .. e_j (slot i) .. ^ v_k = (-1)^i e_j ^ (wedge of the other rows),
      // and e_j ^ e_J = (-1)^{#J below j} e_{J+j}.
      for (int j = 0; j <= n; ++j) {
        if (cols.contains(j)) continue;
        const IndexSet full = cols.with(j);
        const int sign = ((i + full.position(j)) & 1) ? -1 : 1;
        out(static_cast<std::size_t>(i) * (n + 1) + j, rank_of_subset(full)) = sign < 0 ? p.neg(m) : m;
      }
    }
  }
  return out;
}

std::size_t append_tangent_frame(const GrassPoint& pt, EchelonBasis& basis) {
  const std::size_t before = basis.rank();
  const DenseMatrix rows = tangent_frame_rows(pt);
  for (std::size_t r = 0; r < rows.rows() && basis.rank() < basis.cols(); ++r) basis.insert(rows.row(r));
  return basis.rank() - before;
}

std::vector<IndexSet> monomial_tangent_basis(IndexSet a, int k, int n) {
  if (a.size() != k + 1) throw std::invalid_argument("monomial_tangent_basis: |a| must be k+1");
  std::vector<IndexSet> out;
  for (IndexSet s : subsets_of(IndexSet::range(0, n), k + 1))
    if ((s & a).size() >= k) out.push_back(s);
  return out;
}

GrassPoint random_point(int k, int n, const std::optional<CoordinateSubspace>& constraint,
                        std::mt19937_64& rng, PrimeModulus modulus) {
  const IndexSet support = constraint ? constraint->support : IndexSet::range(0, n);
  if (constraint && constraint->n != n) throw std::invalid_argument("random_point: constraint lives in another space");
  if (support.size() < k + 1)
    throw std::invalid_argument("random_point: support of size " + std::to_string(support.size()) +
                                " cannot hold a " + std::to_string(k + 1) + "-dimensional subspace");
  const auto idx = support.indices();
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    DenseMatrix rows(k + 1, n + 1);
    for (int r = 0; r <= k; ++r)
      for (int c : idx) rows(r, c) = uniform_residue(rng, modulus);
    if (rank_mod_p(rows, modulus) == static_cast<std::size_t>(k + 1))
      return GrassPoint(k, n, std::move(rows), modulus);
  }
  throw std::runtime_error("random_point: no full-rank sample after " + std::to_string(kMaxResample) + " attempts");
}

std::vector<IndexSet> subgrassmannian_span(const CoordinateSubspace& L, int d) {
  if (d > L.dimension()) throw std::invalid_argument("subgrassmannian_span: degree exceeds subspace dimension");
  return subsets_of(L.support, d);
}

std::size_t append_coordinate_vectors(const std::vector<IndexSet>& sets, EchelonBasis& basis) {
  const std::size_t before = basis.rank();
  std::vector<Residue> row(basis.cols(), 0);
  for (IndexSet s : sets) {
    const auto r = rank_of_subset(s);
    if (r >= row.size()) throw std::invalid_argument("append_coordinate_vectors: index set outside ambient space");
    row[r] = 1;
    basis.insert(row);
    row[r] = 0;
  }
  return basis.rank() - before;
}

std::size_t annihilator_dimension(const ModMultivector& w) {
  const int dim = w.dim();
  if (w.degree() == dim) return static_cast<std::size_t>(dim);
  EchelonBasis image(binomial(dim, w.degree() + 1), w.ring().modulus);
  for (int i = 0; i < dim; ++i)
    image.insert(wedge(basis_multivector(dim, IndexSet{i}, w.ring()), w).dense());
  return static_cast<std::size_t>(dim) - image.rank();
}

bool is_decomposable(const ModMultivector& w) {
  return !w.is_zero() && annihilator_dimension(w) == static_cast<std::size_t>(w.degree());
}

bool proportional(const ModMultivector& a, const ModMultivector& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree() || a.is_zero() || b.is_zero()) return false;
  if (a.size() != b.size()) return false;
  const PrimeModulus& p = a.ring().modulus;
  const auto& [s0, b0] = *b.terms().begin();
  const Residue ratio = p.mul(a.coefficient(s0), p.inv(b0));
  if (ratio == 0) return false;
  for (const auto& [s, c] : b.terms())
    if (a.coefficient(s) != p.mul(ratio, c)) return false;
  return true;
}

}  // namespace secant
