#include "secant/gr26.hpp"

#include <algorithm>
#include <stdexcept>

#include "secant/grassmann.hpp"

namespace secant {

IntMultivector three_form(std::initializer_list<LabelledTerm> terms) {
  IntMultivector w(kPairingDim, 3);
  for (const auto& t : terms) {
    std::array<int, 3> idx{};
    for (int i = 0; i < 3; ++i) {
      if (t.labels[i] < 1 || t.labels[i] > kPairingDim)
        throw std::invalid_argument("three_form: labels must lie in 1..7");
      idx[i] = t.labels[i] - 1;
    }
    const int sign = sort_sign(idx);
    if (sign == 0) throw std::invalid_argument("three_form: repeated label");
    w.add(IndexSet(std::span<const int>(idx)), ExactInt(static_cast<long>(sign * t.coefficient)));
  }
  return w;
}

IntMultivector fano_tensor() {
  return three_form({{{1, 3, 5}, 1}, {{1, 4, 7}, 1}, {{1, 2, 6}, 1}, {{2, 3, 4}, 1}, {{5, 6, 7}, 1}});
}

ContractionMatrix::ContractionMatrix(const IntMultivector& w) : source_(w), exact_(pairing_matrix(w)) {}

std::size_t ContractionMatrix::rank_exact() const { return secant::rank_exact(exact_); }

std::size_t ContractionMatrix::rank_mod_p(const PrimeModulus& p) const { return secant::rank_mod_p(mod_p(p), p); }

ExactInt ContractionMatrix::determinant() const { return det_exact(exact_); }

bool ContractionMatrix::symmetric() const { return exact_ == exact_.transposed(); }

std::size_t contraction_rank_mod_p(const ModMultivector& w) {
  return rank_mod_p(pairing_matrix(w), w.ring().modulus);
}

namespace {

void set_flags(MembershipReport& r) {
  r.in_grassmannian = r.rank <= kGrassmannRank;
  r.in_sigma2 = r.rank <= kSecant2Rank;
  r.in_sigma3 = r.rank <= kSecant3Rank;
}

}  // namespace

MembershipReport classify(const IntMultivector& w, PrimeModulus p) {
  const ContractionMatrix m(w);
  MembershipReport r;
  r.rank = m.rank_exact();
  set_flags(r);
  r.p7_exact = p7(w);
  r.p7_mod_p = p.reduce(*r.p7_exact);
  r.prime = p.value();
  return r;
}

MembershipReport classify(const ModMultivector& w) {
  MembershipReport r;
  r.rank = contraction_rank_mod_p(w);
  set_flags(r);
  r.p7_mod_p = p7_mod_p(w);
  r.prime = w.ring().modulus.value();
  return r;
}

ExactInt p7(const IntMultivector& w) {
  const ExactInt det = ContractionMatrix(w).determinant();
  if (mpz_odd_p(det.get_mpz_t())) throw std::logic_error("p7: determinant " + det.get_str() + " is odd");
  return integer_cube_root_signed(ExactInt(det / 2));
}

Residue p7_mod_p(const ModMultivector& w) {
  const PrimeModulus& p = w.ring().modulus;
  const Residue det = det_mod_p(pairing_matrix(w), p);
  return cube_root_mod_p(p.mul(det, p.inv(2)), p);
}

FiveTermIdentity five_term_identity(const ExactInt& a135, const ExactInt& a147, const ExactInt& a126,
                                    const ExactInt& a234, const ExactInt& a567) {
  IntMultivector w(kPairingDim, 3);
  w.add(IndexSet{0, 2, 4}, a135);
  w.add(IndexSet{0, 3, 6}, a147);
  w.add(IndexSet{0, 1, 5}, a126);
  w.add(IndexSet{1, 2, 3}, a234);
  w.add(IndexSet{4, 5, 6}, a567);
  const ExactInt base = a234 * a234 * a567 * a567 * a135 * a147 * a126;
  return {ContractionMatrix(w).determinant(), ExactInt(-2 * base * base * base)};
}

IntMultivector random_decomposable_sum(int terms, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  IntMultivector sum(kPairingDim, 3);
  for (int t = 0; t < terms; ++t) {
    IntMatrix rows(3, kPairingDim);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < kPairingDim; ++c) rows(r, c) = coord(rng);
    sum += wedge_vectors(rows, IntRing{});
  }
  return sum;
}

IntMultivector random_three_form(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  IntMultivector w(kPairingDim, 3);
  for (IndexSet s : subsets_of(IndexSet::range(0, kPairingDim - 1), 3)) w.add(s, coef(rng));
  return w;
}

IntMatrix random_unimodular(int dim, std::mt19937_64& rng, int steps) {
  if (dim < 2) throw std::invalid_argument("random_unimodular: need dim >= 2");
  IntMatrix g(dim, dim, 0);
  for (int i = 0; i < dim; ++i) g(i, i) = 1;
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::uniform_int_distribution<long> factor(-2, 2);
  for (int step = 0; step < steps; ++step) {
    const int i = pick(rng);
    int j = pick(rng);
    if (j == i) j = (i + 1) % dim;
    const ExactInt c = factor(rng);
    for (int col = 0; col < dim; ++col) g(i, col) += c * g(j, col);
  }
  return g;
}

std::vector<OrbitRepresentative> figure1_table(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OrbitRepresentative> out;
  auto add = [&](std::string name, std::string description, IntMultivector w, std::size_t expected) {
    const std::size_t rank = ContractionMatrix(w).rank_exact();
    out.push_back({std::move(name), std::move(description), std::move(w), expected, rank});
  };
  add("grassmannian", "e123", three_form({{{1, 2, 3}, 1}}), 6);
  add("e1-wedge-rank4", "e123 + e145", three_form({{{1, 2, 3}, 1}, {{1, 4, 5}, 1}}), 10);
  add("tangential", "e126 + e153 + e423", three_form({{{1, 2, 6}, 1}, {{1, 5, 3}, 1}, {{4, 2, 3}, 1}}), 12);
  add("secant-2", "e123 + e456", three_form({{{1, 2, 3}, 1}, {{4, 5, 6}, 1}}), 12);
  add("rank15-a", "e376 - e315 - e342 - e612",
      three_form({{{3, 7, 6}, 1}, {{3, 1, 5}, -1}, {{3, 4, 2}, -1}, {{6, 1, 2}, -1}}), 15);
  add("rank15-b", "e123 + e145 + e167", three_form({{{1, 2, 3}, 1}, {{1, 4, 5}, 1}, {{1, 6, 7}, 1}}), 15);
  add("rank16", "e123 + e456 + e147", three_form({{{1, 2, 3}, 1}, {{4, 5, 6}, 1}, {{1, 4, 7}, 1}}), 16);
  add("secant-3", "sum of three random decomposable 3-vectors", random_decomposable_sum(3, rng), 18);
  add("generic", "e135 + e147 + e126 + e234 + e567", fano_tensor(), 21);
  return out;
}

namespace {

// Affine span of a list of multivectors over GF(p).
EchelonBasis span_of(const std::vector<ModMultivector>& vs, std::size_t cols, const PrimeModulus& p) {
  EchelonBasis b(cols, p);
  for (const auto& v : vs) b.insert(v.dense());
  return b;
}

// dim(T + S) for the tangent space T at pt and the span S of `special`.
std::size_t joint_rank(const GrassPoint& pt, const std::vector<ModMultivector>& special) {
  EchelonBasis b = span_of(special, binomial(pt.n() + 1, pt.k() + 1), pt.modulus());
  append_tangent_frame(pt, b);
  return b.rank();
}

// Row matrix [x_0 I | x_1 I | ...] with identity blocks of size k+1.
DenseMatrix block_rows(int k, const std::vector<Residue>& params) {
  const int blocks = static_cast<int>(params.size());
  DenseMatrix rows(k + 1, static_cast<std::size_t>(k + 1) * blocks);
  for (int r = 0; r <= k; ++r)
    for (int b = 0; b < blocks; ++b) rows(r, b * (k + 1) + r) = params[b];
  return rows;
}

// The coordinate points <e_{b(k+1)}, .., e_{b(k+1)+k}> for each block b,
// followed by the point spanned by the row sums e_r + e_{r+k+1} + ...
std::vector<GrassPoint> defining_points(int k, int blocks, const PrimeModulus& p) {
  const int n = (k + 1) * blocks - 1;
  std::vector<GrassPoint> pts;
  for (int b = 0; b < blocks; ++b) pts.push_back(coordinate_point(IndexSet::range(b * (k + 1), b * (k + 1) + k), n, p));
  DenseMatrix diagonal(k + 1, n + 1);
  for (int c = 0; c <= n; ++c) diagonal(c % (k + 1), c) = 1;
  pts.emplace_back(k, n, std::move(diagonal), p);
  return pts;
}

SpanDemo run_demo(std::string name, int k, int blocks, std::uint64_t defective_rank, std::uint64_t special_expected,
                  PrimeModulus p, std::uint64_t seed) {
  const int n = (k + 1) * blocks - 1;
  const std::size_t ambient = binomial(n + 1, k + 1);
  const std::uint64_t t = tangent_dimension(k, n);
  SpanDemo demo;
  demo.name = std::move(name);
  demo.special_span_expected = special_expected;

  const auto points = defining_points(k, blocks, p);
  demo.expected_rank = std::min<std::uint64_t>(ambient, points.size() * t);
  EchelonBasis tangents(ambient, p);
  for (const auto& pt : points) append_tangent_frame(pt, tangents);
  demo.tangent_span_rank = tangents.rank();

  // Random points of the curve / surface, then the defining points as images
  // of unit parameter vectors and the all-ones vector.
  std::mt19937_64 rng(seed);
  std::vector<ModMultivector> images;
  demo.samples_on_grassmannian = true;
  for (std::uint64_t i = 0; i < 2 * special_expected; ++i) {
    std::vector<Residue> params(blocks);
    for (auto& x : params) x = uniform_residue(rng, p);
    auto img = wedge_vectors(block_rows(k, params), ModRing{p});
    if (img.is_zero()) continue;
    demo.samples_on_grassmannian = demo.samples_on_grassmannian && is_decomposable(img);
    images.push_back(std::move(img));
  }
  demo.passes_through_points = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Residue> params(blocks, i < static_cast<std::size_t>(blocks) ? 0 : 1);
    if (i < static_cast<std::size_t>(blocks)) params[i] = 1;
    const auto img = wedge_vectors(block_rows(k, params), ModRing{p});
    demo.passes_through_points = demo.passes_through_points && proportional(img, pluecker(points[i]));
  }
  demo.special_span_dim = span_of(images, ambient, p).rank();

  // Each tangent space adds at most dim(T_i + S) - dim(S) to the span S.
  demo.geometric_bound = demo.special_span_dim;
  for (const auto& pt : points) demo.geometric_bound += joint_rank(pt, images) - demo.special_span_dim;

  auto fail = [&](const std::string& what) { demo.failures.push_back(what); };
  if (demo.tangent_span_rank != defective_rank)
    fail("tangent span rank " + std::to_string(demo.tangent_span_rank) + ", expected " + std::to_string(defective_rank));
  if (demo.tangent_span_rank > demo.geometric_bound)
    fail("tangent span rank exceeds the bound " + std::to_string(demo.geometric_bound));
  if (demo.special_span_dim != special_expected)
    fail("special span has dimension " + std::to_string(demo.special_span_dim) + ", expected " +
         std::to_string(special_expected));
  if (!demo.samples_on_grassmannian) fail("a sample is not decomposable");
  if (!demo.passes_through_points) fail("the parametrization misses a defining point");
  return demo;
}

}  // namespace

SpanDemo demo_gr37(PrimeModulus p, std::uint64_t seed) { return run_demo("gr37", 3, 2, 50, 5, p, seed); }

SpanDemo demo_gr28(PrimeModulus p, std::uint64_t seed) { return run_demo("gr28", 2, 3, 74, 10, p, seed); }

}  // namespace secant
