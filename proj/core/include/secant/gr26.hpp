#pragma once

// Three-forms on a 7-dimensional space: the symmetric contraction matrix
// phi_w (pairing on 2-vectors through a volume form), the rank thresholds
// 6/12/18 for Gr(2,6) and its secant varieties, the degree-7 invariant P7
// with det(phi_w) = 2 P7(w)^3, and explicit tangent-span computations for
// the defective Gr(3,7) and Gr(2,8) cases.
//
// Labels in the comments below are 1-based (e1..e7); IndexSets are 0-based.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "secant/extalg.hpp"
#include "secant/field.hpp"

namespace secant {

inline constexpr std::size_t kGrassmannRank = 6;
inline constexpr std::size_t kSecant2Rank = 12;
inline constexpr std::size_t kSecant3Rank = 18;

/// 3-vector on K^7 from 1-based labelled terms, e.g. {{1,3,5}, 2} is 2 e135.
struct LabelledTerm {
  std::array<int, 3> labels;
  std::int64_t coefficient;
};
IntMultivector three_form(std::initializer_list<LabelledTerm> terms);

/// e135 + e147 + e126 + e234 + e567.
IntMultivector fano_tensor();

class ContractionMatrix {
 public:
  explicit ContractionMatrix(const IntMultivector& w);

  const IntMultivector& source() const { return source_; }
  const IntMatrix& exact() const { return exact_; }
  DenseMatrix mod_p(const PrimeModulus& p) const { return reduce_mod_p(exact_, p); }

  std::size_t rank_exact() const;
  std::size_t rank_mod_p(const PrimeModulus& p) const;
  ExactInt determinant() const;
  bool symmetric() const;

 private:
  IntMultivector source_;
  IntMatrix exact_;
};

/// Rank of phi_w for a 3-vector with GF(p) coefficients.
std::size_t contraction_rank_mod_p(const ModMultivector& w);

struct MembershipReport {
  std::size_t rank = 0;
  bool in_grassmannian = false;  // rank <= 6
  bool in_sigma2 = false;        // rank <= 12
  bool in_sigma3 = false;        // rank <= 18
  std::optional<ExactInt> p7_exact;
  Residue p7_mod_p = 0;
  std::uint32_t prime = 0;
};

/// Exact rank of phi_w and the derived membership flags, plus P7.
MembershipReport classify(const IntMultivector& w, PrimeModulus p = PrimeModulus{});
/// Same for GF(p) coefficients; p7_exact is left empty.
MembershipReport classify(const ModMultivector& w);

/// Signed integer cube root of det(phi_w)/2. Throws NotACube, or
/// std::logic_error for an odd determinant; neither happens for integral w.
ExactInt p7(const IntMultivector& w);
/// Cube root of det(phi_w)/2 in GF(p); requires p = 2 (mod 3).
Residue p7_mod_p(const ModMultivector& w);

struct FiveTermIdentity {
  ExactInt determinant;
  ExactInt predicted;  // -2 (a234^2 a567^2 a135 a147 a126)^3
  bool holds() const { return determinant == predicted; }
};
FiveTermIdentity five_term_identity(const ExactInt& a135, const ExactInt& a147, const ExactInt& a126,
                                    const ExactInt& a234, const ExactInt& a567);

/// Sum of `terms` decomposable 3-vectors with integer coordinates drawn
/// uniformly from [-bound, bound].
IntMultivector random_decomposable_sum(int terms, std::mt19937_64& rng, int bound = 3);
/// All 35 coefficients uniform in [-bound, bound].
IntMultivector random_three_form(std::mt19937_64& rng, int bound = 9);
/// Random integer matrix of determinant 1 (product of elementary matrices).
IntMatrix random_unimodular(int dim, std::mt19937_64& rng, int steps = 40);

struct OrbitRepresentative {
  std::string name;
  std::string description;
  IntMultivector tensor;
  std::size_t expected_rank;
  std::size_t computed_rank;
  bool matches() const { return expected_rank == computed_rank; }
};

/// Representatives for the rank classes of the SL(7) orbits on 3-vectors.
std::vector<OrbitRepresentative> figure1_table(std::uint64_t seed = 0);

struct SpanDemo {
  std::string name;
  std::uint64_t tangent_span_rank = 0;  // affine
  std::uint64_t expected_rank = 0;      // affine
  std::uint64_t special_span_dim = 0;   // affine span of the curve / surface
  std::uint64_t special_span_expected = 0;
  /// Span of the curve / surface plus what each tangent space adds beyond
  /// its intersection with that span; an upper bound for the tangent span.
  std::uint64_t geometric_bound = 0;
  bool samples_on_grassmannian = false;
  bool passes_through_points = false;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Three points of Gr(3,7) and the rational normal quartic through them.
SpanDemo demo_gr37(PrimeModulus p = PrimeModulus{}, std::uint64_t seed = 0);
/// Four points of Gr(2,8) and the cubic Veronese surface through them.
SpanDemo demo_gr28(PrimeModulus p = PrimeModulus{}, std::uint64_t seed = 0);

}  // namespace secant
