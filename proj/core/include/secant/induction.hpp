#pragma once

// Six-step induction for sigma_s(Gr(2,n)): closed-form thresholds, the
// specialized base-case rank checks on codimension-six coordinate
// subspaces, the arithmetic step inequalities, and the assembled certificate.
//
// All formulas are evaluated in exact rational arithmetic and floored or
// ceiled last.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "secant/field.hpp"
#include "secant/terracini.hpp"

namespace secant {

using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);

namespace formulas {

/// Smallest n accepted by the threshold formulas.
inline constexpr std::int64_t kMinN = 9;

/// C(n+1, 3).
std::int64_t cube_dim(std::int64_t n);

std::int64_t f1(std::int64_t n);
std::int64_t f2(std::int64_t n);
/// Lower threshold: expected dimension for s <= s1(n).
std::int64_t s1(std::int64_t n);
/// Upper threshold: fills for s >= s2(n).
std::int64_t s2(std::int64_t n);
/// The same thresholds written as a sum of two separately rounded terms.
std::int64_t s1_intro(std::int64_t n);
std::int64_t s2_intro(std::int64_t n);

/// floor / ceil of (6n-13)/9 and (6n-49)/9.
std::int64_t free_points_floor(std::int64_t n);
std::int64_t free_points_ceil(std::int64_t n);
std::int64_t step_points_floor(std::int64_t n);
std::int64_t step_points_ceil(std::int64_t n);

struct RankBounds {
  std::uint64_t generic_lower = 0;        // ceil(C(n+1,k+1) / ((k+1)(n-k)+1))
  std::optional<Rational> ehrenborg_upper;  // (n^2+3)/12 + 1, k = 2 only
};
RankBounds bounds(std::int64_t n, int k);

}  // namespace formulas

enum class Variant { Floor, Ceil };
std::string to_string(Variant v);

/// One replicated base-case rank computation.
struct PropCheck {
  std::string proposition;  // "A", "B" or "C"
  int n = 0;
  Variant variant = Variant::Floor;
  int constrained_points = 0;
  int free_points = 0;
  std::uint64_t ambient = 0;
  std::uint64_t span_rank = 0;
  std::uint64_t achieved = 0;
  std::uint64_t target = 0;             // from the closed-form residual
  std::int64_t formula_residual = 0;    // may be negative when over-determined
  std::uint64_t generic_expected = 0;   // from per-point contribution counting
  std::vector<std::uint64_t> marginal_gains;
  bool pass = false;
};

/// Three codimension-six spans with four points on each; target C(n+1,3).
PropCheck check_prop_a(int n, PrimeModulus prime, std::uint64_t seed);
/// Two codimension-six spans, floor/ceil((6n-49)/9) points on each, 4 free.
PropCheck check_prop_b(int n, Variant variant, PrimeModulus prime, std::uint64_t seed);
/// One codimension-six span with f1(n)/f2(n) points on it and
/// floor/ceil((6n-13)/9) free points.
PropCheck check_prop_c(int n, Variant variant, PrimeModulus prime, std::uint64_t seed);

struct ChainCheck {
  int n = 0;
  bool f1_step = false;  // f1(n) - floor((6n-49)/9) <= f1(n-6)
  bool f2_step = false;  // f2(n-6) <= f2(n) - ceil((6n-49)/9)
  bool s1_step = false;  // s1(n) - s1(n-6) <= floor((6n-13)/9)
  bool s2_step = false;  // ceil((6n-13)/9) <= s2(n) - s2(n-6)
  bool all() const { return f1_step && f2_step && s1_step && s2_step; }
};
ChainCheck chain_inequalities(int n);

struct DirectProbe {
  int n = 0;
  std::string threshold;  // "s1" or "s2"
  SpanVerdict verdict;
  bool pass = false;
};

struct InductionCertificate {
  int n_max = 0;
  PrimeModulus prime{};
  std::uint64_t seed = 0;
  std::vector<PropCheck> base_cases;
  std::vector<DirectProbe> direct_probes;
  std::vector<ChainCheck> chain;
  std::optional<std::pair<int, int>> conclusion;

  bool all_pass() const;
};

/// Direct probe of sigma_s(Gr(2,n)) at s = s1(n) or s2(n). The s1 probe must
/// be certified; the s2 probe must certify filling.
DirectProbe threshold_probe(int n, const std::string& threshold, PrimeModulus prime, std::uint64_t seed);

/// Runs every base case (props A at 17, B at 11..16 and C at 9..14 in both
/// variants, direct threshold probes at 9..14) and the step inequalities for
/// 15 <= n <= n_max. Requires n_max >= 14.
InductionCertificate certify_theorem(int n_max, PrimeModulus prime, std::uint64_t seed);

}  // namespace secant
