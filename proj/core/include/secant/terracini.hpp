#pragma once

// Secant dimension prober. By Terracini's lemma the affine tangent space of
// the cone over sigma_s(Gr(k,n)) at a general point of the span of P_1..P_s
// is the span of the tangent spaces at the P_i. We stack tangent frames at
// random points over GF(p) and compare the rank to the expected value.
//
// Rank mod p at any particular points can only under-estimate the generic
// rank in characteristic zero, so reaching the expected rank certifies it;
// falling short is only evidence.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secant/field.hpp"
#include "secant/grassmann.hpp"

namespace secant {

enum class Strategy { Random, Monomial, Auto };

enum class VerdictKind { CertifiedExpected, CertifiedFills, InconclusiveDeficit };

std::string to_string(Strategy s);
std::string to_string(VerdictKind v);
Strategy parse_strategy(const std::string& s);

struct SecantProblem {
  int k = 2;
  int n = 6;
  int s = 1;
  PrimeModulus prime{};
  std::uint64_t seed = 0;
  int trials = 3;
  Strategy strategy = Strategy::Random;
  /// Empty, or one entry per point.
  std::vector<std::optional<CoordinateSubspace>> point_constraints;
  std::vector<CoordinateSubspace> extra_spans;

  /// Throws std::invalid_argument when the parameters are inconsistent.
  void validate() const;
};

struct SpanVerdict {
  int k = 0;
  int n = 0;
  int s = 0;
  std::uint64_t achieved_rank = 0;
  std::uint64_t expected_rank = 0;
  std::uint64_t ambient = 0;
  VerdictKind kind = VerdictKind::InconclusiveDeficit;
  int trials_used = 0;
  Strategy strategy_used = Strategy::Random;

  bool certified() const { return kind != VerdictKind::InconclusiveDeficit; }
  std::uint64_t deficit() const { return expected_rank - achieved_rank; }
};

/// min(s((k+1)(n-k)+1), C(n+1,k+1)).
std::uint64_t expected_affine_dim(int k, int n, int s);

/// Seed of trial `trial` derived from the problem seed (splitmix64).
std::uint64_t trial_seed(std::uint64_t seed, int trial);

SpanVerdict probe(const SecantProblem& problem);

struct SpecializedVerdict {
  SpanVerdict verdict;
  std::uint64_t span_rank = 0;           // rank of the extra spans alone
  std::uint64_t residual_dimension = 0;  // ambient - achieved
  std::vector<std::uint64_t> marginal_gains;  // rank added by each point, in order
};

/// Probe with extra coordinate spans stacked first and points placed on
/// constrained supports. The expected rank is
///   min(ambient, span_rank + sum of per-point contributions),
/// where a point constrained to a support of size m inside one of the spans
/// contributes (k+1)(n+1-m) and a free point (k+1)(n-k)+1.
SpecializedVerdict probe_with_specialization(const SecantProblem& problem);

/// Range of s over which a certified verdict extends without recomputation.
struct ImpliedRange {
  VerdictKind kind;
  int s_min;
  std::optional<int> s_max;  // nullopt: unbounded
};

/// CertifiedExpected at s implies expected dimension for 1..s; CertifiedFills
/// at s implies filling for all s' >= s. Throws for inconclusive verdicts.
ImpliedRange monotone_extend(const SpanVerdict& verdict);

}  // namespace secant
