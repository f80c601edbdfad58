#include "secant/terracini.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "secant/codes.hpp"

namespace secant {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

VerdictKind classify_rank(std::uint64_t achieved, std::uint64_t expected, std::uint64_t ambient) {
  if (achieved < expected) return VerdictKind::InconclusiveDeficit;
  return expected == ambient ? VerdictKind::CertifiedFills : VerdictKind::CertifiedExpected;
}

const std::optional<CoordinateSubspace>& constraint_of(const SecantProblem& p, int i) {
  static const std::optional<CoordinateSubspace> none;
  return p.point_constraints.empty() ? none : p.point_constraints[i];
}

struct TrialOutcome {
  std::uint64_t rank = 0;
  std::uint64_t span_rank = 0;
  std::vector<std::uint64_t> gains;
};

TrialOutcome run_random_trial(const SecantProblem& p, int trial) {
  std::mt19937_64 rng(trial_seed(p.seed, trial));
  EchelonBasis basis(binomial(p.n + 1, p.k + 1), p.prime);
  TrialOutcome out;
  for (const auto& span : p.extra_spans) append_coordinate_vectors(subgrassmannian_span(span, p.k + 1), basis);
  out.span_rank = basis.rank();
  for (int i = 0; i < p.s; ++i) {
    const GrassPoint pt = random_point(p.k, p.n, constraint_of(p, i), rng, p.prime);
    out.gains.push_back(append_tangent_frame(pt, basis));
  }
  out.rank = basis.rank();
  return out;
}

std::uint64_t monomial_rank(const SecantProblem& p, const CodeSet& code) {
  EchelonBasis basis(binomial(p.n + 1, p.k + 1), p.prime);
  for (int i = 0; i < p.s; ++i) append_tangent_frame(coordinate_point(code.words[i], p.n, p.prime), basis);
  return basis.rank();
}

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Random: return "random";
    case Strategy::Monomial: return "monomial";
    case Strategy::Auto: return "auto";
  }
  return "?";
}

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::CertifiedExpected: return "CertifiedExpected";
    case VerdictKind::CertifiedFills: return "CertifiedFills";
    case VerdictKind::InconclusiveDeficit: return "InconclusiveDeficit";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "random") return Strategy::Random;
  if (s == "monomial") return Strategy::Monomial;
  if (s == "auto") return Strategy::Auto;
  throw std::invalid_argument("unknown strategy '" + s + "' (expected random|monomial|auto)");
}

void SecantProblem::validate() const {
  if (k < 1) throw std::invalid_argument("SecantProblem: need k >= 1");
  if (n <= k) throw std::invalid_argument("SecantProblem: need n > k");
  if (n + 1 > kMaxDim) throw std::invalid_argument("SecantProblem: n too large");
  if (s < 1) throw std::invalid_argument("SecantProblem: need s >= 1");
  if (trials < 1) throw std::invalid_argument("SecantProblem: need trials >= 1");
  if (!point_constraints.empty() && point_constraints.size() != static_cast<std::size_t>(s))
    throw std::invalid_argument("SecantProblem: point_constraints must have one entry per point");
  for (const auto& c : point_constraints)
    if (c && (c->n != n || c->dimension() < k + 1))
      throw std::invalid_argument("SecantProblem: constraint support too small or in the wrong space");
  for (const auto& span : extra_spans)
    if (span.n != n) throw std::invalid_argument("SecantProblem: extra span lives in another space");
}

std::uint64_t expected_affine_dim(int k, int n, int s) {
  return std::min<std::uint64_t>(static_cast<std::uint64_t>(s) * tangent_dimension(k, n), binomial(n + 1, k + 1));
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

SpanVerdict probe(const SecantProblem& problem) {
  problem.validate();
  if (!problem.extra_spans.empty()) return probe_with_specialization(problem).verdict;
  SpanVerdict v;
  v.k = problem.k;
  v.n = problem.n;
  v.s = problem.s;
  v.ambient = binomial(problem.n + 1, problem.k + 1);
  v.expected_rank = expected_affine_dim(problem.k, problem.n, problem.s);

  const bool unconstrained = std::none_of(problem.point_constraints.begin(), problem.point_constraints.end(),
                                          [](const auto& c) { return c.has_value(); });
  if (problem.strategy != Strategy::Random) {
    if (!unconstrained) throw std::invalid_argument("probe: monomial strategy needs an unconstrained problem");
    std::optional<CodeSet> code = problem.k >= 2 ? monomial_certificate(problem.k, problem.n, problem.s) : std::nullopt;
    if (code) {
      v.strategy_used = Strategy::Monomial;
      v.trials_used = 1;
      v.achieved_rank = monomial_rank(problem, *code);
      v.kind = classify_rank(v.achieved_rank, v.expected_rank, v.ambient);
      if (v.certified() || problem.strategy == Strategy::Monomial) return v;
    } else if (problem.strategy == Strategy::Monomial) {
      throw std::invalid_argument("probe: no monomial certificate for this (k, n, s)");
    }
  }

  v.strategy_used = Strategy::Random;
  v.achieved_rank = 0;
  for (int t = 0; t < problem.trials; ++t) {
    v.trials_used = t + 1;
    v.achieved_rank = std::max(v.achieved_rank, run_random_trial(problem, t).rank);
    if (v.achieved_rank >= v.expected_rank) break;
  }
  v.kind = classify_rank(v.achieved_rank, v.expected_rank, v.ambient);
  return v;
}

SpecializedVerdict probe_with_specialization(const SecantProblem& problem) {
  problem.validate();
  const int k = problem.k;
  const int n = problem.n;

  std::uint64_t contributions = 0;
  for (int i = 0; i < problem.s; ++i) {
    const auto& c = constraint_of(problem, i);
    if (!c) {
      contributions += tangent_dimension(k, n);
      continue;
    }
    const bool inside = std::any_of(problem.extra_spans.begin(), problem.extra_spans.end(),
                                    [&](const CoordinateSubspace& L) { return c->support.subset_of(L.support); });
    if (!inside)
      throw std::invalid_argument("probe_with_specialization: constrained point " + std::to_string(i) +
                                  " is not inside any extra span");
    contributions += static_cast<std::uint64_t>(k + 1) * static_cast<std::uint64_t>(n + 1 - c->dimension());
  }

  SpecializedVerdict out;
  out.verdict.k = k;
  out.verdict.n = n;
  out.verdict.s = problem.s;
  out.verdict.ambient = binomial(n + 1, k + 1);
  out.verdict.strategy_used = Strategy::Random;

  for (int t = 0; t < problem.trials; ++t) {
    TrialOutcome trial = run_random_trial(problem, t);
    out.span_rank = trial.span_rank;
    out.verdict.expected_rank = std::min(out.verdict.ambient, trial.span_rank + contributions);
    out.verdict.trials_used = t + 1;
    if (t == 0 || trial.rank > out.verdict.achieved_rank) {
      out.verdict.achieved_rank = trial.rank;
      out.marginal_gains = std::move(trial.gains);
    }
    if (out.verdict.achieved_rank >= out.verdict.expected_rank) break;
  }
  out.verdict.kind = classify_rank(out.verdict.achieved_rank, out.verdict.expected_rank, out.verdict.ambient);
  out.residual_dimension = out.verdict.ambient - out.verdict.achieved_rank;
  return out;
}

ImpliedRange monotone_extend(const SpanVerdict& verdict) {
  switch (verdict.kind) {
    case VerdictKind::CertifiedExpected: return {verdict.kind, 1, verdict.s};
    case VerdictKind::CertifiedFills: return {verdict.kind, verdict.s, std::nullopt};
    case VerdictKind::InconclusiveDeficit: break;
  }
  throw std::invalid_argument("monotone_extend: inconclusive verdicts imply nothing");
}

}  // namespace secant
