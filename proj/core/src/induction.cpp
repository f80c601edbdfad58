#include "secant/induction.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "secant/extalg.hpp"
#include "secant/grassmann.hpp"

namespace secant {

std::int64_t floor_of(const Rational& q) {
  // boost::rational keeps the denominator positive.
  const auto num = q.numerator();
  const auto den = q.denominator();
  return num >= 0 ? num / den : -((-num + den - 1) / den);
}

std::int64_t ceil_of(const Rational& q) { return -floor_of(-q); }

namespace formulas {

namespace {

void require_range(std::int64_t n) {
  if (n < kMinN) throw std::domain_error("threshold formulas need n >= 9 (got " + std::to_string(n) + ")");
}

Rational r(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

Rational quadratic(std::int64_t n) { return r(n * n, 18); }

}  // namespace

std::int64_t cube_dim(std::int64_t n) { return static_cast<std::int64_t>(binomial(n + 1, 3)); }

std::int64_t f1(std::int64_t n) {
  require_range(n);
  return floor_of(quadratic(n) - r(31 * n, 54) + r(125, 81) - r(n, 6) + r(2));
}

std::int64_t f2(std::int64_t n) {
  require_range(n);
  return ceil_of(quadratic(n) - r(31 * n, 54) + r(125, 81) + r(n, 6) - r(1));
}

std::int64_t s1(std::int64_t n) {
  require_range(n);
  return floor_of(quadratic(n) - r(2 * n, 27) + r(170, 81));
}

std::int64_t s2(std::int64_t n) {
  require_range(n);
  return ceil_of(quadratic(n) + r(7 * n, 27) - r(73, 81));
}

std::int64_t s1_intro(std::int64_t n) {
  require_range(n);
  return floor_of(quadratic(n) - r(20 * n, 27) + r(287, 81)) + free_points_floor(n);
}

std::int64_t s2_intro(std::int64_t n) {
  require_range(n);
  return ceil_of(quadratic(n) - r(11 * n, 27) + r(44, 81)) + free_points_ceil(n);
}

std::int64_t free_points_floor(std::int64_t n) { return floor_of(r(6 * n - 13, 9)); }
std::int64_t free_points_ceil(std::int64_t n) { return ceil_of(r(6 * n - 13, 9)); }
std::int64_t step_points_floor(std::int64_t n) { return floor_of(r(6 * n - 49, 9)); }
std::int64_t step_points_ceil(std::int64_t n) { return ceil_of(r(6 * n - 49, 9)); }

RankBounds bounds(std::int64_t n, int k) {
  if (k < 1 || n <= k) throw std::invalid_argument("bounds: need n > k >= 1");
  RankBounds b;
  const std::uint64_t ambient = binomial(n + 1, k + 1);
  const std::uint64_t t = tangent_dimension(k, static_cast<int>(n));
  b.generic_lower = (ambient + t - 1) / t;
  if (k == 2) b.ehrenborg_upper = r(n * n + 3, 12) + r(1);
  return b;
}

}  // namespace formulas

std::string to_string(Variant v) { return v == Variant::Floor ? "floor" : "ceil"; }

namespace {

using formulas::cube_dim;

constexpr int kTrials = 3;

// Codimension-six coordinate subspace {x_first = ... = x_{first+5} = 0}.
CoordinateSubspace codim_six(int n, int first) {
  return CoordinateSubspace::vanishing_on(n, IndexSet::range(first, first + 5));
}

PropCheck run_check(PropCheck check, const std::vector<CoordinateSubspace>& spans,
                    const std::vector<std::optional<CoordinateSubspace>>& constraints, PrimeModulus prime,
                    std::uint64_t seed) {
  SecantProblem problem;
  problem.k = 2;
  problem.n = check.n;
  problem.s = static_cast<int>(constraints.size());
  problem.prime = prime;
  problem.seed = seed;
  problem.trials = kTrials;
  problem.point_constraints = constraints;
  problem.extra_spans = spans;

  const SpecializedVerdict v = probe_with_specialization(problem);
  check.ambient = v.verdict.ambient;
  check.span_rank = v.span_rank;
  check.achieved = v.verdict.achieved_rank;
  check.generic_expected = v.verdict.expected_rank;
  check.marginal_gains = v.marginal_gains;
  check.pass = check.achieved == check.target;
  return check;
}

std::uint64_t target_from_residual(std::int64_t n, std::int64_t residual) {
  return static_cast<std::uint64_t>(cube_dim(n) - std::max<std::int64_t>(residual, 0));
}

}  // namespace

PropCheck check_prop_a(int n, PrimeModulus prime, std::uint64_t seed) {
  if (n < 17) throw std::invalid_argument("check_prop_a: need n >= 17");
  PropCheck check;
  check.proposition = "A";
  check.n = n;
  check.variant = Variant::Floor;
  const std::vector<CoordinateSubspace> spans{codim_six(n, 0), codim_six(n, 6), codim_six(n, 12)};
  std::vector<std::optional<CoordinateSubspace>> constraints;
  for (int i = 0; i < 4; ++i)
    for (const auto& span : spans) constraints.emplace_back(span);
  check.constrained_points = 12;
  check.free_points = 0;
  // 6^3 hyperplanes contain the three spans; each point imposes 18 conditions.
  check.formula_residual = 216 - 12 * 18;
  check.target = target_from_residual(n, check.formula_residual);
  return run_check(std::move(check), spans, constraints, prime, seed);
}

PropCheck check_prop_b(int n, Variant variant, PrimeModulus prime, std::uint64_t seed) {
  if (n < 11) throw std::invalid_argument("check_prop_b: need n >= 11");
  const std::int64_t s = variant == Variant::Floor ? formulas::step_points_floor(n) : formulas::step_points_ceil(n);
  PropCheck check;
  check.proposition = "B";
  check.n = n;
  check.variant = variant;
  const std::vector<CoordinateSubspace> spans{codim_six(n, 0), codim_six(n, n - 5)};
  std::vector<std::optional<CoordinateSubspace>> constraints;
  for (std::int64_t i = 0; i < s; ++i)
    for (const auto& span : spans) constraints.emplace_back(span);
  for (int i = 0; i < 4; ++i) constraints.emplace_back(std::nullopt);
  check.constrained_points = static_cast<int>(2 * s);
  check.free_points = 4;
  check.formula_residual = 36 * (n - 6) - 36 * s - 4 * (3 * n - 5);
  // The ceiling variant asserts there is no hyperplane left at all.
  check.target = variant == Variant::Floor ? static_cast<std::uint64_t>(cube_dim(n) - check.formula_residual)
                                           : static_cast<std::uint64_t>(cube_dim(n));
  return run_check(std::move(check), spans, constraints, prime, seed);
}

PropCheck check_prop_c(int n, Variant variant, PrimeModulus prime, std::uint64_t seed) {
  if (n < 9) throw std::invalid_argument("check_prop_c: need n >= 9");
  const bool fl = variant == Variant::Floor;
  const std::int64_t f = fl ? formulas::f1(n) : formulas::f2(n);
  const std::int64_t s = fl ? formulas::free_points_floor(n) : formulas::free_points_ceil(n);
  PropCheck check;
  check.proposition = "C";
  check.n = n;
  check.variant = variant;
  const std::vector<CoordinateSubspace> spans{codim_six(n, 0)};
  std::vector<std::optional<CoordinateSubspace>> constraints;
  for (std::int64_t i = 0; i < f; ++i) constraints.emplace_back(spans.front());
  for (std::int64_t i = 0; i < s; ++i) constraints.emplace_back(std::nullopt);
  check.constrained_points = static_cast<int>(f);
  check.free_points = static_cast<int>(s);
  const std::int64_t nn = n;
  check.formula_residual = 3 * nn * nn - 18 * nn + 35 - 18 * f - (3 * nn - 5) * s;
  check.target = fl ? static_cast<std::uint64_t>(cube_dim(n) - check.formula_residual)
                    : static_cast<std::uint64_t>(cube_dim(n));
  return run_check(std::move(check), spans, constraints, prime, seed);
}

ChainCheck chain_inequalities(int n) {
  if (n < formulas::kMinN + 6) throw std::domain_error("chain_inequalities: need n >= 15");
  using namespace formulas;
  ChainCheck c;
  c.n = n;
  c.f1_step = f1(n) - step_points_floor(n) <= f1(n - 6);
  c.f2_step = f2(n - 6) <= f2(n) - step_points_ceil(n);
  c.s1_step = s1(n) - s1(n - 6) <= free_points_floor(n);
  c.s2_step = free_points_ceil(n) <= s2(n) - s2(n - 6);
  return c;
}

bool InductionCertificate::all_pass() const {
  return std::all_of(base_cases.begin(), base_cases.end(), [](const PropCheck& c) { return c.pass; }) &&
         std::all_of(direct_probes.begin(), direct_probes.end(), [](const DirectProbe& d) { return d.pass; }) &&
         std::all_of(chain.begin(), chain.end(), [](const ChainCheck& c) { return c.all(); });
}

DirectProbe threshold_probe(int n, const std::string& threshold, PrimeModulus prime, std::uint64_t seed) {
  if (threshold != "s1" && threshold != "s2") throw std::invalid_argument("threshold must be s1 or s2");
  SecantProblem problem;
  problem.k = 2;
  problem.n = n;
  problem.s = static_cast<int>(threshold == "s1" ? formulas::s1(n) : formulas::s2(n));
  problem.prime = prime;
  problem.seed = seed;
  problem.trials = kTrials;
  DirectProbe d;
  d.n = n;
  d.threshold = threshold;
  d.verdict = probe(problem);
  d.pass = threshold == "s1" ? d.verdict.certified() : d.verdict.kind == VerdictKind::CertifiedFills;
  return d;
}

InductionCertificate certify_theorem(int n_max, PrimeModulus prime, std::uint64_t seed) {
  if (n_max < 14) throw std::invalid_argument("certify_theorem: need n_max >= 14");
  InductionCertificate cert;
  cert.n_max = n_max;
  cert.prime = prime;
  cert.seed = seed;

  std::vector<std::future<PropCheck>> checks;
  checks.push_back(std::async(std::launch::async, check_prop_a, 17, prime, seed));
  for (Variant v : {Variant::Floor, Variant::Ceil}) {
    for (int n = 11; n <= 16; ++n) checks.push_back(std::async(std::launch::async, check_prop_b, n, v, prime, seed));
    for (int n = 9; n <= 14; ++n) checks.push_back(std::async(std::launch::async, check_prop_c, n, v, prime, seed));
  }
  std::vector<std::future<DirectProbe>> probes;
  for (int n = 9; n <= 14; ++n)
    for (const char* t : {"s1", "s2"})
      probes.push_back(std::async(std::launch::async, threshold_probe, n, std::string(t), prime, seed));

  for (auto& f : checks) cert.base_cases.push_back(f.get());
  for (auto& f : probes) cert.direct_probes.push_back(f.get());
  for (int n = 15; n <= n_max; ++n) cert.chain.push_back(chain_inequalities(n));

  if (cert.all_pass()) cert.conclusion = std::make_pair(9, n_max);
  return cert;
}

}  // namespace secant
