#include "secant/cli/report.hpp"

namespace secant::cli {

namespace {

Json index_list(IndexSet s) { return Json(s.indices()); }

VerdictKind parse_kind(const std::string& s) {
  for (VerdictKind k : {VerdictKind::CertifiedExpected, VerdictKind::CertifiedFills, VerdictKind::InconclusiveDeficit})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

}  // namespace

Json to_json(const SpanVerdict& v) {
  return {{"k", v.k},
          {"n", v.n},
          {"s", v.s},
          {"achieved", v.achieved_rank},
          {"expected", v.expected_rank},
          {"ambient", v.ambient},
          {"verdict", to_string(v.kind)},
          {"deficit", v.certified() ? 0 : v.deficit()},
          {"trials_used", v.trials_used},
          {"strategy_used", to_string(v.strategy_used)}};
}

SpanVerdict span_verdict_from_json(const Json& j) {
  SpanVerdict v;
  v.k = j.at("k").get<int>();
  v.n = j.at("n").get<int>();
  v.s = j.at("s").get<int>();
  v.achieved_rank = j.at("achieved").get<std::uint64_t>();
  v.expected_rank = j.at("expected").get<std::uint64_t>();
  v.ambient = j.at("ambient").get<std::uint64_t>();
  v.kind = parse_kind(j.at("verdict").get<std::string>());
  v.trials_used = j.at("trials_used").get<int>();
  v.strategy_used = parse_strategy(j.at("strategy_used").get<std::string>());
  return v;
}

Json to_json(const ImpliedRange& r) {
  Json j{{"kind", to_string(r.kind)}, {"s_min", r.s_min}};
  j["s_max"] = r.s_max ? Json(*r.s_max) : Json(nullptr);
  return j;
}

Json to_json(const PropCheck& c) {
  return {{"proposition", c.proposition},
          {"n", c.n},
          {"variant", to_string(c.variant)},
          {"constrained_points", c.constrained_points},
          {"free_points", c.free_points},
          {"ambient", c.ambient},
          {"span_rank", c.span_rank},
          {"achieved", c.achieved},
          {"target", c.target},
          {"formula_residual", c.formula_residual},
          {"residual", c.ambient - c.achieved},
          {"generic_expected", c.generic_expected},
          {"marginal_gains", c.marginal_gains},
          {"pass", c.pass}};
}

Json to_json(const ChainCheck& c) {
  return {{"n", c.n},
          {"f1_step", c.f1_step},
          {"f2_step", c.f2_step},
          {"s1_step", c.s1_step},
          {"s2_step", c.s2_step},
          {"pass", c.all()}};
}

Json to_json(const DirectProbe& d) {
  return {{"n", d.n}, {"threshold", d.threshold}, {"verdict", to_json(d.verdict)}, {"pass", d.pass}};
}

Json to_json(const InductionCertificate& cert) {
  Json j{{"n_max", cert.n_max}, {"prime", cert.prime.value()}, {"seed", cert.seed}};
  j["base_cases"] = Json::array();
  for (const auto& c : cert.base_cases) j["base_cases"].push_back(to_json(c));
  j["direct_probes"] = Json::array();
  for (const auto& d : cert.direct_probes) j["direct_probes"].push_back(to_json(d));
  j["chain"] = Json::array();
  for (const auto& c : cert.chain) j["chain"].push_back(to_json(c));
  j["conclusion"] = cert.conclusion ? Json{cert.conclusion->first, cert.conclusion->second} : Json(nullptr);
  return j;
}

Json to_json(const MembershipReport& r) {
  Json j{{"rank", r.rank},
         {"in_grassmannian", r.in_grassmannian},
         {"in_sigma2", r.in_sigma2},
         {"in_sigma3", r.in_sigma3}};
  j["p7_exact"] = r.p7_exact ? Json(r.p7_exact->get_str()) : Json(nullptr);
  j["p7_mod_p"] = r.p7_mod_p;
  j["prime"] = r.prime;
  return j;
}

Json to_json(const FiveTermIdentity& f) {
  return {{"determinant", f.determinant.get_str()}, {"predicted", f.predicted.get_str()}, {"holds", f.holds()}};
}

Json to_json(const CodeSet& c) {
  Json words = Json::array();
  for (IndexSet w : c.words) words.push_back(index_list(w));
  return {{"length", c.length}, {"weight", c.weight}, {"size", c.size()}, {"words", words}};
}

Json to_json(const GrahamSloaneBounds& b) {
  return {{"q_a", b.q_a.get_str()},         {"bound_a", b.bound_a.get_str()}, {"q_b", b.q_b.get_str()},
          {"bound_b", b.bound_b.get_str()}, {"bound_c", b.bound_c.get_str()}, {"best", b.best().get_str()}};
}

Json to_json(const OrbitRepresentative& r) {
  return {{"name", r.name},
          {"description", r.description},
          {"expected_rank", r.expected_rank},
          {"computed_rank", r.computed_rank},
          {"matches", r.matches()}};
}

Json to_json(const SpanDemo& d) {
  return {{"name", d.name},
          {"tangent_span_rank", d.tangent_span_rank},
          {"expected_rank", d.expected_rank},
          {"special_span_dim", d.special_span_dim},
          {"special_span_expected", d.special_span_expected},
          {"geometric_bound", d.geometric_bound},
          {"samples_on_grassmannian", d.samples_on_grassmannian},
          {"passes_through_points", d.passes_through_points},
          {"failures", d.failures},
          {"pass", d.pass()}};
}

}  // namespace secant::cli
