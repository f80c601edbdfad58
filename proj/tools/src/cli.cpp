#include "secant/cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "secant/cli/cache.hpp"
#include "secant/cli/report.hpp"
#include "secant/codes.hpp"
#include "secant/gr26.hpp"
#include "secant/induction.hpp"
#include "secant/tensor_format.hpp"
#include "secant/terracini.hpp"

#ifndef SECANT_VERSION
#define SECANT_VERSION "0.0.0"
#endif

namespace secant::cli {

std::string version() { return SECANT_VERSION; }

void RunConfig::validate() const {
  if (primes.empty()) throw std::invalid_argument("at least one prime is required");
  if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
}

std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("SECANT_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "secant";
  if (const char* d = std::getenv("HOME"); d && *d) return std::filesystem::path(d) / ".cache" / "secant";
  return ".secant-cache";
}

namespace {

/// Bad parameters detected after flag parsing; maps to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Session {
 public:
  Session(RunConfig cfg, std::ostream& out) : cfg_(std::move(cfg)), cache_(cfg_.cache_dir, cfg_.use_cache), out_(out) {}

  const RunConfig& config() const { return cfg_; }
  std::ostream& out() { return out_; }
  bool json() const { return cfg_.json; }

  /// Replays (command, parameters, prime, seed) from the cache or computes it.
  ResultRecord fetch(const std::string& command, const Json& parameters, std::uint32_t prime,
                     const std::function<Json()>& compute) {
    ResultRecord r;
    r.command = command;
    r.parameters = parameters;
    r.prime = prime;
    r.seed = cfg_.seed;
    r.version = version();
    if (auto hit = cache_.lookup(r.key())) return *hit;
    const auto t0 = std::chrono::steady_clock::now();
    r.payload = compute();
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

  /// Fan-out over the worker pool; fresh records are appended to the cache
  /// in task order once all tasks finish.
  std::vector<ResultRecord> fetch_all(const std::vector<std::function<ResultRecord()>>& tasks) {
    auto records = run_pool(tasks, cfg_.workers);
    for (const auto& r : records)
      if (!r.cached) cache_.append(r);
    return records;
  }

  void emit_json(const ResultRecord& r) {
    Json j = r.to_json();
    j["cached"] = r.cached;
    out_ << j.dump() << '\n';
  }

 private:
  RunConfig cfg_;
  ResultCache cache_;
  std::ostream& out_;
};

// ---------------------------------------------------------------------------
// probes shared by check, table and scan

struct ProbeSpec {
  int k, n, s;
  Strategy strategy = Strategy::Random;
};

std::function<ResultRecord()> probe_task(Session& session, ProbeSpec spec, PrimeModulus prime) {
  return [&session, spec, prime] {
    const RunConfig& cfg = session.config();
    const Json params{{"k", spec.k}, {"n", spec.n}, {"s", spec.s}, {"trials", cfg.trials},
                      {"strategy", to_string(spec.strategy)}};
    return session.fetch("check", params, prime.value(), [&] {
      SecantProblem problem;
      problem.k = spec.k;
      problem.n = spec.n;
      problem.s = spec.s;
      problem.prime = prime;
      problem.seed = cfg.seed;
      problem.trials = cfg.trials;
      problem.strategy = spec.strategy;
      return to_json(probe(problem));
    });
  };
}

std::string variety_label(int k, int n, int s) {
  return "sigma_" + std::to_string(s) + "(Gr(" + std::to_string(k) + "," + std::to_string(n) + "))";
}

std::string verdict_text(const SpanVerdict& v) {
  std::string t = to_string(v.kind);
  if (!v.certified()) t += "(" + std::to_string(v.deficit()) + ")";
  return t;
}

void require_grassmann_range(int k, int n) {
  if (k < 1) throw UsageError("need k >= 1");
  if (n <= k) throw UsageError("need n > k");
  if (2 * k > n - 1) throw UsageError("need k <= (n-1)/2 (use the dual Grassmannian Gr(n-k-1,n))");
  if (n + 1 > kMaxDim) throw UsageError("need n < " + std::to_string(kMaxDim));
}

// ---------------------------------------------------------------------------
// check

int cmd_check(Session& session, int k, int n, int s, Strategy strategy) {
  require_grassmann_range(k, n);
  if (s < 1) throw UsageError("need s >= 1");
  std::vector<std::function<ResultRecord()>> tasks;
  for (const auto& p : session.config().primes) tasks.push_back(probe_task(session, {k, n, s, strategy}, p));
  for (const auto& r : session.fetch_all(tasks)) {
    if (session.json()) {
      session.emit_json(r);
      continue;
    }
    const SpanVerdict v = span_verdict_from_json(r.payload);
    session.out() << variety_label(k, n, s) << "  p=" << r.prime << " seed=" << r.seed << ": achieved "
                  << v.achieved_rank << " / expected " << v.expected_rank << " (ambient " << v.ambient << ") -> "
                  << verdict_text(v) << "  [" << to_string(v.strategy_used) << ", " << v.trials_used << " trial"
                  << (v.trials_used == 1 ? "" : "s") << (r.cached ? ", cached" : "") << "]\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// table

struct TableRow {
  int k, n, s;
  std::uint64_t known_actual_codim, known_expected_codim;
};

// Actual vs expected codimension of the four defective cases with s < typical rank.
constexpr TableRow kDefectiveTable[] = {
    {2, 6, 3, 1, 0},
    {3, 7, 3, 20, 19},
    {3, 7, 4, 6, 2},
    {2, 8, 4, 10, 8},
};

int cmd_table(Session& session) {
  std::vector<std::function<ResultRecord()>> tasks;
  for (const auto& row : kDefectiveTable)
    for (const auto& p : session.config().primes) tasks.push_back(probe_task(session, {row.k, row.n, row.s}, p));
  const auto records = session.fetch_all(tasks);

  bool all_match = true;
  std::ostringstream human;
  human << std::left << std::setw(18) << "variety" << std::setw(9) << "ambient" << std::setw(8) << "prime"
        << std::setw(14) << "actual codim" << std::setw(16) << "expected codim" << std::setw(13) << "known actual"
        << std::setw(16) << "known expected" << "status\n";
  std::size_t i = 0;
  for (const auto& row : kDefectiveTable) {
    for (std::size_t j = 0; j < session.config().primes.size(); ++j, ++i) {
      ResultRecord r = records[i];
      const SpanVerdict v = span_verdict_from_json(r.payload);
      const std::uint64_t actual = v.ambient - v.achieved_rank;
      const std::uint64_t expected = v.ambient - v.expected_rank;
      const bool match = actual == row.known_actual_codim && expected == row.known_expected_codim;
      all_match = all_match && match;
      if (session.json()) {
        r.command = "table";
        r.payload["actual_codim"] = actual;
        r.payload["expected_codim"] = expected;
        r.payload["known_actual_codim"] = row.known_actual_codim;
        r.payload["known_expected_codim"] = row.known_expected_codim;
        r.payload["matches"] = match;
        session.emit_json(r);
        continue;
      }
      human << std::setw(18) << variety_label(row.k, row.n, row.s) << std::setw(9) << v.ambient << std::setw(8)
            << r.prime << std::setw(14) << actual << std::setw(16) << expected << std::setw(13)
            << row.known_actual_codim << std::setw(16) << row.known_expected_codim << (match ? "match" : "MISMATCH")
            << '\n';
    }
  }
  if (!session.json()) session.out() << human.str();
  return all_match ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// scan

int cmd_scan(Session& session, int k, int n_min, int n_max, std::optional<int> s_min, std::optional<int> s_max) {
  if (n_min > n_max) throw UsageError("need --n-min <= --n-max");
  if (s_min.has_value() != s_max.has_value()) throw UsageError("give both --s-min and --s-max, or neither");
  const bool thresholds = !s_min;
  if (thresholds && k != 2) throw UsageError("without --s-min/--s-max the scan probes s1(n), s2(n) and needs k = 2");
  if (thresholds && n_min < formulas::kMinN) throw UsageError("threshold scan needs n >= 9");
  if (!thresholds && (*s_min < 1 || *s_min > *s_max)) throw UsageError("need 1 <= --s-min <= --s-max");

  struct Entry {
    int n, s;
    std::string role;  // "s1", "s2" or "" for a user range
  };
  std::vector<Entry> entries;
  for (int n = n_min; n <= n_max; ++n) {
    require_grassmann_range(k, n);
    if (thresholds) {
      entries.push_back({n, static_cast<int>(formulas::s1(n)), "s1"});
      entries.push_back({n, static_cast<int>(formulas::s2(n)), "s2"});
    } else {
      for (int s = *s_min; s <= *s_max; ++s) entries.push_back({n, s, ""});
    }
  }
  std::vector<std::function<ResultRecord()>> tasks;
  for (const auto& e : entries)
    for (const auto& p : session.config().primes) tasks.push_back(probe_task(session, {k, e.n, e.s}, p));
  const auto records = session.fetch_all(tasks);

  bool pass = true;
  std::size_t i = 0;
  for (const auto& e : entries) {
    for (std::size_t j = 0; j < session.config().primes.size(); ++j, ++i) {
      ResultRecord r = records[i];
      const SpanVerdict v = span_verdict_from_json(r.payload);
      bool ok = true;
      if (e.role == "s1") ok = v.certified();
      if (e.role == "s2") ok = v.kind == VerdictKind::CertifiedFills;
      pass = pass && ok;
      std::optional<ImpliedRange> implied;
      if (v.certified()) implied = monotone_extend(v);
      if (session.json()) {
        r.command = "scan";
        if (!e.role.empty()) r.payload["threshold"] = e.role;
        r.payload["implied"] = implied ? to_json(*implied) : Json(nullptr);
        r.payload["pass"] = ok;
        session.emit_json(r);
        continue;
      }
      auto& o = session.out();
      o << variety_label(k, e.n, e.s) << (e.role.empty() ? "" : " [" + e.role + "]") << "  p=" << r.prime
        << ": " << v.achieved_rank << "/" << v.expected_rank << " -> " << verdict_text(v);
      if (implied) {
        o << "  implies s in [" << implied->s_min << ", "
          << (implied->s_max ? std::to_string(*implied->s_max) : std::string("inf")) << "]";
      }
      o << (ok ? "" : "  FAIL") << '\n';
    }
  }
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// induction

int cmd_induction(Session& session, int n_max) {
  if (n_max < 14) throw UsageError("--n-max must be at least 14");
  std::vector<std::function<ResultRecord()>> tasks;
  for (const auto& p : session.config().primes) {
    tasks.push_back([&session, n_max, p] {
      return session.fetch("induction", Json{{"n_max", n_max}}, p.value(),
                           [&] { return to_json(certify_theorem(n_max, p, session.config().seed)); });
    });
  }
  bool pass = true;
  for (const auto& r : session.fetch_all(tasks)) {
    const Json& c = r.payload;
    pass = pass && !c["conclusion"].is_null();
    if (session.json()) {
      session.emit_json(r);
      continue;
    }
    auto& o = session.out();
    o << "p=" << r.prime << " seed=" << r.seed << "\n";
    o << "  base cases:\n";
    for (const auto& b : c["base_cases"]) {
      o << "    prop " << b["proposition"].get<std::string>() << " n=" << std::setw(2) << b["n"].get<int>() << " "
        << std::setw(5) << b["variant"].get<std::string>() << "  rank " << b["achieved"] << " / target "
        << b["target"] << "  residual " << b["residual"] << (b["pass"].get<bool>() ? "  ok" : "  FAIL") << '\n';
    }
    o << "  direct probes:\n";
    for (const auto& d : c["direct_probes"]) {
      o << "    n=" << std::setw(2) << d["n"].get<int>() << " " << d["threshold"].get<std::string>()
        << " s=" << d["verdict"]["s"] << "  " << d["verdict"]["achieved"] << "/" << d["verdict"]["expected"] << " "
        << d["verdict"]["verdict"].get<std::string>() << (d["pass"].get<bool>() ? "  ok" : "  FAIL") << '\n';
    }
    std::size_t chain_ok = 0;
    for (const auto& ch : c["chain"]) {
      if (ch["pass"].get<bool>()) {
        ++chain_ok;
      } else {
        o << "  chain inequality fails at n=" << ch["n"] << '\n';
      }
    }
    o << "  chain inequalities: " << chain_ok << "/" << c["chain"].size() << " hold\n";
    if (c["conclusion"].is_null()) {
      o << "  conclusion: none (a constituent check failed)\n";
    } else {
      o << "  conclusion: thresholds certified for n in [" << c["conclusion"][0] << ", " << c["conclusion"][1]
        << "]\n";
    }
  }
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(Session& session, const std::string& path) {
  IntMultivector w(kPairingDim, 3);
  try {
    w = load_tensor(path);
  } catch (const TensorFormatError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (w.dim() != kPairingDim || w.degree() != 3) throw UsageError("classify needs a tensor with dim 7 degree 3");

  bool pass = true;
  for (const auto& p : session.config().primes) {
    const MembershipReport m = classify(w, p);
    const std::size_t rank_p = ContractionMatrix(w).rank_mod_p(p);
    // rank <= 18 forces det = 0; mod-p rank can only drop below the exact one.
    const bool ok = (!m.in_sigma3 || *m.p7_exact == 0) && rank_p <= m.rank;
    pass = pass && ok;
    if (session.json()) {
      ResultRecord r;
      r.command = "classify";
      r.parameters = Json{{"file", path}};
      r.payload = to_json(m);
      r.payload["rank_mod_p"] = rank_p;
      r.payload["tensor"] = format_tensor(w, true);
      r.prime = p.value();
      r.seed = session.config().seed;
      r.version = version();
      session.emit_json(r);
      continue;
    }
    auto& o = session.out();
    o << path << "  p=" << p.value() << '\n'
      << "  rank(phi) = " << m.rank << " (mod p: " << rank_p << ")\n"
      << "  in Gr(2,6): " << (m.in_grassmannian ? "yes" : "no") << "   in sigma_2: " << (m.in_sigma2 ? "yes" : "no")
      << "   in sigma_3: " << (m.in_sigma3 ? "yes" : "no") << '\n'
      << "  P7 = " << m.p7_exact->get_str() << "  (mod p: " << m.p7_mod_p << ")\n";
    if (!ok) o << "  FAIL: inconsistent rank / invariant\n";
  }
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// invariant

ExactInt parse_exact(const std::string& s, const char* name) {
  ExactInt v;
  if (v.set_str(s, 10) != 0) throw UsageError(std::string(name) + ": not an integer: '" + s + "'");
  return v;
}

int cmd_invariant(Session& session, const std::array<std::string, 5>& args, int samples) {
  static constexpr const char* kNames[] = {"a135", "a147", "a126", "a234", "a567"};
  if (samples < 0) throw UsageError("--samples must be non-negative");
  std::vector<std::array<ExactInt, 5>> tuples;
  std::array<ExactInt, 5> given;
  for (int i = 0; i < 5; ++i) given[i] = parse_exact(args[i], kNames[i]);
  tuples.push_back(given);
  std::mt19937_64 rng(session.config().seed);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int i = 0; i < samples; ++i) {
    std::array<ExactInt, 5> t;
    for (auto& x : t) x = coef(rng);
    tuples.push_back(t);
  }
  bool pass = true;
  for (const auto& t : tuples) {
    const FiveTermIdentity f = five_term_identity(t[0], t[1], t[2], t[3], t[4]);
    pass = pass && f.holds();
    if (session.json()) {
      ResultRecord r;
      r.command = "invariant";
      for (int i = 0; i < 5; ++i) r.parameters[kNames[i]] = t[i].get_str();
      r.payload = to_json(f);
      r.prime = session.config().primes.front().value();
      r.seed = session.config().seed;
      r.version = version();
      session.emit_json(r);
      continue;
    }
    auto& o = session.out();
    o << "(";
    for (int i = 0; i < 5; ++i) o << (i ? ", " : "") << t[i].get_str();
    o << ")  det = " << f.determinant.get_str() << "  predicted = " << f.predicted.get_str()
      << (f.holds() ? "  ok" : "  FAIL") << '\n';
  }
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// codes

int cmd_codes(Session& session, int n, int w, int d, std::optional<std::size_t> max_words) {
  if (w < 1 || n < w) throw UsageError("need n >= w >= 1");
  if (n > kMaxDim) throw UsageError("need n <= " + std::to_string(kMaxDim));
  if (d < 1) throw UsageError("need d >= 1");
  const CodeSet code = lexicode_greedy(n, w, d, max_words);
  const GrahamSloaneBounds b = graham_sloane_bounds(n, w);
  const bool ok = code.valid(d);
  if (session.json()) {
    ResultRecord r;
    r.command = "codes";
    r.parameters = Json{{"n", n}, {"w", w}, {"d", d}};
    r.payload = Json{{"code", to_json(code)}, {"graham_sloane", to_json(b)}, {"valid", ok}};
    r.prime = session.config().primes.front().value();
    r.seed = session.config().seed;
    r.version = version();
    session.emit_json(r);
  } else {
    auto& o = session.out();
    o << "# greedy constant-weight code: length " << n << ", weight " << w << ", distance >= " << d << ": "
      << code.size() << " words\n";
    for (IndexSet word : code.words) {
      const auto idx = word.indices();
      for (std::size_t i = 0; i < idx.size(); ++i) o << (i ? " " : "") << idx[i];
      o << '\n';
    }
    o << "# lower bounds for distance 6: (a) " << b.bound_a.get_str() << " [q=" << b.q_a.get_str() << "]  (b) "
      << b.bound_b.get_str() << " [q=" << b.q_b.get_str() << "]  (c) " << b.bound_c.get_str() << '\n';
    if (!ok) o << "# FAIL: code violates the distance bound\n";
  }
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// demo

int cmd_demo(Session& session, const std::string& which) {
  if (which == "figure1") {
    const auto table = figure1_table(session.config().seed);
    bool pass = true;
    for (const auto& rep : table) pass = pass && rep.matches();
    if (session.json()) {
      ResultRecord r;
      r.command = "demo";
      r.parameters = Json{{"which", which}};
      r.payload = Json::array();
      for (const auto& rep : table) r.payload.push_back(to_json(rep));
      r.prime = session.config().primes.front().value();
      r.seed = session.config().seed;
      r.version = version();
      session.emit_json(r);
    } else {
      auto& o = session.out();
      o << std::left << std::setw(16) << "class" << std::setw(46) << "representative (1-based labels)"
        << std::setw(10) << "expected" << "rank(phi)\n";
      for (const auto& rep : table)
        o << std::setw(16) << rep.name << std::setw(46) << rep.description << std::setw(10) << rep.expected_rank
          << rep.computed_rank << (rep.matches() ? "" : "  MISMATCH") << '\n';
    }
    return pass ? kExitPass : kExitFail;
  }
  if (which != "gr37" && which != "gr28") throw UsageError("demo must be one of gr37, gr28, figure1");

  bool pass = true;
  for (const auto& p : session.config().primes) {
    const SpanDemo d = which == "gr37" ? demo_gr37(p, session.config().seed) : demo_gr28(p, session.config().seed);
    pass = pass && d.pass();
    if (session.json()) {
      ResultRecord r;
      r.command = "demo";
      r.parameters = Json{{"which", which}};
      r.payload = to_json(d);
      r.prime = p.value();
      r.seed = session.config().seed;
      r.version = version();
      session.emit_json(r);
      continue;
    }
    auto& o = session.out();
    o << d.name << "  p=" << p.value() << '\n'
      << "  tangent span: affine rank " << d.tangent_span_rank << " (projective " << d.tangent_span_rank - 1
      << "), expected " << d.expected_rank << " (projective " << d.expected_rank - 1 << ")\n"
      << "  special span: dimension " << d.special_span_dim << " (expected " << d.special_span_expected << ")\n"
      << "  bound from the special span: " << d.geometric_bound << '\n'
      << "  samples decomposable: " << (d.samples_on_grassmannian ? "yes" : "no")
      << "   through the defining points: " << (d.passes_through_points ? "yes" : "no") << '\n';
    for (const auto& f : d.failures) o << "  FAIL: " << f << '\n';
  }
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secant varieties of Grassmannians: rank certificates over finite fields", "secant"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  std::uint32_t prime = PrimeModulus::kDefault;
  std::uint32_t second_prime = 0;
  RunConfig cfg;
  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--prime", prime, "Primary prime modulus")->capture_default_str();
  app.add_flag("--second-prime{46337}", second_prime,
               "Also run at a second prime (--second-prime alone uses 46337, or --second-prime=P)");
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random trials per probe")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads (0: one per hardware thread)");
  app.add_flag("--json", cfg.json, "Emit JSON lines instead of text");
  app.add_flag("--no-cache", no_cache, "Recompute and do not touch the cache");
  app.add_option("--cache-dir", cache_dir, "Cache directory");

  int k = 2, n = 6, s = 1;
  std::string strategy = "random";
  auto* check = app.add_subcommand("check", "Probe the dimension of sigma_s(Gr(k,n))");
  check->add_option("-k", k, "Grassmannian Gr(k,n): projective k-planes")->required();
  check->add_option("-n", n, "Ambient projective dimension")->required();
  check->add_option("-s", s, "Number of secant points")->required();
  check->add_option("--strategy", strategy, "random | monomial | auto")->capture_default_str();

  auto* table = app.add_subcommand("table", "Reproduce the table of defective cases");

  int scan_k = 2, n_min = 9, n_max = 14;
  std::optional<int> s_min, s_max;
  auto* scan = app.add_subcommand("scan", "Probe a range of n (thresholds s1/s2 for k=2, or a range of s)");
  scan->add_option("-k", scan_k)->capture_default_str();
  scan->add_option("--n-min", n_min)->capture_default_str();
  scan->add_option("--n-max", n_max)->capture_default_str();
  scan->add_option("--s-min", s_min);
  scan->add_option("--s-max", s_max);

  int induction_n_max = 50;
  auto* induction = app.add_subcommand("induction", "Certify the threshold theorem for 9 <= n <= n_max");
  induction->add_option("--n-max", induction_n_max)->capture_default_str();

  std::string tensor_path;
  auto* classify_cmd = app.add_subcommand("classify", "Rank of phi and the invariant P7 for a 3-form on K^7");
  classify_cmd->add_option("file", tensor_path, "Tensor file")->required();

  std::array<std::string, 5> coeffs{"1", "1", "1", "1", "1"};
  int samples = 0;
  auto* invariant = app.add_subcommand("invariant", "Check the five-term determinant identity");
  invariant->add_option("--a135", coeffs[0])->capture_default_str();
  invariant->add_option("--a147", coeffs[1])->capture_default_str();
  invariant->add_option("--a126", coeffs[2])->capture_default_str();
  invariant->add_option("--a234", coeffs[3])->capture_default_str();
  invariant->add_option("--a567", coeffs[4])->capture_default_str();
  invariant->add_option("--samples", samples, "Extra random tuples with entries in [-9, 9]")->capture_default_str();

  int code_n = 10, code_w = 4, code_d = 6;
  std::optional<std::size_t> max_words;
  auto* codes = app.add_subcommand("codes", "Greedy constant-weight code and lower bounds");
  codes->add_option("-n", code_n, "Length")->capture_default_str();
  codes->add_option("-w", code_w, "Weight")->capture_default_str();
  codes->add_option("-d", code_d, "Minimum distance")->capture_default_str();
  codes->add_option("--max-words", max_words, "Stop after this many words");

  std::string which;
  auto* demo = app.add_subcommand("demo", "Tangent-span demonstrations: gr37, gr28, figure1");
  demo->add_option("which", which)->required()->check(CLI::IsMember({"gr37", "gr28", "figure1"}));

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion& e) {
    out << version() << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    cfg.primes = {PrimeModulus(prime)};
    if (second_prime != 0) cfg.primes.emplace_back(second_prime);
    cfg.use_cache = !no_cache;
    cfg.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Session session(cfg, out);
    if (*check) return cmd_check(session, k, n, s, parse_strategy(strategy));
    if (*table) return cmd_table(session);
    if (*scan) return cmd_scan(session, scan_k, n_min, n_max, s_min, s_max);
    if (*induction) return cmd_induction(session, induction_n_max);
    if (*classify_cmd) return cmd_classify(session, tensor_path);
    if (*invariant) return cmd_invariant(session, coeffs, samples);
    if (*codes) return cmd_codes(session, code_n, code_w, code_d, max_words);
    if (*demo) return cmd_demo(session, which);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace secant::cli
