#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "secant/cli/cache.hpp"
#include "secant/cli/cli.hpp"

using namespace secant::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  std::vector<Json> lines() const {
    std::vector<Json> v;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) v.push_back(Json::parse(line));
    return v;
  }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "secant");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Fresh cache directory per test case, removed afterwards.
struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("secant-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("FNV-1a reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
  CHECK(cache_key("check", Json{{"k", 2}}, 32003, 0, "1") != cache_key("check", Json{{"k", 2}}, 46337, 0, "1"));
  CHECK(cache_key("check", Json{{"k", 2}}, 32003, 0, "1") == cache_key("check", Json{{"k", 2}}, 32003, 0, "1"));
}

TEST_CASE("worker pool keeps task order and propagates errors") {
  std::vector<std::function<int()>> tasks;
  for (int i = 0; i < 50; ++i)
    tasks.push_back([i] {
      std::this_thread::sleep_for(std::chrono::microseconds((50 - i) * 20));
      return i * i;
    });
  const auto results = run_pool(tasks, 4);
  for (int i = 0; i < 50; ++i) CHECK(results[i] == i * i);
  tasks.push_back([]() -> int { throw std::runtime_error("boom"); });
  CHECK_THROWS_AS(run_pool(tasks, 3), std::runtime_error);
  CHECK(run_pool(std::vector<std::function<int()>>{}, 2).empty());
}

TEST_CASE("result records round-trip through JSON") {
  ResultRecord r;
  r.command = "check";
  r.parameters = Json{{"k", 2}, {"n", 6}};
  r.payload = Json{{"achieved", 34}};
  r.prime = 32003;
  r.seed = 9;
  r.elapsed_ms = 12;
  r.version = version();
  const auto back = ResultRecord::from_json(r.to_json());
  CHECK(back.key() == r.key());
  CHECK(back.payload == r.payload);
  CHECK(back.elapsed_ms == 12);
  CHECK_FALSE(back.cached);
}

TEST_CASE("run configuration validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.trials = 1;
  cfg.primes.clear();
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("default cache directory honours the environment") {
  ::setenv("SECANT_CACHE_DIR", "/tmp/somewhere", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/somewhere"));
  ::unsetenv("SECANT_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/xdg/secant"));
  ::unsetenv("XDG_CACHE_HOME");
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string cache = "--cache-dir=" + dir.str();
  CHECK(invoke({"check", "-k", "2", "-n", "6", "-s", "3", cache}).code == kExitPass);
  CHECK(invoke({"check", "-k", "2", "-n", "9", "-s", "5", "--second-prime", cache}).code == kExitPass);
  CHECK(invoke({"table", cache}).code == kExitPass);
  CHECK(invoke({"invariant", "--samples", "3"}).code == kExitPass);
  CHECK(invoke({"codes", "-n", "10", "-w", "4"}).code == kExitPass);
  CHECK(invoke({"classify", SECANT_TEST_DATA "/fano.tensor"}).code == kExitPass);
  CHECK(invoke({"demo", "figure1"}).code == kExitPass);
  CHECK(invoke({"scan", "--n-min", "9", "--n-max", "10", cache}).code == kExitPass);
  CHECK(invoke({"--version"}).code == kExitPass);
  CHECK(invoke({"--help"}).code == kExitPass);

  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"check", "-k", "2", "-n", "6"}).code == kExitUsage);
  CHECK(invoke({"check", "-k", "3", "-n", "6", "-s", "2", cache}).code == kExitUsage);
  CHECK(invoke({"check", "-k", "2", "-n", "6", "-s", "2", "--prime", "9", cache}).code == kExitUsage);
  CHECK(invoke({"check", "-k", "2", "-n", "6", "-s", "2", "--trials", "0", cache}).code == kExitUsage);
  CHECK(invoke({"check", "-k", "2", "-n", "6", "-s", "2", "--strategy", "greedy", cache}).code == kExitUsage);
  CHECK(invoke({"check", "-k", "2", "-n", "6", "-s", "2", "--bogus"}).code == kExitUsage);
  CHECK(invoke({"classify", SECANT_TEST_DATA "/bad_repeat.tensor"}).code == kExitUsage);
  CHECK(invoke({"classify", SECANT_TEST_DATA "/wrong_degree.tensor"}).code == kExitUsage);
  CHECK(invoke({"classify", SECANT_TEST_DATA "/missing.tensor"}).code == kExitUsage);
  CHECK(invoke({"invariant", "--a135", "x"}).code == kExitUsage);
  CHECK(invoke({"codes", "-n", "3", "-w", "4"}).code == kExitUsage);
  CHECK(invoke({"demo", "gr99"}).code == kExitUsage);
  CHECK(invoke({"scan", "-k", "3", "--n-min", "9", "--n-max", "10"}).code == kExitUsage);
  CHECK(invoke({"induction", "--n-max", "10"}).code == kExitUsage);

  const auto bad = invoke({"classify", SECANT_TEST_DATA "/bad_repeat.tensor"});
  CHECK(bad.err.find("line 3") != std::string::npos);
}

TEST_CASE("text output of check") {
  const auto r = invoke({"check", "-k", "2", "-n", "6", "-s", "3", "--no-cache"});
  CHECK(r.out.find("sigma_3(Gr(2,6))") != std::string::npos);
  CHECK(r.out.find("achieved 34 / expected 35") != std::string::npos);
  CHECK(r.out.find("InconclusiveDeficit(1)") != std::string::npos);
}

TEST_CASE("JSON payloads are deterministic") {
  const std::vector<std::string> args{"check", "-k", "3", "-n", "7", "-s", "4", "--json", "--no-cache", "--seed", "7"};
  const auto a = invoke(args).lines();
  const auto b = invoke(args).lines();
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 1);
  CHECK(a[0]["payload"] == b[0]["payload"]);
  CHECK(a[0]["key"] == b[0]["key"]);
  CHECK(a[0]["payload"]["achieved"] == 64);
  CHECK(a[0]["payload"]["expected"] == 68);
  CHECK(a[0]["payload"]["verdict"] == "InconclusiveDeficit");
  CHECK(a[0]["prime"] == 32003);
  CHECK(a[0]["seed"] == 7);
  CHECK(a[0]["cached"] == false);
  CHECK(a[0].contains("elapsed_ms"));

  const auto i1 = invoke({"invariant", "--samples", "4", "--json", "--seed", "3"}).lines();
  const auto i2 = invoke({"invariant", "--samples", "4", "--json", "--seed", "3"}).lines();
  REQUIRE(i1.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(i1[i]["payload"] == i2[i]["payload"]);
}

TEST_CASE("cache replays results without recomputing") {
  TempDir dir;
  const std::string cache = "--cache-dir=" + dir.str();
  const auto first = invoke({"check", "-k", "2", "-n", "6", "-s", "3", "--json", cache}).lines();
  const auto second = invoke({"check", "-k", "2", "-n", "6", "-s", "3", "--json", cache}).lines();
  REQUIRE(first.size() == 1);
  REQUIRE(second.size() == 1);
  CHECK(first[0]["cached"] == false);
  CHECK(second[0]["cached"] == true);
  CHECK(first[0]["payload"] == second[0]["payload"]);
  // A different seed is a different key.
  const auto other = invoke({"check", "-k", "2", "-n", "6", "-s", "3", "--json", "--seed", "1", cache}).lines();
  CHECK(other[0]["cached"] == false);

  // Rewrite the stored record with a wrong rank: the table replays it and must
  // report the mismatch with exit code 1.
  const fs::path file = dir.path / "results.jsonl";
  REQUIRE(fs::exists(file));
  std::vector<std::string> lines;
  {
    std::ifstream in(file);
    for (std::string line; std::getline(in, line);) {
      Json j = Json::parse(line);
      if (j["seed"] == 0 && j["parameters"]["n"] == 6) {
        j["payload"]["achieved"] = 35;
        j["payload"]["verdict"] = "CertifiedFills";
        j["payload"]["deficit"] = 0;
      }
      lines.push_back(j.dump());
    }
  }
  {
    std::ofstream out(file, std::ios::trunc);
    for (const auto& l : lines) out << l << '\n';
    out << "this line is not json\n";
  }
  const auto table = invoke({"table", cache});
  CHECK(table.code == kExitFail);
  CHECK(table.out.find("MISMATCH") != std::string::npos);
  // Without the cache the table is recomputed and matches again.
  CHECK(invoke({"table", "--no-cache"}).code == kExitPass);
}

TEST_CASE("table reports both primes") {
  const auto t = invoke({"table", "--no-cache", "--second-prime", "--json"}).lines();
  REQUIRE(t.size() == 8);
  for (const auto& j : t) CHECK(j["payload"]["matches"] == true);
  CHECK(t[0]["prime"] == 32003);
  CHECK(t[1]["prime"] == 46337);
}
