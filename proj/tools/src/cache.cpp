#include "secant/cli/cache.hpp"

#include <cstdio>
#include <fstream>

namespace secant::cli {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string cache_key(const std::string& command, const Json& parameters, std::uint32_t prime, std::uint64_t seed,
                      const std::string& version) {
  const std::string canonical = command + '\n' + parameters.dump() + '\n' + std::to_string(prime) + '\n' +
                                std::to_string(seed) + '\n' + version;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical)));
  return buf;
}

std::string ResultRecord::key() const { return cache_key(command, parameters, prime, seed, version); }

Json ResultRecord::to_json() const {
  return {{"key", key()},         {"command", command}, {"parameters", parameters},
          {"prime", prime},       {"seed", seed},       {"version", version},
          {"payload", payload},   {"elapsed_ms", elapsed_ms}};
}

ResultRecord ResultRecord::from_json(const Json& j) {
  ResultRecord r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  r.payload = j.at("payload");
  r.prime = j.at("prime").get<std::uint32_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
  r.version = j.at("version").get<std::string>();
  return r;
}

ResultCache::ResultCache(std::filesystem::path dir, bool enabled)
    : enabled_(enabled), file_(std::move(dir) / "results.jsonl") {
  if (enabled_) load();
}

void ResultCache::load() {
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A torn or hand-edited line is skipped rather than trusted.
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    try {
      ResultRecord r = ResultRecord::from_json(j);
      const std::string key = r.key();
      if (j.value("key", key) != key) continue;
      entries_.try_emplace(key, std::move(r));
    } catch (const Json::exception&) {
      continue;
    }
  }
}

std::optional<ResultRecord> ResultCache::lookup(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  ResultRecord r = it->second;
  r.cached = true;
  return r;
}

void ResultCache::append(const ResultRecord& record) {
  if (!enabled_) return;
  std::lock_guard lock(mutex_);
  std::filesystem::create_directories(file_.parent_path());
  std::ofstream out(file_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + file_.string());
  out << record.to_json().dump() << '\n';
  entries_.try_emplace(record.key(), record);
}

}  // namespace secant::cli
