#pragma once

// Append-only JSON-lines store of computed results. Each line holds one
// ResultRecord; the key is a 64-bit FNV-1a hash of the command, the
// canonical parameter JSON, the prime, the seed and the tool version.

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "secant/cli/report.hpp"

namespace secant::cli {

struct ResultRecord {
  std::string command;
  Json parameters;
  Json payload;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  std::string version;
  bool cached = false;  // replayed from the cache; never written to it

  std::string key() const;
  Json to_json() const;
  static ResultRecord from_json(const Json& j);
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string cache_key(const std::string& command, const Json& parameters, std::uint32_t prime, std::uint64_t seed,
                      const std::string& version);

class ResultCache {
 public:
  /// A disabled cache never reads or writes.
  ResultCache(std::filesystem::path dir, bool enabled);

  bool enabled() const { return enabled_; }
  const std::filesystem::path& file() const { return file_; }

  std::optional<ResultRecord> lookup(const std::string& key) const;
  /// Appends one line and remembers the record. Thread-safe.
  void append(const ResultRecord& record);

 private:
  void load();

  bool enabled_;
  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, ResultRecord> entries_;
};

}  // namespace secant::cli
