#pragma once

// The `secant` command-line tool as a library, so tests can drive it with
// in-memory streams.
//
// Exit codes: 0 when every assertion a command makes holds, 1 when one
// fails, 2 on usage errors (bad flags, invalid parameters, unreadable input).

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "secant/field.hpp"

namespace secant::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

std::string version();

struct RunConfig {
  std::vector<PrimeModulus> primes{PrimeModulus{}};
  std::uint64_t seed = 0;
  int trials = 3;
  bool json = false;
  bool use_cache = true;
  std::filesystem::path cache_dir;
  unsigned workers = 0;  // 0: one per hardware thread

  /// Throws std::invalid_argument unless there is at least one prime and
  /// trials >= 1.
  void validate() const;
};

/// $SECANT_CACHE_DIR, else $XDG_CACHE_HOME/secant, else ~/.cache/secant,
/// else ./.secant-cache.
std::filesystem::path default_cache_dir();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs the tasks on up to `workers` threads; results come back in task order
/// regardless of completion order. The first exception is rethrown.
template <class T>
std::vector<T> run_pool(const std::vector<std::function<T()>>& tasks, unsigned workers) {
  std::vector<std::optional<T>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i].emplace(tasks[i]());
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  std::vector<T> out;
  out.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace secant::cli
