#pragma once

// Constant-weight binary codes of Hamming distance >= 6, used as monomial
// certificates: s coordinate points of Gr(k,n) whose supports pairwise meet
// in at most k-2 indices have linearly independent tangent spaces.

#include <cstdint>
#include <optional>
#include <vector>

#include "secant/extalg.hpp"
#include "secant/field.hpp"

namespace secant {

struct CodeSet {
  int length = 0;  // n + 1
  int weight = 0;  // k + 1
  std::vector<IndexSet> words;

  std::size_t size() const { return words.size(); }
  /// Largest pairwise intersection allowed for the given minimum distance.
  static int max_intersection(int weight, int min_distance) { return weight - (min_distance + 1) / 2; }
  /// Exhaustive pairwise check of weights, range and distance.
  bool valid(int min_distance = 6) const;
};

/// Words {3(i-1), ..., 3(i-1)+k} for i = 1..s. Requires 3(s-1) <= n-k, k >= 2.
CodeSet tre_construction(int k, int n, int s);

/// Greedy code: scans weight-w subsets of [0, length) in colex order and keeps
/// each word at distance >= min_distance from all kept ones. Stops early
/// once `max_words` words are kept.
CodeSet lexicode_greedy(int length, int weight, int min_distance = 6,
                        std::optional<std::size_t> max_words = std::nullopt);

/// Lower bounds on A(n, 6, w).
struct GrahamSloaneBounds {
  ExactInt q_a;      // smallest prime power >= n
  ExactInt bound_a;  // floor(C(n,w) / q_a^2)
  ExactInt q_b;      // smallest prime power with q_b + 1 >= n
  ExactInt bound_b;  // floor((q_b - 1) C(n,w) / (q_b^3 - 1))
  ExactInt bound_c;  // floor(C(n,w) / (1 + w(n-w) + C(w,2) C(n-w,2)))

  ExactInt best() const;
};

bool is_prime_power(std::uint64_t q);
std::uint64_t smallest_prime_power_at_least(std::uint64_t n);
GrahamSloaneBounds graham_sloane_bounds(int n, int w);

/// Distance-6 code of weight k+1 and length n+1 with at least s words, or
/// nullopt when neither construction reaches s.
std::optional<CodeSet> monomial_certificate(int k, int n, int s);

}  // namespace secant
