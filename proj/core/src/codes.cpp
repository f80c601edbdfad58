#include "secant/codes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace secant {

namespace {

ExactInt binomial_exact(unsigned long n, unsigned long k) {
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

bool CodeSet::valid(int min_distance) const {
  const int bound = max_intersection(weight, min_distance);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() != weight || words[i].max() >= length) return false;
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if ((words[i] & words[j]).size() > bound) return false;
  }
  return true;
}

CodeSet tre_construction(int k, int n, int s) {
  if (k < 2 || s < 1 || 3 * (s - 1) > n - k)
    throw std::invalid_argument("tre_construction: need k >= 2 and 3(s-1) <= n-k (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ", s=" + std::to_string(s) + ")");
  CodeSet code{n + 1, k + 1, {}};
  for (int i = 0; i < s; ++i) code.words.push_back(IndexSet::range(3 * i, 3 * i + k));
  return code;
}

CodeSet lexicode_greedy(int length, int weight, int min_distance, std::optional<std::size_t> max_words) {
  if (weight < 0 || weight > length || length > kMaxDim)
    throw std::invalid_argument("lexicode_greedy: need 0 <= weight <= length <= 64");
  CodeSet code{length, weight, {}};
  const int bound = CodeSet::max_intersection(weight, min_distance);
  for (IndexSet candidate : subsets_of(IndexSet::range(0, length - 1), weight)) {
    const bool far = std::all_of(code.words.begin(), code.words.end(),
                                 [&](IndexSet w) { return (w & candidate).size() <= bound; });
    if (!far) continue;
    code.words.push_back(candidate);
    if (max_words && code.words.size() >= *max_words) break;
  }
  return code;
}

ExactInt GrahamSloaneBounds::best() const {
  return std::max({bound_a, bound_b, bound_c});
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d != 0) continue;
    while (q % d == 0) q /= d;
    return q == 1;
  }
  return true;
}

std::uint64_t smallest_prime_power_at_least(std::uint64_t n) {
  std::uint64_t q = std::max<std::uint64_t>(n, 2);
  while (!is_prime_power(q)) ++q;
  return q;
}

GrahamSloaneBounds graham_sloane_bounds(int n, int w) {
  if (w < 1 || n < w) throw std::invalid_argument("graham_sloane_bounds: need n >= w >= 1");
  const ExactInt total = binomial_exact(n, w);
  GrahamSloaneBounds b;

  b.q_a = static_cast<unsigned long>(smallest_prime_power_at_least(n));
  b.bound_a = total / (b.q_a * b.q_a);

  const std::uint64_t q = smallest_prime_power_at_least(n > 1 ? n - 1 : 1);
  b.q_b = static_cast<unsigned long>(q);
  b.bound_b = (b.q_b - 1) * total / (b.q_b * b.q_b * b.q_b - 1);

  const ExactInt denom = 1 + ExactInt(w) * (n - w) + binomial_exact(w, 2) * binomial_exact(n - w, 2);
  b.bound_c = total / denom;
  return b;
}

std::optional<CodeSet> monomial_certificate(int k, int n, int s) {
  if (k < 2) throw std::invalid_argument("monomial_certificate: need k >= 2");
  if (s < 1) return CodeSet{n + 1, k + 1, {}};
  if (3 * (s - 1) <= n - k) return tre_construction(k, n, s);
  CodeSet greedy = lexicode_greedy(n + 1, k + 1, 6, static_cast<std::size_t>(s));
  if (greedy.size() >= static_cast<std::size_t>(s)) return greedy;
  return std::nullopt;
}

}  // namespace secant
