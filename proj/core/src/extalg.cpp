#include "secant/extalg.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

namespace secant {

namespace {

constexpr int kTableSize = kMaxDim + 1;

// C(n, k) for n <= 64; every entry fits in 64 bits.
const std::array<std::array<std::uint64_t, kTableSize>, kTableSize>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kTableSize>, kTableSize> t{};
    for (int n = 0; n < kTableSize; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n < kTableSize) return pascal()[n][k];
  ExactInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!result.fits_ulong_p()) throw std::overflow_error("binomial: result exceeds 64 bits");
  return result.get_ui();
}

IndexSet::IndexSet(std::span<const int> indices) {
  for (int i : indices) {
    if (i < 0 || i >= kMaxDim) throw std::out_of_range("IndexSet: index " + std::to_string(i) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (bits_ & bit) throw std::invalid_argument("IndexSet: repeated index " + std::to_string(i));
    bits_ |= bit;
  }
}

IndexSet IndexSet::range(int first, int last) {
  IndexSet s;
  for (int i = std::max(first, 0); i <= last; ++i) s = s.with(i);
  return s;
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : indices()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

int merge_sign(IndexSet a, IndexSet b) {
  if ((a & b).bits() != 0) return 0;
  // Each element of b must pass every larger element of a.
  int inversions = 0;
  for (std::uint64_t rest = b.bits(); rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const std::uint64_t above = j == 63 ? 0 : (~std::uint64_t{0} << (j + 1));
    inversions += std::popcount(a.bits() & above);
  }
  return (inversions & 1) ? -1 : 1;
}

int sort_sign(std::span<const int> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) sign = -sign;
    }
  return sign;
}

std::uint64_t rank_of_subset(IndexSet s) {
  std::uint64_t rank = 0;
  int i = 1;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1, ++i) rank += binomial(std::countr_zero(b), i);
  return rank;
}

IndexSet unrank_subset(std::uint64_t rank, int n, int d) {
  if (d < 0 || n + 1 < d || n + 1 > kMaxDim) throw std::out_of_range("unrank_subset: bad shape");
  if (rank >= binomial(n + 1, d)) throw std::out_of_range("unrank_subset: rank out of range");
  IndexSet s;
  int top = n;
  for (int i = d; i >= 1; --i) {
    while (binomial(top, i) > rank) --top;
    s = s.with(top);
    rank -= binomial(top, i);
    --top;
  }
  return s;
}

std::vector<IndexSet> subsets_of(IndexSet support, int d) {
  std::vector<IndexSet> out;
  const auto idx = support.indices();
  const int m = static_cast<int>(idx.size());
  if (d < 0 || d > m) return out;
  out.reserve(binomial(m, d));
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  // Enumerate d-subsets of positions in colex order (Gosper's hack), then map
  // positions to the support's indices; the map is monotone so order is kept.
  std::uint64_t pos = (d == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << d) - 1);
  const std::uint64_t limit = (m == 64) ? 0 : (std::uint64_t{1} << m);
  while (true) {
    std::uint64_t bits = 0;
    for (std::uint64_t b = pos; b != 0; b &= b - 1) bits |= std::uint64_t{1} << idx[std::countr_zero(b)];
    out.emplace_back(bits);
    const std::uint64_t c = pos & (~pos + 1);
    const std::uint64_t r = pos + c;
    if (r == 0 || (limit != 0 && r >= limit)) break;
    pos = (((r ^ pos) >> 2) / c) | r;
    if (limit != 0 && pos >= limit) break;
  }
  return out;
}

}  // namespace secant
