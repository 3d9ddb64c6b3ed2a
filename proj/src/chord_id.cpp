#include "dichotic/chord_id.h"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace dichotic {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Binomial clamped to kSaturated instead of throwing.
std::uint64_t SaturatingBinomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc >= kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

template <typename T>
std::optional<T> ParseNumber(std::string_view text) {
  if (text.empty()) return std::nullopt;
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string ChordId::ToString() const {
  return std::to_string(n) + "v" + std::to_string(a);
}

std::optional<ChordId> ChordId::Parse(std::string_view text) {
  const auto v = text.find('v');
  if (v == std::string_view::npos) return std::nullopt;
  auto n = ParseNumber<int>(text.substr(0, v));
  auto a = ParseNumber<std::uint64_t>(text.substr(v + 1));
  if (!n || !a || *n < 2 || *a < 1) return std::nullopt;
  return ChordId{*n, *a};
}

PitchClassSet::PitchClassSet(std::vector<int> offsets)
    : offsets_(std::move(offsets)) {
  if (offsets_.size() < 2) {
    throw std::invalid_argument("a chord set needs at least two voices");
  }
  if (offsets_.front() != 0) {
    throw std::invalid_argument("chord offsets must start at 0");
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    if (offsets_[i] <= offsets_[i - 1]) {
      throw std::invalid_argument("chord offsets must be strictly increasing");
    }
  }
}

std::string PitchClassSet::ToString() const {
  std::string s;
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(offsets_[i]);
  }
  return s;
}

PitchClassSet FirstChord(int n) {
  if (n < 2) throw std::invalid_argument("chords need at least two voices");
  std::vector<int> offsets(n);
  for (int i = 0; i < n; ++i) offsets[i] = i;
  return PitchClassSet(std::move(offsets));
}

PitchClassSet Successor(const PitchClassSet& chord) {
  std::vector<int> p = chord.offsets();
  const int last = static_cast<int>(p.size()) - 1;  // index of the top voice
  // Inner voices occupy indices 1..last-1. Moving voice k up keeps the voices
  // above it packed, so the highest of them lands at p[k] + 1 + (last-1-k).
  for (int k = last - 1; k >= 1; --k) {
    if (p[k] + 1 + (last - 1 - k) < p[last]) {
      ++p[k];
      for (int j = k + 1; j < last; ++j) p[j] = p[k] + (j - k);
      return PitchClassSet(std::move(p));
    }
  }
  ++p[last];
  for (int j = 1; j < last; ++j) p[j] = j;
  return PitchClassSet(std::move(p));
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  const std::uint64_t value = SaturatingBinomial(n, k);
  if (value == kSaturated) throw std::overflow_error("binomial overflow");
  return value;
}

std::uint64_t CountWithin(int n, int max_top) {
  if (n < 2 || max_top < n - 1) return 0;
  return Binomial(max_top, n - 1);
}

// Ordering: by top offset, then lexicographically by the inner voices
// (lowest inner voice most significant). Chords with top t number
// C(t-1, n-2), so those with top below t number C(t-1, n-1).
ChordId Rank(const PitchClassSet& chord) {
  const auto& p = chord.offsets();
  const int n = chord.size();
  const int top = chord.top();
  const int k = n - 2;
  const std::uint64_t m = top - 1;  // inner voices lie in 1..m
  std::uint64_t r = Binomial(top - 1, n - 1);
  int prev = 0;
  for (int i = 1; i <= k; ++i) {
    for (int v = prev + 1; v < p[i]; ++v) r += Binomial(m - v, k - i);
    prev = p[i];
  }
  if (r == kSaturated) throw std::overflow_error("chord ordinal overflow");
  return ChordId{n, r + 1};
}

PitchClassSet Unrank(const ChordId& id) {
  if (id.n < 2) throw std::invalid_argument("chord ids need n >= 2");
  if (id.a < 1) throw std::invalid_argument("chord ordinals start at 1");
  const std::uint64_t n = id.n;
  std::uint64_t r = id.a - 1;

  // Smallest top t with r < C(t, n-1).
  std::uint64_t lo = n - 1, hi = n - 1;
  while (SaturatingBinomial(hi, n - 1) <= r) {
    lo = hi + 1;
    hi = hi * 2 + 1;
    if (hi > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      throw std::invalid_argument("chord id " + id.ToString() +
                                  " is out of range");
    }
  }
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (SaturatingBinomial(mid, n - 1) <= r) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const std::uint64_t top = lo;
  r -= SaturatingBinomial(top - 1, n - 1);

  const std::uint64_t k = n - 2;
  const std::uint64_t m = top - 1;
  std::vector<int> offsets;
  offsets.reserve(n);
  offsets.push_back(0);
  std::uint64_t v = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    for (;; ++v) {
      const std::uint64_t block = SaturatingBinomial(m - v, k - i);
      if (r < block) break;
      r -= block;
    }
    offsets.push_back(static_cast<int>(v));
    ++v;
  }
  offsets.push_back(static_cast<int>(top));
  return PitchClassSet(std::move(offsets));
}

}  // namespace dichotic
