#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dichotic {

/// "NvA": ordinal A (from 1) among N-voice chords anchored at offset 0.
struct ChordId {
  int n = 2;
  std::uint64_t a = 1;

  std::string ToString() const;

  /// Accepts exactly "<digits>v<digits>" with n >= 2 and a >= 1.
  static std::optional<ChordId> Parse(std::string_view text);

  auto operator<=>(const ChordId&) const = default;
};

/// Semitone offsets of a chord relative to its lowest note: strictly
/// increasing, first element 0.
class PitchClassSet {
 public:
  /// Throws std::invalid_argument when not anchored at 0, not strictly
  /// increasing, or shorter than two voices.
  explicit PitchClassSet(std::vector<int> offsets);

  const std::vector<int>& offsets() const { return offsets_; }
  int size() const { return static_cast<int>(offsets_.size()); }
  int top() const { return offsets_.back(); }

  std::string ToString() const;  // "0,4,7"

  auto operator<=>(const PitchClassSet&) const = default;

 private:
  std::vector<int> offsets_;
};

/// (0, 1, ..., n-1), the densest chord. Throws on n < 2.
PitchClassSet FirstChord(int n);

/// Next chord in enumeration order.
///
/// The top-but-one voice moves up a semitone first; when it would reach the
/// top voice the next lower inner voice moves instead and every voice above
/// it (except the top) packs in right above. When no inner voice can move,
/// the top voice rises and the inner voices collapse to 1, 2, ..., n-2.
PitchClassSet Successor(const PitchClassSet& chord);

/// Throws std::invalid_argument for n < 2, a < 1, or an ordinal whose chord
/// is too wide to index with 64-bit counts.
PitchClassSet Unrank(const ChordId& id);

ChordId Rank(const PitchClassSet& chord);

/// Number of n-voice chords whose top offset is at most `max_top`.
std::uint64_t CountWithin(int n, int max_top);

/// Binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

}  // namespace dichotic
