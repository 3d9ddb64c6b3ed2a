#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dichotic/chord_id.h"
#include "dichotic/interval_table.h"
#include "dichotic/model.h"

namespace dichotic {

/// Edge ordering convention applied to otherwise mirror-equivalent results.
/// Only "Increase Sort" (lower edge voices go Left) is defined.
enum class SortMode { kIncrease };

struct OptimizerConfig {
  static constexpr int kMinThresholdVoices = 2;
  static constexpr int kMaxThresholdVoices = 6;

  PanoramaMode mode = PanoramaMode::kFixed3;
  /// Dissonance thresholds for 2..6 voices. A chord whose all-center total
  /// does not exceed its threshold is left in the center.
  std::array<double, 5> thresholds{};
  SortMode sort_mode = SortMode::kIncrease;
  int base_note = 60;
  bool swap_channels = false;

  /// Threshold for an n-voice chord; 0 outside 2..6.
  double ThresholdFor(std::size_t n) const;

  /// Throws std::invalid_argument on negative thresholds or a base note
  /// outside 0..127.
  void Validate() const;
};

/// Raised when a mode admits no assignment for a chord of the given size,
/// or when the search would exceed the exhaustive-search cap.
class SearchSpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest voice count searched exhaustively in kFree and kFixed3 (3^12).
inline constexpr std::size_t kMaxExhaustiveVoices = 12;

/// Every assignment allowed by `mode` for n voices, in odometer order over
/// (Left, Center, Right) with voice 0 most significant.
std::vector<PanAssignment> AssignmentSpace(std::size_t n, PanoramaMode mode);

/// The most demanding mode not above `mode` that an n-voice chord can
/// satisfy: kFixed3 needs 3 voices and kFixed2 needs 2. kFixed3 and kFree
/// fall back to kFixed2 above kMaxExhaustiveVoices.
PanoramaMode FeasibleMode(std::size_t n, PanoramaMode mode);

/// Canonical polarity: compares the ascending pitch lists of the Left and
/// Right groups (a missing element counts as +infinity) and mirrors the
/// assignment when the Right list is smaller, so the group holding the
/// lowest edge pitch ends up Left. Identical lists put the lowest-indexed
/// edge voice Left. Totals are unchanged.
PanAssignment NormalizePolarity(const PanAssignment& assignment,
                                const Chord& chord,
                                SortMode sort_mode = SortMode::kIncrease);

/// Strict ordering used to pick among equal-total candidates: true when `a`
/// should win over `b`. Prefers higher center pitches (descending center
/// pitch lists compared lexicographically), then the lexicographically
/// smaller position vector with Left < Center < Right.
bool PreferOnTie(const PanAssignment& a, const PanAssignment& b,
                 const Chord& chord);

/// Minimum-dissonance assignment for `chord` under `config`.
///
/// Chords whose all-center total is within the threshold stay diotic and
/// the report's mode is kFixed1. Otherwise the whole space of the configured
/// mode is scanned. Throws SearchSpaceError when that space is empty or too
/// large.
DissonanceReport Optimize(const Chord& chord, const OptimizerConfig& config,
                          const IntervalTable& table = IntervalTable::Default());

/// In-octave n-voice chords (top offset <= 11) ordered by ascending
/// three-point optimal total, ties by ordinal; truncated to `limit`.
/// Two-voice chords fall back to the two-point mode.
std::vector<ChordId> AccordChain(int n, std::size_t limit,
                                 const IntervalTable& table = IntervalTable::Default(),
                                 int base_note = 60);

}  // namespace dichotic
