#pragma once

#include <array>
#include <span>

namespace dichotic {

/// Dissonance units per interval in semitones, unison through octave.
///
/// Intervals wider than an octave reuse the reduced interval's entry and add
/// `octave_increment` for every extra octave. An exact multiple of 12 reduces
/// to the octave entry, so with the default table 24 -> 2 and 36 -> 4.
class IntervalTable {
 public:
  static constexpr int kSize = 13;
  static constexpr double kDefaultOctaveIncrement = 2.0;

  /// The empirical default: 0, 22, 16, 10, 6, 4, 18, 2, 8, 12, 14, 20, 0.
  IntervalTable();

  /// Throws std::invalid_argument unless values[0] == values[12] == 0, all
  /// values are non-negative and the increment is non-negative.
  IntervalTable(std::span<const double> values,
                double octave_increment = kDefaultOctaveIncrement);

  static const IntervalTable& Default();

  /// Throws std::invalid_argument on a negative interval.
  double operator()(int interval) const;

  const std::array<double, kSize>& values() const { return values_; }
  double octave_increment() const { return octave_increment_; }

  bool operator==(const IntervalTable&) const = default;

 private:
  std::array<double, kSize> values_;
  double octave_increment_;
};

}  // namespace dichotic
