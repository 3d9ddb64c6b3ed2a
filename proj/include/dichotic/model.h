#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dichotic/interval_table.h"

namespace dichotic {

inline constexpr int kMaxVoices = 16;
inline constexpr int kDefaultVelocity = 100;

struct Voice {
  int pitch = 60;
  int velocity = kDefaultVelocity;

  bool operator==(const Voice&) const = default;
};

/// Throws std::invalid_argument unless pitch is 0..127 and velocity 1..127.
void Validate(const Voice& voice);

/// One sonority: 1..16 voices kept sorted ascending by pitch. Equal pitches
/// stay distinct voices and keep their input order.
class Chord {
 public:
  explicit Chord(std::vector<Voice> voices);

  /// Equal-velocity chord from raw MIDI pitches.
  static Chord FromPitches(std::span<const int> pitches,
                           int velocity = kDefaultVelocity);

  const std::vector<Voice>& voices() const { return voices_; }
  std::size_t size() const { return voices_.size(); }
  const Voice& operator[](std::size_t i) const { return voices_[i]; }

  bool operator==(const Chord&) const = default;

 private:
  std::vector<Voice> voices_;
};

enum class PanPosition { kLeft, kCenter, kRight };

PanPosition Mirror(PanPosition p);
char ToChar(PanPosition p);  // 'L', 'C', 'R'

/// One position per chord voice, index-aligned with Chord::voices().
class PanAssignment {
 public:
  PanAssignment() = default;
  explicit PanAssignment(std::vector<PanPosition> positions)
      : positions_(std::move(positions)) {}

  static PanAssignment AllCenter(std::size_t n);

  /// Parses a compact "LCR" string.
  static PanAssignment FromString(std::string_view letters);

  const std::vector<PanPosition>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  PanPosition operator[](std::size_t i) const { return positions_[i]; }

  /// Number of distinct positions occupied, 0 for an empty assignment.
  int ppn() const;

  /// Every Left becomes Right and vice versa.
  PanAssignment Mirrored() const;

  std::string ToString() const;  // e.g. "LCR"

  bool operator==(const PanAssignment&) const = default;

 private:
  std::vector<PanPosition> positions_;
};

/// Which assignments a search may use.
///   kFixed1: everything in the center (diotic).
///   kFixed2: both edges occupied, nothing in the center.
///   kFixed3: both edges and the center occupied.
///   kFree:   any assignment.
enum class PanoramaMode { kFixed1, kFixed2, kFixed3, kFree };

std::string_view ToString(PanoramaMode mode);  // "1", "2", "3", "free"
std::optional<PanoramaMode> ParsePanoramaMode(std::string_view text);

/// Scaling applied to a pair's interval dissonance.
///
/// Left/Right pairs never interact. Voices sharing a position scale by the
/// weaker/stronger velocity ratio. A center voice is heard at half its
/// velocity in each channel, so against an edge voice the ratio is taken
/// with v_center / 2.
double PairFactor(const Voice& a, const Voice& b, PanPosition pos_a,
                  PanPosition pos_b);

double PairDissonance(const Voice& a, const Voice& b, PanPosition pos_a,
                      PanPosition pos_b,
                      const IntervalTable& table = IntervalTable::Default());

struct PairTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  int interval = 0;
  double raw = 0.0;
  double factor = 0.0;
  double contribution = 0.0;

  bool operator==(const PairTerm&) const = default;
};

struct DissonanceReport {
  double total = 0.0;
  std::vector<PairTerm> pairs;  // (i, j) with i < j in row-major order
  PanAssignment assignment;
  std::optional<PanoramaMode> mode;  // unset for a direct evaluation

  bool operator==(const DissonanceReport&) const = default;
};

/// Sum of pair dissonances over every unordered voice pair.
/// Throws std::invalid_argument when the assignment length differs from the
/// chord's voice count.
DissonanceReport TotalDissonance(
    const Chord& chord, const PanAssignment& assignment,
    const IntervalTable& table = IntervalTable::Default());

/// Same sum without building the breakdown; used in hot search loops.
double TotalOnly(const Chord& chord, std::span<const PanPosition> positions,
                 const IntervalTable& table = IntervalTable::Default());

}  // namespace dichotic
