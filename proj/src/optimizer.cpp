#include "dichotic/optimizer.h"

#include <algorithm>
#include <limits>
#include <string>

namespace dichotic {

namespace {

// Visits every assignment over `alphabet` in odometer order (voice 0 most
// significant). The callback sees a reused buffer.
template <typename Fn>
void ForEachOver(std::size_t n, std::span<const PanPosition> alphabet, Fn&& fn) {
  std::vector<std::size_t> digit(n, 0);
  std::vector<PanPosition> positions(n, alphabet[0]);
  for (;;) {
    fn(std::span<const PanPosition>(positions));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++digit[k] < alphabet.size()) {
        positions[k] = alphabet[digit[k]];
        break;
      }
      digit[k] = 0;
      positions[k] = alphabet[0];
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

constexpr PanPosition kAll[] = {PanPosition::kLeft, PanPosition::kCenter,
                                PanPosition::kRight};
constexpr PanPosition kEdges[] = {PanPosition::kLeft, PanPosition::kRight};

bool Occupies(std::span<const PanPosition> positions, PanPosition p) {
  return std::find(positions.begin(), positions.end(), p) != positions.end();
}

bool InSpace(std::span<const PanPosition> positions, PanoramaMode mode) {
  switch (mode) {
    case PanoramaMode::kFixed1:
      return std::all_of(positions.begin(), positions.end(),
                         [](PanPosition p) { return p == PanPosition::kCenter; });
    case PanoramaMode::kFixed2:
      return !Occupies(positions, PanPosition::kCenter) &&
             Occupies(positions, PanPosition::kLeft) &&
             Occupies(positions, PanPosition::kRight);
    case PanoramaMode::kFixed3:
      return Occupies(positions, PanPosition::kCenter) &&
             Occupies(positions, PanPosition::kLeft) &&
             Occupies(positions, PanPosition::kRight);
    case PanoramaMode::kFree:
      return true;
  }
  return false;
}

void CheckSearchable(std::size_t n, PanoramaMode mode) {
  if (n == 0) throw SearchSpaceError("empty chord");
  if (mode == PanoramaMode::kFixed2 && n < 2) {
    throw SearchSpaceError("two-point panning needs at least 2 voices");
  }
  if (mode == PanoramaMode::kFixed3 && n < 3) {
    throw SearchSpaceError("three-point panning needs at least 3 voices");
  }
  if ((mode == PanoramaMode::kFixed3 || mode == PanoramaMode::kFree) &&
      n > kMaxExhaustiveVoices) {
    throw SearchSpaceError("exhaustive search limited to " +
                           std::to_string(kMaxExhaustiveVoices) + " voices");
  }
}

template <typename Fn>
void ForEachInSpace(std::size_t n, PanoramaMode mode, Fn&& fn) {
  if (mode == PanoramaMode::kFixed1) {
    const std::vector<PanPosition> center(n, PanPosition::kCenter);
    fn(std::span<const PanPosition>(center));
    return;
  }
  const std::span<const PanPosition> alphabet =
      mode == PanoramaMode::kFixed2 ? std::span<const PanPosition>(kEdges)
                                    : std::span<const PanPosition>(kAll);
  ForEachOver(n, alphabet, [&](std::span<const PanPosition> positions) {
    if (InSpace(positions, mode)) fn(positions);
  });
}

std::vector<int> SortedPitches(const Chord& chord,
                               std::span<const PanPosition> positions,
                               PanPosition which) {
  std::vector<int> out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] == which) out.push_back(chord[i].pitch);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Negative when `a` should be on the Left rather than `b`.
int CompareEdgeGroups(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const long x = i < a.size() ? a[i] : std::numeric_limits<long>::max();
    const long y = i < b.size() ? b[i] : std::numeric_limits<long>::max();
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

bool NeedsMirror(std::span<const PanPosition> positions, const Chord& chord) {
  const int cmp =
      CompareEdgeGroups(SortedPitches(chord, positions, PanPosition::kLeft),
                        SortedPitches(chord, positions, PanPosition::kRight));
  if (cmp != 0) return cmp > 0;
  for (PanPosition p : positions) {
    if (p != PanPosition::kCenter) return p == PanPosition::kRight;
  }
  return false;
}

}  // namespace

double OptimizerConfig::ThresholdFor(std::size_t n) const {
  if (n < kMinThresholdVoices || n > kMaxThresholdVoices) return 0.0;
  return thresholds[n - kMinThresholdVoices];
}

void OptimizerConfig::Validate() const {
  for (double t : thresholds) {
    if (!(t >= 0.0)) {
      throw std::invalid_argument("dissonance thresholds must be non-negative");
    }
  }
  if (base_note < 0 || base_note > 127) {
    throw std::invalid_argument("base note out of MIDI range");
  }
}

std::vector<PanAssignment> AssignmentSpace(std::size_t n, PanoramaMode mode) {
  CheckSearchable(n, mode);
  std::vector<PanAssignment> out;
  ForEachInSpace(n, mode, [&](std::span<const PanPosition> positions) {
    out.emplace_back(std::vector<PanPosition>(positions.begin(), positions.end()));
  });
  return out;
}

PanoramaMode FeasibleMode(std::size_t n, PanoramaMode mode) {
  if ((mode == PanoramaMode::kFixed3 || mode == PanoramaMode::kFree) &&
      n > kMaxExhaustiveVoices) {
    mode = PanoramaMode::kFixed2;
  }
  if (mode == PanoramaMode::kFixed3 && n < 3) mode = PanoramaMode::kFixed2;
  if (mode == PanoramaMode::kFixed2 && n < 2) mode = PanoramaMode::kFixed1;
  return mode;
}

PanAssignment NormalizePolarity(const PanAssignment& assignment,
                                const Chord& chord, SortMode sort_mode) {
  if (assignment.size() != chord.size()) {
    throw std::invalid_argument("assignment length differs from chord size");
  }
  switch (sort_mode) {
    case SortMode::kIncrease:
      break;
  }
  return NeedsMirror(assignment.positions(), chord) ? assignment.Mirrored()
                                                    : assignment;
}

bool PreferOnTie(const PanAssignment& a, const PanAssignment& b,
                 const Chord& chord) {
  auto center_a = SortedPitches(chord, a.positions(), PanPosition::kCenter);
  auto center_b = SortedPitches(chord, b.positions(), PanPosition::kCenter);
  std::reverse(center_a.begin(), center_a.end());
  std::reverse(center_b.begin(), center_b.end());
  if (center_a != center_b) return center_a > center_b;
  return a.positions() < b.positions();
}

DissonanceReport Optimize(const Chord& chord, const OptimizerConfig& config,
                          const IntervalTable& table) {
  config.Validate();
  const std::size_t n = chord.size();

  const PanAssignment diotic = PanAssignment::AllCenter(n);
  DissonanceReport best;
  if (TotalOnly(chord, diotic.positions(), table) <= config.ThresholdFor(n)) {
    best = TotalDissonance(chord, diotic, table);
    best.mode = PanoramaMode::kFixed1;
  } else {
    CheckSearchable(n, config.mode);
    // Every space is closed under mirroring, so scanning only canonical
    // polarities loses nothing.
    double best_total = std::numeric_limits<double>::infinity();
    PanAssignment winner;
    ForEachInSpace(n, config.mode, [&](std::span<const PanPosition> positions) {
      if (NeedsMirror(positions, chord)) return;
      const double total = TotalOnly(chord, positions, table);
      if (total > best_total) return;
      PanAssignment candidate(
          std::vector<PanPosition>(positions.begin(), positions.end()));
      if (total < best_total || PreferOnTie(candidate, winner, chord)) {
        best_total = total;
        winner = std::move(candidate);
      }
    });
    best = TotalDissonance(chord, winner, table);
    best.mode = config.mode;
  }

  if (config.swap_channels) {
    const auto mode = best.mode;
    best = TotalDissonance(chord, best.assignment.Mirrored(), table);
    best.mode = mode;
  }
  return best;
}

std::vector<ChordId> AccordChain(int n, std::size_t limit,
                                 const IntervalTable& table, int base_note) {
  if (n < 2) throw std::invalid_argument("chords need at least two voices");
  if (limit < 1) throw std::invalid_argument("chain limit must be positive");
  constexpr int kOctaveTop = 11;
  const std::uint64_t count = CountWithin(n, kOctaveTop);

  OptimizerConfig config;
  config.base_note = base_note;
  config.mode = FeasibleMode(static_cast<std::size_t>(n), PanoramaMode::kFixed3);

  std::vector<std::pair<double, ChordId>> scored;
  scored.reserve(count);
  PitchClassSet chord = FirstChord(n);
  for (std::uint64_t a = 1; a <= count; ++a) {
    std::vector<int> pitches;
    for (int offset : chord.offsets()) pitches.push_back(base_note + offset);
    const double total =
        Optimize(Chord::FromPitches(pitches), config, table).total;
    scored.push_back({total, ChordId{n, a}});
    if (a < count) chord = Successor(chord);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<ChordId> out;
  for (std::size_t i = 0; i < scored.size() && i < limit; ++i) {
    out.push_back(scored[i].second);
  }
  return out;
}

}  // namespace dichotic
