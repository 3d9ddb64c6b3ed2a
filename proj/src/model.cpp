#include "dichotic/model.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace dichotic {

void Validate(const Voice& voice) {
  if (voice.pitch < 0 || voice.pitch > 127) {
    throw std::invalid_argument("pitch out of MIDI range: " +
                                std::to_string(voice.pitch));
  }
  if (voice.velocity < 1 || voice.velocity > 127) {
    throw std::invalid_argument("velocity out of range 1..127: " +
                                std::to_string(voice.velocity));
  }
}

Chord::Chord(std::vector<Voice> voices) : voices_(std::move(voices)) {
  if (voices_.empty() || voices_.size() > kMaxVoices) {
    throw std::invalid_argument("chord needs 1.." + std::to_string(kMaxVoices) +
                                " voices, got " +
                                std::to_string(voices_.size()));
  }
  for (const Voice& v : voices_) Validate(v);
  std::stable_sort(voices_.begin(), voices_.end(),
                   [](const Voice& a, const Voice& b) { return a.pitch < b.pitch; });
}

Chord Chord::FromPitches(std::span<const int> pitches, int velocity) {
  std::vector<Voice> voices;
  voices.reserve(pitches.size());
  for (int p : pitches) voices.push_back({p, velocity});
  return Chord(std::move(voices));
}

PanPosition Mirror(PanPosition p) {
  switch (p) {
    case PanPosition::kLeft:
      return PanPosition::kRight;
    case PanPosition::kRight:
      return PanPosition::kLeft;
    case PanPosition::kCenter:
      break;
  }
  return PanPosition::kCenter;
}

char ToChar(PanPosition p) {
  switch (p) {
    case PanPosition::kLeft:
      return 'L';
    case PanPosition::kRight:
      return 'R';
    case PanPosition::kCenter:
      break;
  }
  return 'C';
}

PanAssignment PanAssignment::AllCenter(std::size_t n) {
  return PanAssignment(std::vector<PanPosition>(n, PanPosition::kCenter));
}

PanAssignment PanAssignment::FromString(std::string_view letters) {
  std::vector<PanPosition> out;
  out.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'L':
        out.push_back(PanPosition::kLeft);
        break;
      case 'C':
        out.push_back(PanPosition::kCenter);
        break;
      case 'R':
        out.push_back(PanPosition::kRight);
        break;
      default:
        throw std::invalid_argument(std::string("bad pan letter '") + c + "'");
    }
  }
  return PanAssignment(std::move(out));
}

int PanAssignment::ppn() const {
  bool seen[3] = {false, false, false};
  for (PanPosition p : positions_) seen[static_cast<int>(p)] = true;
  return int{seen[0]} + int{seen[1]} + int{seen[2]};
}

PanAssignment PanAssignment::Mirrored() const {
  std::vector<PanPosition> out(positions_);
  for (PanPosition& p : out) p = Mirror(p);
  return PanAssignment(std::move(out));
}

std::string PanAssignment::ToString() const {
  std::string s;
  s.reserve(positions_.size());
  for (PanPosition p : positions_) s.push_back(ToChar(p));
  return s;
}

std::string_view ToString(PanoramaMode mode) {
  switch (mode) {
    case PanoramaMode::kFixed1:
      return "1";
    case PanoramaMode::kFixed2:
      return "2";
    case PanoramaMode::kFixed3:
      return "3";
    case PanoramaMode::kFree:
      break;
  }
  return "free";
}

std::optional<PanoramaMode> ParsePanoramaMode(std::string_view text) {
  if (text == "1") return PanoramaMode::kFixed1;
  if (text == "2") return PanoramaMode::kFixed2;
  if (text == "3") return PanoramaMode::kFixed3;
  if (text == "free" || text == "Free") return PanoramaMode::kFree;
  return std::nullopt;
}

double PairFactor(const Voice& a, const Voice& b, PanPosition pos_a,
                  PanPosition pos_b) {
  auto ratio = [](double x, double y) {
    return std::min(x, y) / std::max(x, y);
  };
  if (pos_a == pos_b) return ratio(a.velocity, b.velocity);
  if (pos_a == PanPosition::kCenter) return ratio(a.velocity / 2.0, b.velocity);
  if (pos_b == PanPosition::kCenter) return ratio(b.velocity / 2.0, a.velocity);
  return 0.0;  // opposite edges
}

double PairDissonance(const Voice& a, const Voice& b, PanPosition pos_a,
                      PanPosition pos_b, const IntervalTable& table) {
  const double factor = PairFactor(a, b, pos_a, pos_b);
  if (factor == 0.0) return 0.0;
  return table(std::abs(a.pitch - b.pitch)) * factor;
}

DissonanceReport TotalDissonance(const Chord& chord,
                                 const PanAssignment& assignment,
                                 const IntervalTable& table) {
  if (assignment.size() != chord.size()) {
    throw std::invalid_argument(
        "assignment has " + std::to_string(assignment.size()) +
        " positions for a chord of " + std::to_string(chord.size()) +
        " voices");
  }
  DissonanceReport report;
  report.assignment = assignment;
  const std::size_t n = chord.size();
  report.pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairTerm term;
      term.i = i;
      term.j = j;
      term.interval = std::abs(chord[i].pitch - chord[j].pitch);
      term.raw = table(term.interval);
      term.factor = PairFactor(chord[i], chord[j], assignment[i], assignment[j]);
      term.contribution = PairDissonance(chord[i], chord[j], assignment[i],
                                         assignment[j], table);
      report.total += term.contribution;
      report.pairs.push_back(term);
    }
  }
  return report;
}

double TotalOnly(const Chord& chord, std::span<const PanPosition> positions,
                 const IntervalTable& table) {
  const std::size_t n = chord.size();
  if (positions.size() != n) {
    throw std::invalid_argument("assignment length differs from chord size");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      total += PairDissonance(chord[i], chord[j], positions[i], positions[j],
                              table);
    }
  }
  return total;
}

}  // namespace dichotic
