#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dichotic/interval_table.h"
#include "dichotic/model.h"
#include "dichotic/optimizer.h"
#include "dichotic/smf.h"

namespace dichotic {

/// Notes starting together, scored together with whatever still sounds.
struct ChordSegment {
  std::uint64_t onset_tick = 0;
  Chord chord;
  /// Indices into the note list of notes starting in this segment.
  std::vector<std::size_t> members;
  /// Notes from earlier segments still sounding at onset_tick.
  std::vector<std::size_t> sustained;
  /// voice_notes[i] is the note behind chord voice i.
  std::vector<std::size_t> voice_notes;
};

/// Greedy onset clustering over notes sorted by onset (as CollectNotes
/// returns them): a segment opens at the first unassigned onset and takes
/// every note starting within `window_ticks` of it.
std::vector<ChordSegment> SegmentChords(std::span<const Note> notes,
                                        std::uint64_t window_ticks);

std::vector<ChordSegment> SegmentChords(const EventTimeline& timeline,
                                        std::uint64_t window_ticks);

/// Output channels for the three panorama points. Each is hard panned with
/// controller 10: Left 0, Center 64, Right 127.
struct RepanLayout {
  static constexpr std::uint8_t kPanLeft = 0;
  static constexpr std::uint8_t kPanCenter = 64;
  static constexpr std::uint8_t kPanRight = 127;

  int channel_left = 0;
  int channel_center = 1;
  int channel_right = 2;

  /// Throws std::invalid_argument unless the channels are distinct and 0..15.
  void Validate() const;
  int ChannelFor(PanPosition p) const;
};

struct RepanOptions {
  OptimizerConfig config;
  RepanLayout layout;
  /// Defaults to a 1/32 note (ticks_per_quarter / 8).
  std::optional<std::uint64_t> window_ticks;
};

struct SegmentReport {
  std::uint64_t onset_tick = 0;
  Chord chord;
  DissonanceReport report;
};

struct RepanResult {
  EventTimeline timeline;
  std::vector<SegmentReport> reports;  // one per segment
};

/// Re-routes every note to the channel of its panorama point.
///
/// Each segment is optimized with FeasibleMode() applied to the configured
/// mode, so short segments degrade to fewer points. Notes keep the channel
/// picked at their own onset; sustained notes only take part in scoring.
/// Pan controllers for the three channels are placed at tick 0 of the first
/// track. Other channel-wide messages are copied to all three channels,
/// except incoming pan controllers, which are dropped.
RepanResult Repan(const EventTimeline& timeline, const RepanOptions& options,
                  const IntervalTable& table = IntervalTable::Default());

}  // namespace dichotic
