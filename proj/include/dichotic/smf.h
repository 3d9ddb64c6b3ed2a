#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dichotic {

enum class EventKind : std::uint8_t {
  kNoteOff,
  kNoteOn,
  kPolyPressure,
  kControlChange,
  kProgramChange,
  kChannelPressure,
  kPitchBend,  // data1 = LSB, data2 = MSB
  kSysEx,      // meta_type holds the F0/F7 status, payload the body
  kMeta,       // meta_type + opaque payload
};

inline constexpr std::uint8_t kMetaTempo = 0x51;
inline constexpr std::uint8_t kMetaEndOfTrack = 0x2F;
inline constexpr std::uint8_t kControllerPan = 10;

/// One timestamped event; `tick` is absolute.
struct MidiEvent {
  std::uint64_t tick = 0;
  EventKind kind = EventKind::kMeta;
  std::uint8_t channel = 0;
  std::uint8_t data1 = 0;
  std::uint8_t data2 = 0;
  std::uint8_t meta_type = 0;
  std::vector<std::uint8_t> payload;

  static MidiEvent NoteOn(std::uint64_t tick, int channel, int key, int velocity);
  static MidiEvent NoteOff(std::uint64_t tick, int channel, int key,
                           int velocity = 0);
  static MidiEvent Control(std::uint64_t tick, int channel, int controller,
                           int value);
  static MidiEvent Program(std::uint64_t tick, int channel, int program);
  static MidiEvent Tempo(std::uint64_t tick, std::uint32_t usec_per_quarter);

  bool IsChannelEvent() const {
    return kind != EventKind::kSysEx && kind != EventKind::kMeta;
  }
  /// Note-on with velocity 0 counts as a note-off.
  bool StartsNote() const { return kind == EventKind::kNoteOn && data2 > 0; }
  bool EndsNote() const {
    return kind == EventKind::kNoteOff ||
           (kind == EventKind::kNoteOn && data2 == 0);
  }

  bool operator==(const MidiEvent&) const = default;
};

struct MidiTrack {
  std::vector<MidiEvent> events;  // non-decreasing ticks
  std::uint64_t end_tick = 0;     // end-of-track time; never before the last event

  std::uint64_t EffectiveEnd() const;
};

struct EventTimeline {
  int format = 1;
  int ticks_per_quarter = 480;
  std::vector<MidiTrack> tracks;
};

/// Same ticks-per-quarter, track count, events and end-of-track times. The
/// file format number and byte encoding are ignored.
bool EventEquivalent(const EventTimeline& a, const EventTimeline& b);

/// Malformed or unsupported Standard MIDI File.
class SmfError : public std::runtime_error {
 public:
  SmfError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Contract violation found while writing a timeline.
class SmfValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ParseOptions {
  /// Close notes still sounding at end-of-track with a note-off there
  /// instead of failing.
  bool close_dangling_notes = false;
};

/// Reads a format 0 or 1 file with metrical time division. Running status is
/// expanded, unknown chunks are skipped and unknown meta events are kept.
/// Throws SmfError with the byte offset of the problem.
EventTimeline ParseSmf(std::span<const std::uint8_t> bytes,
                       const ParseOptions& options = {});

/// Writes a format 1 file with explicit status bytes. Throws
/// SmfValidationError on out-of-range values or decreasing ticks.
std::vector<std::uint8_t> WriteSmf(const EventTimeline& timeline);

/// A note-on paired with its note-off.
struct Note {
  std::size_t track = 0;
  std::size_t on_index = 0;   // index into the track's events
  std::size_t off_index = 0;
  int channel = 0;
  int pitch = 0;
  int velocity = 0;
  std::uint64_t onset = 0;
  std::uint64_t offset = 0;

  std::uint64_t duration() const { return offset - onset; }
};

/// Pairs note-ons with note-offs first-in first-out per (track, channel,
/// pitch). Sorted by onset, then pitch, track and event index. Throws
/// SmfValidationError on a note-on that is never closed.
std::vector<Note> CollectNotes(const EventTimeline& timeline);

}  // namespace dichotic
