#include "dichotic/smf.h"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace dichotic {

namespace {

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes, std::size_t base = 0)
      : bytes_(bytes), base_(base) {}

  std::size_t offset() const { return base_ + pos_; }
  bool done() const { return pos_ >= bytes_.size(); }
  std::size_t remaining() const { return bytes_.size() - pos_; }

  std::uint8_t U8(const char* what) {
    if (done()) throw SmfError(std::string("truncated ") + what, offset());
    return bytes_[pos_++];
  }
  std::uint8_t Peek(const char* what) const {
    if (done()) throw SmfError(std::string("truncated ") + what, offset());
    return bytes_[pos_];
  }
  std::uint32_t U16(const char* what) {
    std::uint32_t hi = U8(what);
    return (hi << 8) | U8(what);
  }
  std::uint32_t U32(const char* what) {
    std::uint32_t hi = U16(what);
    return (hi << 16) | U16(what);
  }
  std::uint32_t Vlq(const char* what) {
    const std::size_t start = offset();
    std::uint32_t value = 0;
    for (int i = 0; i < 4; ++i) {
      const std::uint8_t b = U8(what);
      value = (value << 7) | (b & 0x7F);
      if (!(b & 0x80)) return value;
    }
    throw SmfError(std::string("variable-length quantity too long in ") + what,
                   start);
  }
  std::span<const std::uint8_t> Bytes(std::size_t n, const char* what) {
    if (n > remaining()) {
      throw SmfError(std::string("truncated ") + what, offset());
    }
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  std::uint8_t DataByte(const char* what) {
    const std::size_t at = offset();
    const std::uint8_t b = U8(what);
    if (b & 0x80) throw SmfError(std::string("status byte inside ") + what, at);
    return b;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

struct OpenNote {
  std::size_t byte_offset;
};

MidiTrack ParseTrack(std::span<const std::uint8_t> body, std::size_t base,
                     const ParseOptions& options) {
  Reader in(body, base);
  MidiTrack track;
  std::uint64_t tick = 0;
  std::uint8_t running = 0;
  bool ended = false;
  // Unmatched note-ons per (channel, key), oldest first.
  std::map<std::pair<int, int>, std::deque<std::size_t>> open;

  while (!in.done()) {
    tick += in.Vlq("delta time");
    const std::size_t event_offset = in.offset();
    std::uint8_t status = in.Peek("event");
    if (status & 0x80) {
      in.U8("event");
    } else if (running) {
      status = running;
    } else {
      throw SmfError("data byte without running status", event_offset);
    }

    MidiEvent ev;
    ev.tick = tick;
    if (status == 0xFF) {
      running = 0;
      ev.kind = EventKind::kMeta;
      ev.meta_type = in.U8("meta event");
      const std::uint32_t len = in.Vlq("meta length");
      auto data = in.Bytes(len, "meta event");
      if (ev.meta_type == kMetaEndOfTrack) {
        ended = true;
        track.end_tick = tick;
        break;
      }
      ev.payload.assign(data.begin(), data.end());
    } else if (status == 0xF0 || status == 0xF7) {
      running = 0;
      ev.kind = EventKind::kSysEx;
      ev.meta_type = status;
      const std::uint32_t len = in.Vlq("sysex length");
      auto data = in.Bytes(len, "sysex event");
      ev.payload.assign(data.begin(), data.end());
    } else if (status >= 0xF0) {
      throw SmfError("unexpected system message in track", event_offset);
    } else {
      running = status;
      ev.channel = status & 0x0F;
      switch (status & 0xF0) {
        case 0x80:
          ev.kind = EventKind::kNoteOff;
          break;
        case 0x90:
          ev.kind = EventKind::kNoteOn;
          break;
        case 0xA0:
          ev.kind = EventKind::kPolyPressure;
          break;
        case 0xB0:
          ev.kind = EventKind::kControlChange;
          break;
        case 0xC0:
          ev.kind = EventKind::kProgramChange;
          break;
        case 0xD0:
          ev.kind = EventKind::kChannelPressure;
          break;
        default:
          ev.kind = EventKind::kPitchBend;
          break;
      }
      ev.data1 = in.DataByte("channel message");
      if (ev.kind != EventKind::kProgramChange &&
          ev.kind != EventKind::kChannelPressure) {
        ev.data2 = in.DataByte("channel message");
      }
      const auto key = std::make_pair(int{ev.channel}, int{ev.data1});
      if (ev.StartsNote()) {
        open[key].push_back(event_offset);
      } else if (ev.EndsNote()) {
        auto it = open.find(key);
        if (it != open.end() && !it->second.empty()) it->second.pop_front();
      }
    }
    track.events.push_back(std::move(ev));
  }
  if (!ended) track.end_tick = tick;

  std::size_t first_dangling = SIZE_MAX;
  for (const auto& [key, offsets] : open) {
    if (!offsets.empty()) first_dangling = std::min(first_dangling, offsets.front());
  }
  if (first_dangling != SIZE_MAX) {
    if (!options.close_dangling_notes) {
      throw SmfError("note-on without matching note-off", first_dangling);
    }
    for (const auto& [key, offsets] : open) {
      for (std::size_t i = 0; i < offsets.size(); ++i) {
        track.events.push_back(
            MidiEvent::NoteOff(track.end_tick, key.first, key.second));
      }
    }
  }
  return track;
}

void PutVlq(std::vector<std::uint8_t>& out, std::uint64_t value) {
  if (value > 0x0FFFFFFF) {
    throw SmfValidationError("delta time too large for a MIDI file");
  }
  std::uint8_t buf[4];
  int n = 0;
  buf[n++] = value & 0x7F;
  while (value >>= 7) buf[n++] = 0x80 | (value & 0x7F);
  while (n) out.push_back(buf[--n]);
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back((v >> s) & 0xFF);
}

std::uint8_t StatusNibble(EventKind kind) {
  switch (kind) {
    case EventKind::kNoteOff:
      return 0x80;
    case EventKind::kNoteOn:
      return 0x90;
    case EventKind::kPolyPressure:
      return 0xA0;
    case EventKind::kControlChange:
      return 0xB0;
    case EventKind::kProgramChange:
      return 0xC0;
    case EventKind::kChannelPressure:
      return 0xD0;
    case EventKind::kPitchBend:
      return 0xE0;
    case EventKind::kSysEx:
    case EventKind::kMeta:
      break;
  }
  return 0;
}

void Check(bool ok, std::size_t track, std::size_t index, const char* what) {
  if (!ok) {
    throw SmfValidationError("track " + std::to_string(track) + " event " +
                             std::to_string(index) + ": " + what);
  }
}

}  // namespace

MidiEvent MidiEvent::NoteOn(std::uint64_t tick, int channel, int key,
                            int velocity) {
  MidiEvent e;
  e.tick = tick;
  e.kind = EventKind::kNoteOn;
  e.channel = static_cast<std::uint8_t>(channel);
  e.data1 = static_cast<std::uint8_t>(key);
  e.data2 = static_cast<std::uint8_t>(velocity);
  return e;
}

MidiEvent MidiEvent::NoteOff(std::uint64_t tick, int channel, int key,
                             int velocity) {
  MidiEvent e = NoteOn(tick, channel, key, velocity);
  e.kind = EventKind::kNoteOff;
  return e;
}

MidiEvent MidiEvent::Control(std::uint64_t tick, int channel, int controller,
                             int value) {
  MidiEvent e = NoteOn(tick, channel, controller, value);
  e.kind = EventKind::kControlChange;
  return e;
}

MidiEvent MidiEvent::Program(std::uint64_t tick, int channel, int program) {
  MidiEvent e = NoteOn(tick, channel, program, 0);
  e.kind = EventKind::kProgramChange;
  return e;
}

MidiEvent MidiEvent::Tempo(std::uint64_t tick, std::uint32_t usec_per_quarter) {
  MidiEvent e;
  e.tick = tick;
  e.kind = EventKind::kMeta;
  e.meta_type = kMetaTempo;
  e.payload = {static_cast<std::uint8_t>(usec_per_quarter >> 16),
               static_cast<std::uint8_t>(usec_per_quarter >> 8),
               static_cast<std::uint8_t>(usec_per_quarter)};
  return e;
}

std::uint64_t MidiTrack::EffectiveEnd() const {
  return events.empty() ? end_tick : std::max(end_tick, events.back().tick);
}

bool EventEquivalent(const EventTimeline& a, const EventTimeline& b) {
  if (a.ticks_per_quarter != b.ticks_per_quarter) return false;
  if (a.tracks.size() != b.tracks.size()) return false;
  for (std::size_t t = 0; t < a.tracks.size(); ++t) {
    if (a.tracks[t].events != b.tracks[t].events) return false;
    if (a.tracks[t].EffectiveEnd() != b.tracks[t].EffectiveEnd()) return false;
  }
  return true;
}

SmfError::SmfError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
      offset_(offset) {}

EventTimeline ParseSmf(std::span<const std::uint8_t> bytes,
                       const ParseOptions& options) {
  Reader in(bytes);
  const auto magic = in.Bytes(4, "header");
  if (!std::equal(magic.begin(), magic.end(), "MThd")) {
    throw SmfError("missing MThd header", 0);
  }
  const std::uint32_t header_len = in.U32("header");
  if (header_len < 6) throw SmfError("header chunk too short", 4);
  const std::size_t header_body = in.offset();
  EventTimeline timeline;
  timeline.format = static_cast<int>(in.U16("header"));
  const std::uint32_t track_count = in.U16("header");
  const std::uint32_t division = in.U16("header");
  in.Bytes(header_len - 6, "header");

  if (timeline.format == 2) {
    throw SmfError("format 2 files are not supported", header_body);
  }
  if (timeline.format > 2) {
    throw SmfError("unknown file format " + std::to_string(timeline.format),
                   header_body);
  }
  if (timeline.format == 0 && track_count != 1) {
    throw SmfError("format 0 file must have exactly one track", header_body + 2);
  }
  if (division & 0x8000) {
    throw SmfError("SMPTE time division is not supported", header_body + 4);
  }
  if (division == 0) throw SmfError("zero ticks per quarter", header_body + 4);
  timeline.ticks_per_quarter = static_cast<int>(division);

  while (timeline.tracks.size() < track_count) {
    if (in.done()) {
      throw SmfError("expected " + std::to_string(track_count) +
                         " tracks, found " +
                         std::to_string(timeline.tracks.size()),
                     in.offset());
    }
    const std::size_t chunk_offset = in.offset();
    const auto type = in.Bytes(4, "chunk header");
    const std::uint32_t len = in.U32("chunk header");
    if (len > in.remaining()) {
      throw SmfError("chunk length " + std::to_string(len) +
                         " runs past end of file",
                     chunk_offset);
    }
    const std::size_t body_offset = in.offset();
    const auto body = in.Bytes(len, "chunk");
    if (!std::equal(type.begin(), type.end(), "MTrk")) continue;
    timeline.tracks.push_back(ParseTrack(body, body_offset, options));
  }
  return timeline;
}

std::vector<std::uint8_t> WriteSmf(const EventTimeline& timeline) {
  if (timeline.ticks_per_quarter < 1 || timeline.ticks_per_quarter > 0x7FFF) {
    throw SmfValidationError("ticks per quarter must be 1..32767");
  }
  if (timeline.tracks.size() > 0xFFFF) {
    throw SmfValidationError("too many tracks");
  }
  std::vector<std::uint8_t> out = {'M', 'T', 'h', 'd'};
  PutU32(out, 6);
  const std::size_t track_count = std::max<std::size_t>(timeline.tracks.size(), 1);
  for (std::uint32_t v : {1u, static_cast<std::uint32_t>(track_count),
                          static_cast<std::uint32_t>(timeline.ticks_per_quarter)}) {
    out.push_back((v >> 8) & 0xFF);
    out.push_back(v & 0xFF);
  }

  const MidiTrack empty;
  for (std::size_t t = 0; t < track_count; ++t) {
    const MidiTrack& track = timeline.tracks.empty() ? empty : timeline.tracks[t];
    std::vector<std::uint8_t> body;
    std::uint64_t last = 0;
    for (std::size_t i = 0; i < track.events.size(); ++i) {
      const MidiEvent& ev = track.events[i];
      Check(ev.tick >= last, t, i, "ticks decrease");
      PutVlq(body, ev.tick - last);
      last = ev.tick;
      switch (ev.kind) {
        case EventKind::kMeta:
          Check(ev.meta_type < 0x80, t, i, "meta type out of range");
          Check(ev.meta_type != kMetaEndOfTrack, t, i,
                "explicit end-of-track event");
          body.push_back(0xFF);
          body.push_back(ev.meta_type);
          PutVlq(body, ev.payload.size());
          body.insert(body.end(), ev.payload.begin(), ev.payload.end());
          break;
        case EventKind::kSysEx:
          Check(ev.meta_type == 0xF0 || ev.meta_type == 0xF7, t, i,
                "sysex status must be F0 or F7");
          body.push_back(ev.meta_type);
          PutVlq(body, ev.payload.size());
          body.insert(body.end(), ev.payload.begin(), ev.payload.end());
          break;
        default:
          Check(ev.channel < 16, t, i, "channel out of range");
          Check(ev.data1 < 0x80 && ev.data2 < 0x80, t, i,
                "data byte out of range");
          body.push_back(StatusNibble(ev.kind) | ev.channel);
          body.push_back(ev.data1);
          if (ev.kind != EventKind::kProgramChange &&
              ev.kind != EventKind::kChannelPressure) {
            body.push_back(ev.data2);
          } else {
            Check(ev.data2 == 0, t, i, "unused data byte must be 0");
          }
          break;
      }
    }
    PutVlq(body, track.EffectiveEnd() - last);
    body.insert(body.end(), {0xFF, kMetaEndOfTrack, 0x00});

    out.insert(out.end(), {'M', 'T', 'r', 'k'});
    PutU32(out, static_cast<std::uint32_t>(body.size()));
    out.insert(out.end(), body.begin(), body.end());
  }
  return out;
}

std::vector<Note> CollectNotes(const EventTimeline& timeline) {
  std::vector<Note> notes;
  for (std::size_t t = 0; t < timeline.tracks.size(); ++t) {
    const auto& events = timeline.tracks[t].events;
    std::map<std::pair<int, int>, std::deque<std::size_t>> open;
    for (std::size_t i = 0; i < events.size(); ++i) {
      const MidiEvent& ev = events[i];
      const auto key = std::make_pair(int{ev.channel}, int{ev.data1});
      if (ev.StartsNote()) {
        open[key].push_back(i);
      } else if (ev.EndsNote()) {
        auto it = open.find(key);
        if (it == open.end() || it->second.empty()) continue;
        const MidiEvent& on = events[it->second.front()];
        notes.push_back(Note{t, it->second.front(), i, on.channel, on.data1,
                             on.data2, on.tick, ev.tick});
        it->second.pop_front();
      }
    }
    for (const auto& [key, pending] : open) {
      if (!pending.empty()) {
        throw SmfValidationError("track " + std::to_string(t) +
                                 ": note-on at event " +
                                 std::to_string(pending.front()) +
                                 " is never released");
      }
    }
  }
  std::sort(notes.begin(), notes.end(), [](const Note& a, const Note& b) {
    return std::tie(a.onset, a.pitch, a.track, a.on_index) <
           std::tie(b.onset, b.pitch, b.track, b.on_index);
  });
  return notes;
}

}  // namespace dichotic
