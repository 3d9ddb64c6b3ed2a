#include "dichotic/repan.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dichotic {

std::vector<ChordSegment> SegmentChords(std::span<const Note> notes,
                                        std::uint64_t window_ticks) {
  std::vector<ChordSegment> segments;
  std::vector<std::size_t> sounding;  // notes from earlier segments
  std::size_t i = 0;
  while (i < notes.size()) {
    const std::uint64_t onset = notes[i].onset;
    std::erase_if(sounding,
                  [&](std::size_t k) { return notes[k].offset <= onset; });

    std::vector<std::size_t> members;
    while (i < notes.size() && notes[i].onset - onset <= window_ticks) {
      members.push_back(i++);
    }

    std::vector<std::size_t> voice_notes = sounding;
    voice_notes.insert(voice_notes.end(), members.begin(), members.end());
    std::sort(voice_notes.begin(), voice_notes.end(),
              [&](std::size_t a, std::size_t b) {
                if (notes[a].pitch != notes[b].pitch) {
                  return notes[a].pitch < notes[b].pitch;
                }
                return a < b;
              });
    std::vector<Voice> voices;
    voices.reserve(voice_notes.size());
    for (std::size_t k : voice_notes) {
      voices.push_back({notes[k].pitch, notes[k].velocity});
    }

    segments.push_back(ChordSegment{onset, Chord(std::move(voices)), members,
                                    sounding, std::move(voice_notes)});
    sounding.insert(sounding.end(), members.begin(), members.end());
  }
  return segments;
}

std::vector<ChordSegment> SegmentChords(const EventTimeline& timeline,
                                        std::uint64_t window_ticks) {
  const std::vector<Note> notes = CollectNotes(timeline);
  return SegmentChords(notes, window_ticks);
}

void RepanLayout::Validate() const {
  for (int ch : {channel_left, channel_center, channel_right}) {
    if (ch < 0 || ch > 15) {
      throw std::invalid_argument("layout channel out of range: " +
                                  std::to_string(ch));
    }
  }
  if (channel_left == channel_center || channel_left == channel_right ||
      channel_center == channel_right) {
    throw std::invalid_argument("layout channels must be distinct");
  }
}

int RepanLayout::ChannelFor(PanPosition p) const {
  switch (p) {
    case PanPosition::kLeft:
      return channel_left;
    case PanPosition::kRight:
      return channel_right;
    case PanPosition::kCenter:
      break;
  }
  return channel_center;
}

RepanResult Repan(const EventTimeline& timeline, const RepanOptions& options,
                  const IntervalTable& table) {
  options.layout.Validate();
  options.config.Validate();
  const RepanLayout& layout = options.layout;
  const std::uint64_t window =
      options.window_ticks.value_or(static_cast<std::uint64_t>(
          std::max(timeline.ticks_per_quarter, 0) / 8));

  const std::vector<Note> notes = CollectNotes(timeline);
  const std::vector<ChordSegment> segments = SegmentChords(notes, window);

  std::vector<int> note_channel(notes.size(), layout.channel_center);
  RepanResult result;
  result.reports.reserve(segments.size());
  for (const ChordSegment& segment : segments) {
    OptimizerConfig config = options.config;
    config.mode = FeasibleMode(segment.chord.size(), config.mode);
    DissonanceReport report = Optimize(segment.chord, config, table);
    for (std::size_t v = 0; v < segment.voice_notes.size(); ++v) {
      const std::size_t k = segment.voice_notes[v];
      if (std::binary_search(segment.members.begin(), segment.members.end(), k)) {
        note_channel[k] = layout.ChannelFor(report.assignment[v]);
      }
    }
    result.reports.push_back(
        SegmentReport{segment.onset_tick, segment.chord, std::move(report)});
  }

  // Channel per note event, -1 where the event is not part of a paired note.
  std::vector<std::vector<int>> routed(timeline.tracks.size());
  for (std::size_t t = 0; t < timeline.tracks.size(); ++t) {
    routed[t].assign(timeline.tracks[t].events.size(), -1);
  }
  for (std::size_t k = 0; k < notes.size(); ++k) {
    routed[notes[k].track][notes[k].on_index] = note_channel[k];
    routed[notes[k].track][notes[k].off_index] = note_channel[k];
  }

  EventTimeline& out = result.timeline;
  out.format = 1;
  out.ticks_per_quarter = timeline.ticks_per_quarter;
  out.tracks.resize(std::max<std::size_t>(timeline.tracks.size(), 1));
  const int channels[] = {layout.channel_left, layout.channel_center,
                          layout.channel_right};
  out.tracks[0].events = {
      MidiEvent::Control(0, layout.channel_left, kControllerPan,
                         RepanLayout::kPanLeft),
      MidiEvent::Control(0, layout.channel_center, kControllerPan,
                         RepanLayout::kPanCenter),
      MidiEvent::Control(0, layout.channel_right, kControllerPan,
                         RepanLayout::kPanRight)};

  for (std::size_t t = 0; t < timeline.tracks.size(); ++t) {
    const MidiTrack& in_track = timeline.tracks[t];
    MidiTrack& out_track = out.tracks[t];
    out_track.end_tick = in_track.end_tick;
    for (std::size_t i = 0; i < in_track.events.size(); ++i) {
      const MidiEvent& ev = in_track.events[i];
      if (!ev.IsChannelEvent()) {
        out_track.events.push_back(ev);
      } else if (ev.kind == EventKind::kNoteOn || ev.kind == EventKind::kNoteOff) {
        MidiEvent copy = ev;
        copy.channel = static_cast<std::uint8_t>(
            routed[t][i] >= 0 ? routed[t][i] : layout.channel_center);
        out_track.events.push_back(std::move(copy));
      } else if (ev.kind == EventKind::kControlChange &&
                 ev.data1 == kControllerPan) {
        continue;
      } else {
        for (int ch : channels) {
          MidiEvent copy = ev;
          copy.channel = static_cast<std::uint8_t>(ch);
          out_track.events.push_back(std::move(copy));
        }
      }
    }
  }
  return result;
}

}  // namespace dichotic
