#include "dichotic/repan.h"

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.h"

namespace dichotic {
namespace {

EventTimeline Notes(const std::vector<std::tuple<std::uint64_t, std::uint64_t, int>>& notes,
                    int tpq = 480, int velocity = 100) {
  EventTimeline tl;
  tl.ticks_per_quarter = tpq;
  tl.tracks.resize(1);
  auto& events = tl.tracks[0].events;
  for (const auto& [on, off, pitch] : notes) {
    events.push_back(MidiEvent::NoteOn(on, 0, pitch, velocity));
    events.push_back(MidiEvent::NoteOff(off, 0, pitch));
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const MidiEvent& a, const MidiEvent& b) { return a.tick < b.tick; });
  return tl;
}

using NoteKey = std::tuple<int, std::uint64_t, std::uint64_t, int>;

std::vector<NoteKey> NoteMultiset(const EventTimeline& tl) {
  std::vector<NoteKey> out;
  for (const Note& n : CollectNotes(tl)) {
    out.emplace_back(n.pitch, n.onset, n.duration(), n.velocity);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(SegmentChordsTest, SimultaneousNotesFormOneSegment) {
  const auto segments = SegmentChords(Notes({{0, 100, 60}, {0, 100, 64}, {0, 100, 67}}), 10);
  ASSERT_EQ(segments.size(), 1u);
  EXPECT_EQ(segments[0].chord.size(), 3u);
  EXPECT_EQ(segments[0].members.size(), 3u);
}

TEST(SegmentChordsTest, WindowJoinsNearbyOnsets) {
  const auto segments = SegmentChords(Notes({{0, 100, 60}, {5, 100, 64}}), 10);
  ASSERT_EQ(segments.size(), 1u);
  EXPECT_EQ(segments[0].onset_tick, 0u);
}

TEST(SegmentChordsTest, SustainedNotesJoinLaterChords) {
  const auto segments = SegmentChords(Notes({{0, 200, 60}, {100, 150, 64}}), 10);
  ASSERT_EQ(segments.size(), 2u);
  EXPECT_EQ(segments[1].onset_tick, 100u);
  ASSERT_EQ(segments[1].chord.size(), 2u);
  EXPECT_EQ(segments[1].chord[0].pitch, 60);
  EXPECT_EQ(segments[1].sustained, (std::vector<std::size_t>{0}));
  EXPECT_EQ(segments[1].members, (std::vector<std::size_t>{1}));
}

TEST(SegmentChordsTest, ReleasedNotesDoNotCarryOver) {
  const auto segments = SegmentChords(Notes({{0, 100, 60}, {100, 150, 64}}), 10);
  ASSERT_EQ(segments.size(), 2u);
  EXPECT_EQ(segments[1].chord.size(), 1u);
}

TEST(SegmentChordsTest, EveryNoteInExactlyOneSegment) {
  std::mt19937 rng(8);
  for (int k = 0; k < 200; ++k) {
    const EventTimeline tl = oracle::RandomTimeline(rng);
    const auto notes = CollectNotes(tl);
    std::vector<int> seen(notes.size(), 0);
    for (const auto& s : SegmentChords(notes, 30)) {
      for (std::size_t m : s.members) {
        ++seen[m];
        EXPECT_LE(notes[m].onset - s.onset_tick, 30u);
      }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST(RepanTest, MajorTriadUsesThreeChannels) {
  RepanOptions options;
  const RepanResult result = Repan(Notes({{0, 480, 60}, {0, 480, 64}, {0, 480, 67}}), options);
  ASSERT_EQ(result.reports.size(), 1u);
  EXPECT_EQ(result.reports[0].report.total, 4);
  for (const Note& n : CollectNotes(result.timeline)) {
    const int expected = n.pitch == 64 ? 0 : n.pitch == 60 ? 1 : 2;
    EXPECT_EQ(n.channel, expected) << n.pitch;
  }
  const auto& head = result.timeline.tracks[0].events;
  ASSERT_GE(head.size(), 3u);
  EXPECT_EQ(head[0], MidiEvent::Control(0, 0, kControllerPan, 0));
  EXPECT_EQ(head[1], MidiEvent::Control(0, 1, kControllerPan, 64));
  EXPECT_EQ(head[2], MidiEvent::Control(0, 2, kControllerPan, 127));
}

TEST(RepanTest, MelodyStaysCentered) {
  const RepanResult result =
      Repan(Notes({{0, 100, 60}, {100, 200, 62}, {200, 300, 64}}), RepanOptions{});
  ASSERT_EQ(result.reports.size(), 3u);
  for (const auto& r : result.reports) EXPECT_EQ(r.report.total, 0);
  for (const Note& n : CollectNotes(result.timeline)) EXPECT_EQ(n.channel, 1);
}

TEST(RepanTest, SemitoneScaleSplitsAcrossEars) {
  std::vector<std::tuple<std::uint64_t, std::uint64_t, int>> notes;
  for (int step = 0; step < 12; ++step) {
    const std::uint64_t t = step * 240;
    notes.push_back({t, t + 240, 60 + step});
    notes.push_back({t, t + 240, 61 + step});
  }
  RepanOptions options;
  options.config.mode = PanoramaMode::kFixed2;
  const RepanResult result = Repan(Notes(notes), options);
  ASSERT_EQ(result.reports.size(), 12u);
  for (const auto& r : result.reports) EXPECT_EQ(r.report.total, 0);
  const auto out = CollectNotes(result.timeline);
  for (std::size_t i = 0; i + 1 < out.size(); i += 2) {
    ASSERT_EQ(out[i].onset, out[i + 1].onset);
    EXPECT_NE(out[i].channel, out[i + 1].channel);
    EXPECT_NE(out[i].channel, 1);
  }
}

TEST(RepanTest, SustainedNotesKeepTheirChannel) {
  // A held C under a moving pair: the C is placed once, at its own onset.
  const RepanResult result =
      Repan(Notes({{0, 960, 60}, {0, 480, 61}, {0, 480, 62}, {480, 960, 66}, {480, 960, 67}}),
            RepanOptions{});
  ASSERT_EQ(result.reports.size(), 2u);
  EXPECT_EQ(result.reports[1].chord.size(), 3u);
  int first_c = -1, second_c = -1, count = 0;
  for (const MidiEvent& ev : result.timeline.tracks[0].events) {
    if (ev.kind == EventKind::kNoteOn && ev.data1 == 60) first_c = ev.channel;
    if (ev.kind == EventKind::kNoteOff && ev.data1 == 60) second_c = ev.channel, ++count;
  }
  EXPECT_EQ(count, 1);
  EXPECT_EQ(first_c, second_c);
}

TEST(RepanTest, ProgramChangesReplicatedAndPanDropped) {
  EventTimeline tl = Notes({{10, 20, 60}});
  auto& ev = tl.tracks[0].events;
  ev.insert(ev.begin(), MidiEvent::Control(0, 5, kControllerPan, 30));
  ev.insert(ev.begin(), MidiEvent::Program(0, 5, 19));
  const RepanResult result = Repan(tl, RepanOptions{});
  int programs = 0, pans = 0;
  for (const MidiEvent& e : result.timeline.tracks[0].events) {
    if (e.kind == EventKind::kProgramChange) {
      ++programs;
      EXPECT_EQ(e.data1, 19);
    }
    if (e.kind == EventKind::kControlChange && e.data1 == kControllerPan) {
      ++pans;
      EXPECT_TRUE(e.data2 == 0 || e.data2 == 64 || e.data2 == 127);
    }
  }
  EXPECT_EQ(programs, 3);
  EXPECT_EQ(pans, 3);
}

TEST(RepanTest, ConservesNotesOnRandomInput) {
  std::mt19937 rng(77);
  for (int k = 0; k < 200; ++k) {
    EventTimeline tl = oracle::RandomTimeline(rng);
    for (auto& track : tl.tracks) {
      for (auto& e : track.events) {
        if (e.kind == EventKind::kNoteOn || e.kind == EventKind::kNoteOff) e.channel = 0;
      }
    }
    RepanOptions options;
    options.config.mode = PanoramaMode::kFree;
    RepanResult result;
    try {
      result = Repan(tl, options);
    } catch (const std::invalid_argument&) {
      continue;  // more than 12 voices sounding at once
    }
    EXPECT_EQ(NoteMultiset(tl), NoteMultiset(result.timeline));
    for (const Note& n : CollectNotes(result.timeline)) {
      EXPECT_TRUE(n.channel == 0 || n.channel == 1 || n.channel == 2);
    }
    const auto reparsed = ParseSmf(WriteSmf(result.timeline));
    EXPECT_TRUE(EventEquivalent(reparsed, result.timeline));
  }
}

TEST(RepanTest, LayoutValidation) {
  RepanOptions options;
  options.layout = {3, 3, 4};
  EXPECT_THROW(Repan(Notes({{0, 1, 60}}), options), std::invalid_argument);
  options.layout = {0, 1, 16};
  EXPECT_THROW(Repan(Notes({{0, 1, 60}}), options), std::invalid_argument);
}

}  // namespace
}  // namespace dichotic
