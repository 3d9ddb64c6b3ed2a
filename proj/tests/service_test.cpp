#include "dichotic/service.h"

#include <gtest/gtest.h>

namespace dichotic {
namespace {

Json AnalyzeJson(const Json& request) { return Analyze(ParseAnalysisRequest(request)); }

TEST(PanNotationTest, GroupsLeftCenterRight) {
  const Chord chord = Chord::FromPitches(std::vector<int>{60, 64, 67});
  EXPECT_EQ(PanNotation(chord, PanAssignment::FromString("CLR"), 60), "4-,0,7+");
  EXPECT_EQ(PanNotation(chord, PanAssignment::FromString("LRR"), 60), "0-,4+,7+");
  EXPECT_EQ(PanNotation(chord, PanAssignment::FromString("CCC"), 48), "12,16,19");
  const auto parsed = ParsePanNotation("10-,0,11+");
  ASSERT_EQ(parsed.size(), 3u);
  EXPECT_EQ(parsed[0].offset, 10);
  EXPECT_EQ(parsed[0].position, PanPosition::kLeft);
  EXPECT_EQ(parsed[1].position, PanPosition::kCenter);
  EXPECT_EQ(parsed[2].position, PanPosition::kRight);
  EXPECT_THROW(ParsePanNotation("1,x"), std::invalid_argument);
}

TEST(AnalyzeTest, ById) {
  const Json report = AnalyzeJson({{"chord_id", "3v18"}, {"mode", 3}});
  EXPECT_EQ(report["assignment"], "0-,7,3+");
  EXPECT_EQ(report["total"], 4);
  EXPECT_EQ(report["ppn"], 3);
  EXPECT_EQ(report["chord_id"], "3v18");
  EXPECT_EQ(report["schema"], 1);
  EXPECT_EQ(report["pairs"].size(), 3u);
}

TEST(AnalyzeTest, ByNotes) {
  EXPECT_EQ(AnalyzeJson({{"notes", {60, 63, 67}}, {"mode", "1"}})["total"], 18);
  const Json single = AnalyzeJson({{"notes", {60}}, {"mode", 1}});
  EXPECT_EQ(single["total"], 0);
  EXPECT_TRUE(single["chord_id"].is_null());
  EXPECT_EQ(AnalyzeJson({{"notes", {60, 61}}, {"mode", 2}})["total"], 0);
  const Json soft = AnalyzeJson({{"notes", {60, 61}}, {"velocities", {100, 50}}, {"mode", 1}});
  EXPECT_EQ(soft["total"], 11);
}

TEST(AnalyzeTest, OptionsAreHonored) {
  const Json diotic = AnalyzeJson(
      {{"chord_id", "3v19"}, {"mode", 3}, {"thresholds", {{"3", 20}}}});
  EXPECT_EQ(diotic["total"], 18);
  EXPECT_EQ(diotic["mode"], "1");
  EXPECT_EQ(diotic["requested_mode"], "3");
  const Json swapped = AnalyzeJson({{"chord_id", "3v19"}, {"swap_channels", true}});
  EXPECT_EQ(swapped["assignment"], "7-,0,4+");
  const Json shifted = AnalyzeJson({{"chord_id", "3v19"}, {"base_note", 48}});
  EXPECT_EQ(shifted["voices"][0]["pitch"], 48);
  Json flat = Json::array();
  for (int i = 0; i < 13; ++i) flat.push_back(i == 0 || i == 12 ? 0 : 1);
  EXPECT_EQ(AnalyzeJson({{"chord_id", "3v1"}, {"mode", 1}, {"table", flat}})["total"], 3);
}

TEST(AnalyzeTest, FractionalTotalsStayNumbers) {
  const Json report =
      AnalyzeJson({{"notes", {60, 61}}, {"velocities", {100, 30}}, {"mode", 1}});
  EXPECT_DOUBLE_EQ(report["total"].get<double>(), 22 * 0.3);
}

TEST(AnalyzeTest, MalformedRequests) {
  const Json bad[] = {
      Json::array(),
      {{"mode", 3}},
      {{"chord_id", "3v1"}, {"notes", {60}}},
      {{"chord_id", "0v1"}},
      {{"chord_id", 5}},
      {{"notes", {60, 200}}},
      {{"notes", {60, 64}}, {"velocities", {1}}},
      {{"notes", {60, 64}}, {"mode", 7}},
      {{"notes", {60, 64}}, {"mode", 3}},
      {{"notes", {60, 64}}, {"thresholds", {{"9", 1}}}},
      {{"notes", {60, 64}}, {"thresholds", {-1, 0, 0, 0, 0}}},
      {{"notes", {60, 64}}, {"table", {1, 2}}},
      {{"notes", {60, 64}}, {"swap_channels", "yes"}},
  };
  for (const Json& request : bad) {
    try {
      AnalyzeJson(request);
      ADD_FAILURE() << "accepted " << request.dump();
    } catch (const RequestError& e) {
      EXPECT_EQ(e.status(), 400) << request.dump();
    }
  }
}

TEST(ChordInfoTest, AllModes) {
  const Json info = ChordInfo({3, 19});
  EXPECT_EQ(info["composition"], Json({0, 4, 7}));
  EXPECT_EQ(info["tdiss"]["1"], 18);
  EXPECT_EQ(info["tdiss"]["2"], 2);
  EXPECT_EQ(info["tdiss"]["3"], 4);
  EXPECT_EQ(info["reports"]["3"]["assignment"], "4-,0,7+");
  const Json dyad = ChordInfo({2, 1});
  EXPECT_TRUE(dyad["tdiss"]["3"].is_null());
  EXPECT_EQ(dyad["tdiss"]["2"], 0);
  EXPECT_THROW(ChordInfo({3, 5000}), RequestError);  // top note above 127
}

TEST(TableTest, ReferenceRowsAllMatch) {
  const auto rows = CheckReferenceTable();
  ASSERT_EQ(rows.size(), 165u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.match) << row.reference->chord_id << " ppn " << row.reference->ppn
                           << ": " << row.composition << " " << row.tdiss;
  }
  const Json table = TableJson(3);
  EXPECT_EQ(table["matched"], 165);
  EXPECT_THROW(TableJson(4), RequestError);
}

TEST(TableTest, SpotRows) {
  auto find = [](std::string_view id, int ppn) {
    for (const auto& row : CheckReferenceTable()) {
      if (row.reference->chord_id == id && row.reference->ppn == ppn) return row;
    }
    throw std::runtime_error("row missing");
  };
  EXPECT_EQ(find("3v25", 1).tdiss, 20);
  EXPECT_EQ(find("3v17", 3).tdiss, 3);
  EXPECT_EQ(find("3v17", 3).composition, "0-,7,2+");
  EXPECT_EQ(find("3v23", 2).tdiss, 8);
  EXPECT_EQ(find("3v40", 2).tdiss, 6);
  EXPECT_EQ(find("3v55", 1).tdiss, 56);
}

TEST(ChainJsonTest, Shape) {
  const Json chain = ChainJson(3, 2);
  ASSERT_EQ(chain["chain"].size(), 2u);
  EXPECT_EQ(chain["chain"][0]["id"], "3v17");
  EXPECT_EQ(chain["chain"][0]["tdiss"], 3);
  EXPECT_THROW(ChainJson(1, 2), RequestError);
}

TEST(Base64Test, KnownVectors) {
  auto enc = [](std::string s) {
    return Base64Encode({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
  };
  EXPECT_EQ(enc(""), "");
  EXPECT_EQ(enc("f"), "Zg==");
  EXPECT_EQ(enc("fo"), "Zm8=");
  EXPECT_EQ(enc("foo"), "Zm9v");
  EXPECT_EQ(enc("foobar"), "Zm9vYmFy");
}

}  // namespace
}  // namespace dichotic
