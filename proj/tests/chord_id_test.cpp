#include "dichotic/chord_id.h"

#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dichotic/reference_table.h"
#include "dichotic/service.h"

namespace dichotic {
namespace {

PitchClassSet Set(std::vector<int> offsets) { return PitchClassSet(std::move(offsets)); }

TEST(ChordIdTest, TextForm) {
  EXPECT_EQ((ChordId{3, 19}).ToString(), "3v19");
  EXPECT_EQ(ChordId::Parse("3v19"), (ChordId{3, 19}));
  EXPECT_EQ(ChordId::Parse("12v4000"), (ChordId{12, 4000}));
  for (const char* bad : {"", "v1", "3v", "3v0", "0v1", "1v1", "3V19", "3v19x",
                          " 3v19", "3v-1", "-3v1"}) {
    EXPECT_FALSE(ChordId::Parse(bad).has_value()) << bad;
  }
}

TEST(PitchClassSetTest, Validation) {
  EXPECT_THROW(Set({1, 2}), std::invalid_argument);
  EXPECT_THROW(Set({0, 2, 2}), std::invalid_argument);
  EXPECT_THROW(Set({0, 3, 2}), std::invalid_argument);
  EXPECT_THROW(Set({0}), std::invalid_argument);
  EXPECT_EQ(Set({0, 4, 7}).ToString(), "0,4,7");
}

TEST(FirstChordTest, Densest) {
  EXPECT_EQ(FirstChord(2), Set({0, 1}));
  EXPECT_EQ(FirstChord(3), Set({0, 1, 2}));
  EXPECT_EQ(FirstChord(4), Set({0, 1, 2, 3}));
  EXPECT_THROW(FirstChord(1), std::invalid_argument);
}

TEST(SuccessorTest, Examples) {
  EXPECT_EQ(Successor(Set({0, 1, 2})), Set({0, 1, 3}));
  EXPECT_EQ(Successor(Set({0, 2, 3})), Set({0, 1, 4}));
  EXPECT_EQ(Successor(Set({0, 1, 2, 3})), Set({0, 1, 2, 4}));
  // The top-but-one voice moves first; a blocked one hands over to the
  // voice below it.
  EXPECT_EQ(Successor(Set({0, 1, 2, 5})), Set({0, 1, 3, 5}));
  EXPECT_EQ(Successor(Set({0, 1, 4, 5})), Set({0, 2, 3, 5}));
  EXPECT_EQ(Successor(Set({0, 3, 4, 5})), Set({0, 1, 2, 6}));
  EXPECT_EQ(Successor(Set({0, 5})), Set({0, 6}));
}

TEST(UnrankTest, TableRows) {
  EXPECT_EQ(Unrank({3, 1}), Set({0, 1, 2}));
  EXPECT_EQ(Unrank({3, 19}), Set({0, 4, 7}));
  EXPECT_EQ(Unrank({3, 55}), Set({0, 10, 11}));
  EXPECT_EQ(Rank(Set({0, 4, 7})), (ChordId{3, 19}));
  EXPECT_EQ(Rank(Set({0, 1, 2})), (ChordId{3, 1}));
  EXPECT_EQ(Rank(Set({0, 3, 5})), (ChordId{3, 9}));
}

TEST(UnrankTest, ReproducesReferenceCompositions) {
  for (const ReferenceRow& row : ReferenceRows()) {
    if (row.ppn != 1) continue;
    EXPECT_EQ(Unrank(*ChordId::Parse(row.chord_id)).ToString(), row.composition);
  }
}

// Successor iteration is the oracle for the combinatorial rank/unrank.
TEST(EnumerationTest, RankUnrankAgreeWithSuccessorWalk) {
  for (int n = 2; n <= 6; ++n) {
    PitchClassSet walk = FirstChord(n);
    for (std::uint64_t a = 1; a <= 10000; ++a) {
      ASSERT_EQ(Unrank({n, a}), walk) << n << "v" << a;
      ASSERT_EQ(Rank(walk), (ChordId{n, a}));
      const PitchClassSet next = Successor(walk);
      // Order key: top voice, then inner voices from the lowest.
      std::vector<int> key_now{walk.top()}, key_next{next.top()};
      key_now.insert(key_now.end(), walk.offsets().begin() + 1, walk.offsets().end() - 1);
      key_next.insert(key_next.end(), next.offsets().begin() + 1, next.offsets().end() - 1);
      ASSERT_LT(key_now, key_next);
      walk = next;
    }
  }
}

TEST(EnumerationTest, CountWithinOctave) {
  EXPECT_EQ(CountWithin(3, 11), 55u);
  EXPECT_EQ(CountWithin(2, 11), 11u);
  EXPECT_EQ(CountWithin(12, 11), 1u);
  EXPECT_EQ(CountWithin(13, 11), 0u);
  EXPECT_EQ(Unrank({4, CountWithin(4, 11)}).top(), 11);
  EXPECT_EQ(Unrank({4, CountWithin(4, 11) + 1}).top(), 12);
}

TEST(EnumerationTest, LargeOrdinals) {
  const ChordId id{2, 1000000};
  EXPECT_EQ(Unrank(id), Set({0, 1000000}));
  const ChordId wide{5, 123456789};
  EXPECT_EQ(Rank(Unrank(wide)), wide);
  EXPECT_THROW(Unrank({2, 1ULL << 40}), std::invalid_argument);
}

}  // namespace
}  // namespace dichotic
