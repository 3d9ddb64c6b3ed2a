#include "dichotic/interval_table.h"

#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.h"

namespace dichotic {
namespace {

TEST(IntervalTableTest, DefaultValuesMatchPublishedArray) {
  const std::vector<double> expected = {0, 22, 16, 10, 6, 4, 18, 2, 8, 12, 14, 20, 0};
  const auto& table = IntervalTable::Default();
  for (int i = 0; i <= 12; ++i) EXPECT_EQ(table(i), expected[i]) << i;
  EXPECT_EQ(table.octave_increment(), 2.0);
}

TEST(IntervalTableTest, OctaveExtension) {
  const auto& table = IntervalTable::Default();
  EXPECT_EQ(table(13), 24);  // minor ninth: minor second + 2
  EXPECT_EQ(table(19), 4);   // twelfth: fifth + 2
  EXPECT_EQ(table(24), 2);   // two octaves
  EXPECT_EQ(table(25), 26);
  EXPECT_EQ(table(36), 4);
  for (int i = 0; i <= 127; ++i) EXPECT_EQ(table(i), oracle::Interval(i)) << i;
}

TEST(IntervalTableTest, NegativeIntervalThrows) {
  EXPECT_THROW(IntervalTable::Default()(-1), std::invalid_argument);
}

TEST(IntervalTableTest, CustomTableValidation) {
  std::vector<double> values(13, 1.0);
  values[0] = values[12] = 0;
  const IntervalTable custom(values, 3.0);
  EXPECT_EQ(custom(14), 4.0);
  EXPECT_EQ(custom(24), 3.0);

  values[12] = 1;
  EXPECT_THROW(IntervalTable{values}, std::invalid_argument);
  values[12] = 0;
  values[5] = -1;
  EXPECT_THROW(IntervalTable{values}, std::invalid_argument);
  values[5] = 1;
  EXPECT_THROW((IntervalTable{values, -1.0}), std::invalid_argument);
  values.pop_back();
  EXPECT_THROW(IntervalTable{values}, std::invalid_argument);
}

}  // namespace
}  // namespace dichotic
