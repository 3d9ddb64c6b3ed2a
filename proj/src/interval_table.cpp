#include "dichotic/interval_table.h"

#include <stdexcept>
#include <string>

namespace dichotic {

namespace {

constexpr std::array<double, IntervalTable::kSize> kDefaultValues = {
    0, 22, 16, 10, 6, 4, 18, 2, 8, 12, 14, 20, 0};

}  // namespace

IntervalTable::IntervalTable()
    : values_(kDefaultValues), octave_increment_(kDefaultOctaveIncrement) {}

IntervalTable::IntervalTable(std::span<const double> values,
                             double octave_increment)
    : values_{}, octave_increment_(octave_increment) {
  if (values.size() != kSize) {
    throw std::invalid_argument("interval table needs " +
                                std::to_string(kSize) + " values, got " +
                                std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0)) {
      throw std::invalid_argument("interval table entry " + std::to_string(i) +
                                  " must be non-negative");
    }
    values_[i] = values[i];
  }
  if (values_[0] != 0.0 || values_[12] != 0.0) {
    throw std::invalid_argument(
        "interval table must map unison and octave to 0");
  }
  if (!(octave_increment >= 0.0)) {
    throw std::invalid_argument("octave increment must be non-negative");
  }
}

const IntervalTable& IntervalTable::Default() {
  static const IntervalTable table;
  return table;
}

double IntervalTable::operator()(int interval) const {
  if (interval < 0) {
    throw std::invalid_argument("negative interval " +
                                std::to_string(interval));
  }
  if (interval <= 12) return values_[interval];
  const int reduced = (interval - 1) % 12 + 1;
  const int extra_octaves = (interval - 1) / 12;
  return values_[reduced] + octave_increment_ * extra_octaves;
}

}  // namespace dichotic
