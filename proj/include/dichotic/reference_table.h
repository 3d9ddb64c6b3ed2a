#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace dichotic {

/// One row of the published listening table for three-voice chords.
///
/// `composition` uses the table notation: bare offsets sound in the center,
/// a trailing '-' marks Left and '+' marks Right. The listening scores are
/// human judgments kept verbatim; nothing in the library computes them.
struct ReferenceRow {
  std::string_view chord_id;
  std::string_view composition;
  int ppn;
  int tdiss;
  std::optional<int> consonance;  // "Благозв."
  std::optional<int> ddiss;
  std::optional<int> synergy;
  std::optional<int> difference;  // left/right swap audibility
  std::string_view chord_type;    // e.g. "мажор"; empty when unnamed
};

/// All 165 rows (55 chords x PPN 1, 3, 2) in table order.
std::span<const ReferenceRow> ReferenceRows();

}  // namespace dichotic
