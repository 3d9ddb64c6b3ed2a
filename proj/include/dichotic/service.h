#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dichotic/chord_id.h"
#include "dichotic/interval_table.h"
#include "dichotic/model.h"
#include "dichotic/optimizer.h"
#include "dichotic/reference_table.h"
#include "dichotic/repan.h"

namespace dichotic {

using Json = nlohmann::ordered_json;

/// Version stamped into every JSON document as "schema".
inline constexpr int kSchemaVersion = 1;

/// A request that cannot be served; `status` is the HTTP status to report.
class RequestError : public std::runtime_error {
 public:
  RequestError(int status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

struct AnalysisRequest {
  std::optional<ChordId> chord_id;
  std::vector<int> pitches;      // used when chord_id is unset
  std::vector<int> velocities;   // empty = all kDefaultVelocity
  OptimizerConfig config;
  IntervalTable table;
};

/// Accepts
///   {"chord_id": "3v19"} or {"notes": [60, 63, 67], "velocities": [...]},
///   "mode": 1 | 2 | 3 | "free" (default 3), "thresholds": [t2..t6] or
///   {"3": 20, ...}, "base_note": 60, "swap_channels": false,
///   "table": [13 values] or {"values": [...], "octave_increment": 2}.
/// Throws RequestError(400) on anything malformed.
AnalysisRequest ParseAnalysisRequest(const Json& body);

/// Chord voices for the request, in MIDI pitches. Throws RequestError(400).
Chord RequestChord(const AnalysisRequest& request);

/// Table notation: Left voices, then Center, then Right, each group in
/// ascending pitch, written as offsets from `base_note`; '-' marks Left and
/// '+' marks Right ("4-,0,7+").
std::string PanNotation(const Chord& chord, const PanAssignment& assignment,
                        int base_note);

struct NotationEntry {
  int offset;
  PanPosition position;
};

/// Inverse of PanNotation's token syntax. Throws std::invalid_argument.
std::vector<NotationEntry> ParsePanNotation(std::string_view text);

/// Numbers that are whole render as JSON integers.
Json JsonNumber(double value);

/// Canonical report rendering shared by the CLI and the HTTP service.
Json ReportJson(const Chord& chord, const DissonanceReport& report,
                const OptimizerConfig& config);

/// Full analysis response for a request.
Json Analyze(const AnalysisRequest& request);

/// Chord `id` rooted at `base_note`, analyzed in every mode ("1", "2", "3",
/// "free"); infeasible modes are null. Throws RequestError(400) when the
/// chord does not fit the MIDI range.
Json ChordInfo(const ChordId& id, int base_note = 60,
               const IntervalTable& table = IntervalTable::Default());

Json ChainJson(int n, std::size_t limit,
               const IntervalTable& table = IntervalTable::Default());

struct TableCheckRow {
  const ReferenceRow* reference;
  std::string composition;  // computed notation
  double tdiss;
  bool match;
};

/// Recomputes every reference row. PPN 1 and 3 rows must match the
/// notation exactly; PPN 2 rows compare the two edge groups without regard
/// to which side each is on. All rows compare totals exactly and check the
/// chord composition against the enumeration.
std::vector<TableCheckRow> CheckReferenceTable(
    const IntervalTable& table = IntervalTable::Default());

/// Computed three-voice table for `n` (only 3 is supported) with reference
/// values alongside. Throws RequestError(400) for other voice counts.
Json TableJson(int n);

Json RepanReportJson(const RepanResult& result, const RepanOptions& options);

std::string Base64Encode(std::span<const std::uint8_t> bytes);

}  // namespace dichotic
