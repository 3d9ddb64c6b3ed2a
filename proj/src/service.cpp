#include "dichotic/service.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace dichotic {

namespace {

[[noreturn]] void BadRequest(const std::string& what) {
  throw RequestError(400, what);
}

int IntField(const Json& value, const char* name) {
  if (!value.is_number_integer()) {
    BadRequest(std::string("'") + name + "' must be an integer");
  }
  return value.get<int>();
}

double NumberField(const Json& value, const char* name) {
  if (!value.is_number()) BadRequest(std::string("'") + name + "' must be a number");
  return value.get<double>();
}

std::vector<int> IntList(const Json& value, const char* name) {
  if (!value.is_array()) BadRequest(std::string("'") + name + "' must be an array");
  std::vector<int> out;
  for (const Json& v : value) out.push_back(IntField(v, name));
  return out;
}

PanoramaMode ModeField(const Json& value) {
  std::optional<PanoramaMode> mode;
  if (value.is_number_integer()) {
    mode = ParsePanoramaMode(std::to_string(value.get<long long>()));
  } else if (value.is_string()) {
    mode = ParsePanoramaMode(value.get<std::string>());
  }
  if (!mode) BadRequest("'mode' must be 1, 2, 3 or \"free\"");
  return *mode;
}

void ApplyThresholds(const Json& value, OptimizerConfig& config) {
  constexpr int kMin = OptimizerConfig::kMinThresholdVoices;
  constexpr int kMax = OptimizerConfig::kMaxThresholdVoices;
  if (value.is_array()) {
    if (value.size() != config.thresholds.size()) {
      BadRequest("'thresholds' array needs one value per voice count 2..6");
    }
    for (std::size_t i = 0; i < value.size(); ++i) {
      config.thresholds[i] = NumberField(value[i], "thresholds");
    }
  } else if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      int voices = 0;
      try {
        std::size_t used = 0;
        voices = std::stoi(key, &used);
        if (used != key.size()) voices = 0;
      } catch (const std::exception&) {
        voices = 0;
      }
      if (voices < kMin || voices > kMax) {
        BadRequest("threshold key '" + key + "' must be a voice count 2..6");
      }
      config.thresholds[voices - kMin] = NumberField(v, "thresholds");
    }
  } else {
    BadRequest("'thresholds' must be an array or object");
  }
}

IntervalTable TableField(const Json& value) {
  Json values = value;
  double increment = IntervalTable::kDefaultOctaveIncrement;
  if (value.is_object()) {
    if (!value.contains("values")) BadRequest("'table' needs 'values'");
    values = value["values"];
    if (value.contains("octave_increment")) {
      increment = NumberField(value["octave_increment"], "octave_increment");
    }
  }
  if (!values.is_array()) BadRequest("'table' values must be an array");
  std::vector<double> numbers;
  for (const Json& v : values) numbers.push_back(NumberField(v, "table"));
  try {
    return IntervalTable(numbers, increment);
  } catch (const std::invalid_argument& e) {
    BadRequest(e.what());
  }
}

std::string ModeName(std::optional<PanoramaMode> mode) {
  return mode ? std::string(ToString(*mode)) : std::string();
}

Json ChordComposition(const PitchClassSet& set) {
  return Json(set.offsets());
}

Chord RootedChord(const PitchClassSet& set, int base_note) {
  std::vector<int> pitches;
  for (int offset : set.offsets()) pitches.push_back(base_note + offset);
  if (pitches.back() > 127 || base_note < 0) {
    BadRequest("chord does not fit the MIDI range from base note " +
               std::to_string(base_note));
  }
  if (pitches.size() > static_cast<std::size_t>(kMaxVoices)) {
    BadRequest("chords are limited to " + std::to_string(kMaxVoices) +
               " voices");
  }
  return Chord::FromPitches(pitches);
}

// Edge groups of a notation as an unordered pair of offset sets.
std::set<std::set<int>> EdgePartition(const std::vector<NotationEntry>& entries) {
  std::set<int> left, right;
  for (const auto& e : entries) {
    if (e.position == PanPosition::kLeft) left.insert(e.offset);
    if (e.position == PanPosition::kRight) right.insert(e.offset);
  }
  return {left, right};
}

}  // namespace

AnalysisRequest ParseAnalysisRequest(const Json& body) {
  if (!body.is_object()) BadRequest("request must be a JSON object");
  AnalysisRequest request;
  const bool has_id = body.contains("chord_id");
  const bool has_notes = body.contains("notes");
  if (has_id == has_notes) {
    BadRequest("give exactly one of 'chord_id' and 'notes'");
  }
  if (has_id) {
    if (!body["chord_id"].is_string()) BadRequest("'chord_id' must be a string");
    request.chord_id = ChordId::Parse(body["chord_id"].get<std::string>());
    if (!request.chord_id) {
      BadRequest("invalid chord id '" + body["chord_id"].get<std::string>() + "'");
    }
  } else {
    request.pitches = IntList(body["notes"], "notes");
  }
  if (body.contains("velocities")) {
    request.velocities = IntList(body["velocities"], "velocities");
  }
  if (body.contains("mode")) request.config.mode = ModeField(body["mode"]);
  if (body.contains("thresholds")) ApplyThresholds(body["thresholds"], request.config);
  if (body.contains("base_note")) {
    request.config.base_note = IntField(body["base_note"], "base_note");
  }
  if (body.contains("swap_channels")) {
    if (!body["swap_channels"].is_boolean()) {
      BadRequest("'swap_channels' must be a boolean");
    }
    request.config.swap_channels = body["swap_channels"].get<bool>();
  }
  if (body.contains("table")) request.table = TableField(body["table"]);
  try {
    request.config.Validate();
  } catch (const std::invalid_argument& e) {
    BadRequest(e.what());
  }
  return request;
}

Chord RequestChord(const AnalysisRequest& request) {
  std::vector<int> pitches = request.pitches;
  if (request.chord_id) {
    try {
      pitches.clear();
      const PitchClassSet set = Unrank(*request.chord_id);
      for (int offset : set.offsets()) {
        pitches.push_back(request.config.base_note + offset);
      }
    } catch (const std::exception& e) {
      BadRequest(e.what());
    }
  }
  if (!request.velocities.empty() && request.velocities.size() != pitches.size()) {
    BadRequest("'velocities' must have one entry per note");
  }
  std::vector<Voice> voices;
  for (std::size_t i = 0; i < pitches.size(); ++i) {
    voices.push_back({pitches[i], request.velocities.empty()
                                      ? kDefaultVelocity
                                      : request.velocities[i]});
  }
  try {
    return Chord(std::move(voices));
  } catch (const std::invalid_argument& e) {
    BadRequest(e.what());
  }
}

std::string PanNotation(const Chord& chord, const PanAssignment& assignment,
                        int base_note) {
  std::string out;
  for (PanPosition group : {PanPosition::kLeft, PanPosition::kCenter,
                            PanPosition::kRight}) {
    for (std::size_t i = 0; i < chord.size(); ++i) {
      if (assignment[i] != group) continue;
      if (!out.empty()) out += ',';
      out += std::to_string(chord[i].pitch - base_note);
      if (group == PanPosition::kLeft) out += '-';
      if (group == PanPosition::kRight) out += '+';
    }
  }
  return out;
}

std::vector<NotationEntry> ParsePanNotation(std::string_view text) {
  std::vector<NotationEntry> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string token(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view()
                                           : text.substr(comma + 1);
    PanPosition position = PanPosition::kCenter;
    if (!token.empty() && token.back() == '-') {
      position = PanPosition::kLeft;
      token.pop_back();
    } else if (!token.empty() && token.back() == '+') {
      position = PanPosition::kRight;
      token.pop_back();
    }
    std::size_t used = 0;
    int offset = 0;
    try {
      offset = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw std::invalid_argument("bad notation token '" + token + "'");
    }
    out.push_back({offset, position});
  }
  return out;
}

Json JsonNumber(double value) {
  if (std::isfinite(value) && value == std::floor(value) &&
      std::fabs(value) < 9.0e15) {
    return Json(static_cast<long long>(value));
  }
  return Json(value);
}

Json ReportJson(const Chord& chord, const DissonanceReport& report,
                const OptimizerConfig& config) {
  Json out;
  out["schema"] = kSchemaVersion;
  std::vector<int> distinct;
  for (const Voice& v : chord.voices()) distinct.push_back(v.pitch - chord[0].pitch);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() == chord.size() && chord.size() >= 2) {
    try {
      out["chord_id"] = Rank(PitchClassSet(distinct)).ToString();
    } catch (const std::exception&) {
      out["chord_id"] = nullptr;
    }
  } else {
    out["chord_id"] = nullptr;
  }
  out["base_note"] = config.base_note;
  out["requested_mode"] = ToString(config.mode);
  out["mode"] = ModeName(report.mode);
  out["swap_channels"] = config.swap_channels;
  out["ppn"] = report.assignment.ppn();
  out["total"] = JsonNumber(report.total);
  out["assignment"] = PanNotation(chord, report.assignment, config.base_note);
  out["positions"] = report.assignment.ToString();
  Json voices = Json::array();
  for (std::size_t i = 0; i < chord.size(); ++i) {
    voices.push_back({{"pitch", chord[i].pitch},
                      {"velocity", chord[i].velocity},
                      {"position", std::string(1, ToChar(report.assignment[i]))}});
  }
  out["voices"] = std::move(voices);
  Json pairs = Json::array();
  for (const PairTerm& p : report.pairs) {
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"interval", p.interval},
                     {"raw", JsonNumber(p.raw)},
                     {"factor", JsonNumber(p.factor)},
                     {"contribution", JsonNumber(p.contribution)}});
  }
  out["pairs"] = std::move(pairs);
  return out;
}

Json Analyze(const AnalysisRequest& request) {
  const Chord chord = RequestChord(request);
  try {
    return ReportJson(chord, Optimize(chord, request.config, request.table),
                      request.config);
  } catch (const std::invalid_argument& e) {
    BadRequest(e.what());
  }
}

Json ChordInfo(const ChordId& id, int base_note, const IntervalTable& table) {
  PitchClassSet set = [&] {
    try {
      return Unrank(id);
    } catch (const std::exception& e) {
      BadRequest(e.what());
    }
  }();
  const Chord chord = RootedChord(set, base_note);
  Json out;
  out["schema"] = kSchemaVersion;
  out["id"] = id.ToString();
  out["composition"] = ChordComposition(set);
  out["base_note"] = base_note;
  Json reports = Json::object();
  Json tdiss = Json::object();
  for (PanoramaMode mode : {PanoramaMode::kFixed1, PanoramaMode::kFixed2,
                            PanoramaMode::kFixed3, PanoramaMode::kFree}) {
    const std::string key(ToString(mode));
    OptimizerConfig config;
    config.mode = mode;
    config.base_note = base_note;
    try {
      const DissonanceReport report = Optimize(chord, config, table);
      tdiss[key] = JsonNumber(report.total);
      reports[key] = ReportJson(chord, report, config);
    } catch (const SearchSpaceError&) {
      tdiss[key] = nullptr;
      reports[key] = nullptr;
    }
  }
  out["tdiss"] = std::move(tdiss);
  out["reports"] = std::move(reports);
  return out;
}

Json ChainJson(int n, std::size_t limit, const IntervalTable& table) {
  if (n < 2 || n > kMaxVoices) BadRequest("'n' must be 2.." + std::to_string(kMaxVoices));
  if (limit < 1) BadRequest("'limit' must be positive");
  OptimizerConfig config;
  config.mode = FeasibleMode(static_cast<std::size_t>(n), PanoramaMode::kFixed3);
  Json chain = Json::array();
  for (const ChordId& id : AccordChain(n, limit, table, config.base_note)) {
    const PitchClassSet set = Unrank(id);
    const Chord chord = RootedChord(set, config.base_note);
    const DissonanceReport report = Optimize(chord, config, table);
    chain.push_back({{"id", id.ToString()},
                     {"composition", ChordComposition(set)},
                     {"tdiss", JsonNumber(report.total)},
                     {"assignment", PanNotation(chord, report.assignment,
                                                config.base_note)}});
  }
  Json out;
  out["schema"] = kSchemaVersion;
  out["n"] = n;
  out["mode"] = ToString(config.mode);
  out["chain"] = std::move(chain);
  return out;
}

std::vector<TableCheckRow> CheckReferenceTable(const IntervalTable& table) {
  constexpr int kBase = 60;
  std::vector<TableCheckRow> rows;
  for (const ReferenceRow& ref : ReferenceRows()) {
    const auto id = ChordId::Parse(ref.chord_id);
    const PitchClassSet set = Unrank(*id);
    const Chord chord = RootedChord(set, kBase);

    OptimizerConfig config;
    config.base_note = kBase;
    config.mode = ref.ppn == 1   ? PanoramaMode::kFixed1
                  : ref.ppn == 2 ? PanoramaMode::kFixed2
                                 : PanoramaMode::kFixed3;
    const DissonanceReport report = Optimize(chord, config, table);
    std::string notation = PanNotation(chord, report.assignment, kBase);

    const auto expected = ParsePanNotation(ref.composition);
    std::vector<int> expected_offsets;
    for (const auto& e : expected) expected_offsets.push_back(e.offset);
    std::sort(expected_offsets.begin(), expected_offsets.end());

    bool match = expected_offsets == set.offsets() &&
                 report.total == ref.tdiss &&
                 report.assignment.ppn() == ref.ppn;
    if (ref.ppn == 2) {
      match = match &&
              EdgePartition(ParsePanNotation(notation)) == EdgePartition(expected);
    } else {
      match = match && notation == ref.composition;
    }
    rows.push_back({&ref, std::move(notation), report.total, match});
  }
  return rows;
}

Json TableJson(int n) {
  if (n != 3) BadRequest("only three-voice tables are available");
  Json rows = Json::array();
  std::size_t matched = 0;
  const auto checked = CheckReferenceTable();
  for (const TableCheckRow& row : checked) {
    const ReferenceRow& ref = *row.reference;
    auto optional = [](const std::optional<int>& v) {
      return v ? Json(*v) : Json(nullptr);
    };
    Json reference;
    reference["composition"] = ref.composition;
    reference["tdiss"] = ref.tdiss;
    reference["consonance"] = optional(ref.consonance);
    reference["ddiss"] = optional(ref.ddiss);
    reference["synergy"] = optional(ref.synergy);
    reference["difference"] = optional(ref.difference);
    reference["chord_type"] = ref.chord_type;
    reference["source"] = "published listening table (subjective scores)";
    rows.push_back({{"id", ref.chord_id},
                    {"ppn", ref.ppn},
                    {"composition", row.composition},
                    {"tdiss", JsonNumber(row.tdiss)},
                    {"match", row.match},
                    {"reference", std::move(reference)}});
    matched += row.match ? 1 : 0;
  }
  Json out;
  out["schema"] = kSchemaVersion;
  out["n"] = n;
  out["matched"] = matched;
  out["rows_total"] = checked.size();
  out["rows"] = std::move(rows);
  return out;
}

Json RepanReportJson(const RepanResult& result, const RepanOptions& options) {
  Json segments = Json::array();
  for (const SegmentReport& s : result.reports) {
    OptimizerConfig config = options.config;
    config.mode = FeasibleMode(s.chord.size(), config.mode);
    segments.push_back({{"onset_tick", s.onset_tick},
                        {"report", ReportJson(s.chord, s.report, config)}});
  }
  Json out;
  out["schema"] = kSchemaVersion;
  out["ticks_per_quarter"] = result.timeline.ticks_per_quarter;
  out["mode"] = ToString(options.config.mode);
  out["layout"] = {{"left", options.layout.channel_left},
                   {"center", options.layout.channel_center},
                   {"right", options.layout.channel_right}};
  out["segments"] = std::move(segments);
  return out;
}

std::string Base64Encode(std::span<const std::uint8_t> bytes) {
  static constexpr char kAlphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
  }
  if (i < bytes.size()) {
    std::uint32_t v = bytes[i] << 16;
    if (i + 1 < bytes.size()) v |= bytes[i + 1] << 8;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += i + 1 < bytes.size() ? kAlphabet[(v >> 6) & 63] : '=';
    out += '=';
  }
  return out;
}

}  // namespace dichotic
