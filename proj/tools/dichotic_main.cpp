// dichotic: command-line front end for the dichotic harmony engine.
//
//   dichotic analyze --id 3v18 --mode 3
//   dichotic analyze --notes 60,63,67 --mode 1
//   dichotic enum --voices 3 --count 55
//   dichotic chain --voices 3 --limit 10
//   dichotic table --voices 3 --check
//   dichotic repan in.mid out.mid --mode 3
//   dichotic serve --port 8080

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"

#include "dichotic/chord_id.h"
#include "dichotic/optimizer.h"
#include "dichotic/repan.h"
#include "dichotic/server.h"
#include "dichotic/service.h"
#include "dichotic/smf.h"

namespace {

using dichotic::Json;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

std::string EnvOr(const char* name, const std::string& fallback) {
  const char* value = std::getenv(name);
  return value && *value ? value : fallback;
}

std::vector<std::uint8_t> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteFile(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

void PrintJson(const Json& j, bool compact) {
  std::cout << (compact ? j.dump() : j.dump(2)) << "\n";
}

struct AnalyzeArgs {
  std::string id;
  std::vector<int> notes;
  std::vector<int> velocities;
  std::string mode = "3";
  std::vector<std::string> thresholds;  // "3=20"
  int base_note = 60;
  bool swap = false;
  std::vector<double> table;
  double octave_increment = dichotic::IntervalTable::kDefaultOctaveIncrement;
  bool compact = false;
};

int RunAnalyze(const AnalyzeArgs& args) {
  Json request;
  if (!args.id.empty()) request["chord_id"] = args.id;
  if (!args.notes.empty()) request["notes"] = args.notes;
  if (!args.velocities.empty()) request["velocities"] = args.velocities;
  request["mode"] = args.mode;
  if (!args.thresholds.empty()) {
    Json thresholds = Json::object();
    for (const std::string& t : args.thresholds) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) {
        throw dichotic::RequestError(400, "threshold must look like VOICES=VALUE");
      }
      thresholds[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    }
    request["thresholds"] = thresholds;
  }
  request["base_note"] = args.base_note;
  request["swap_channels"] = args.swap;
  if (!args.table.empty()) {
    request["table"] = {{"values", args.table},
                        {"octave_increment", args.octave_increment}};
  }
  PrintJson(dichotic::Analyze(dichotic::ParseAnalysisRequest(request)),
            args.compact);
  return 0;
}

struct EnumArgs {
  int voices = 3;
  std::uint64_t from = 1;
  std::uint64_t count = 0;  // 0 = every in-octave chord
  std::string id;
  std::vector<int> offsets;
};

int RunEnum(const EnumArgs& args) {
  if (!args.id.empty()) {
    const auto id = dichotic::ChordId::Parse(args.id);
    if (!id) throw dichotic::RequestError(400, "invalid chord id '" + args.id + "'");
    std::cout << id->ToString() << "\t" << dichotic::Unrank(*id).ToString() << "\n";
    return 0;
  }
  if (!args.offsets.empty()) {
    const dichotic::PitchClassSet set(args.offsets);
    std::cout << dichotic::Rank(set).ToString() << "\t" << set.ToString() << "\n";
    return 0;
  }
  const std::uint64_t count =
      args.count ? args.count : dichotic::CountWithin(args.voices, 11);
  dichotic::PitchClassSet chord = dichotic::Unrank({args.voices, args.from});
  for (std::uint64_t i = 0; i < count; ++i) {
    std::cout << args.voices << "v" << args.from + i << "\t" << chord.ToString()
              << "\n";
    chord = dichotic::Successor(chord);
  }
  return 0;
}

int RunChain(int voices, std::size_t limit, bool json) {
  const Json chain = dichotic::ChainJson(voices, limit);
  if (json) {
    PrintJson(chain, false);
    return 0;
  }
  std::size_t position = 1;
  for (const Json& entry : chain["chain"]) {
    std::string composition;
    for (const Json& o : entry["composition"]) {
      if (!composition.empty()) composition += ',';
      composition += std::to_string(o.get<int>());
    }
    std::cout << position++ << "\t" << entry["id"].get<std::string>() << "\t"
              << composition << "\t" << entry["tdiss"].dump() << "\t"
              << entry["assignment"].get<std::string>() << "\n";
  }
  return 0;
}

int RunTable(int voices, const std::vector<int>& modes, bool check, bool json) {
  if (voices != 3) {
    throw dichotic::RequestError(400, "only --voices 3 tables are available");
  }
  if (json) {
    PrintJson(dichotic::TableJson(voices), false);
    return 0;
  }
  const auto rows = dichotic::CheckReferenceTable();
  std::size_t checked = 0, matched = 0;
  for (const auto& row : rows) {
    const bool wanted =
        modes.empty() ||
        std::find(modes.begin(), modes.end(), row.reference->ppn) != modes.end();
    if (!wanted) continue;
    ++checked;
    matched += row.match ? 1 : 0;
    std::cout << row.reference->chord_id << "\t" << row.composition << "\t"
              << row.reference->ppn << "\t"
              << dichotic::JsonNumber(row.tdiss).dump();
    if (check && !row.match) {
      std::cout << "\tMISMATCH expected " << row.reference->composition << " "
                << row.reference->tdiss;
    }
    std::cout << "\n";
  }
  if (check) {
    std::cout << matched << "/" << checked << " match\n";
    return matched == checked ? 0 : 3;
  }
  return 0;
}

struct RepanArgs {
  std::string input;
  std::string output;
  std::string report;
  std::string mode = "3";
  long long window = -1;
  int base_note = 60;
  bool swap = false;
  bool force = false;
  bool lenient = false;
  int left = 0, center = 1, right = 2;
};

int RunRepan(const RepanArgs& args) {
  const std::string report_path =
      args.report.empty() ? args.output + ".json" : args.report;
  if (!args.force) {
    for (const std::string& p : {args.output, report_path}) {
      if (std::filesystem::exists(p)) {
        std::cerr << "error: " << p << " exists (use --force to overwrite)\n";
        return kExitUsage;
      }
    }
  }
  dichotic::RepanOptions options;
  const auto mode = dichotic::ParsePanoramaMode(args.mode);
  if (!mode) throw dichotic::RequestError(400, "--mode must be 1, 2, 3 or free");
  options.config.mode = *mode;
  options.config.base_note = args.base_note;
  options.config.swap_channels = args.swap;
  options.layout = {args.left, args.center, args.right};
  if (args.window >= 0) options.window_ticks = static_cast<std::uint64_t>(args.window);

  std::vector<std::uint8_t> bytes;
  dichotic::EventTimeline input;
  try {
    bytes = ReadFile(args.input);
    input = dichotic::ParseSmf(bytes, {.close_dangling_notes = args.lenient});
  } catch (const std::exception& e) {
    std::cerr << "error: " << args.input << ": " << e.what() << "\n";
    return kExitInput;
  }
  const dichotic::RepanResult result = dichotic::Repan(input, options);
  const std::vector<std::uint8_t> smf = dichotic::WriteSmf(result.timeline);
  WriteFile(args.output, std::string(smf.begin(), smf.end()));
  WriteFile(report_path, dichotic::RepanReportJson(result, options).dump(2) + "\n");
  std::cerr << "wrote " << args.output << " and " << report_path << " ("
            << result.reports.size() << " segments)\n";
  return 0;
}

int RunServe(const std::string& bind, int port, std::size_t max_upload) {
  httplib::Server server;
  dichotic::RegisterRoutes(server, {.max_upload_bytes = max_upload});
  std::cerr << "listening on http://" << bind << ":" << port << "\n";
  if (!server.listen(bind, port)) {
    std::cerr << "error: cannot listen on " << bind << ":" << port << "\n";
    return kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dichotic harmony: chord dissonance under stereo panning"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Optimize and score one chord");
  auto* id_opt = analyze_cmd->add_option("--id", analyze.id, "Chord id, e.g. 3v19");
  auto* notes_opt = analyze_cmd->add_option("--notes", analyze.notes, "MIDI pitches")
                        ->delimiter(',');
  id_opt->excludes(notes_opt);
  analyze_cmd->add_option("--velocities", analyze.velocities, "Velocities 1..127")
      ->delimiter(',');
  analyze_cmd->add_option("--mode", analyze.mode, "Panorama points: 1, 2, 3 or free")
      ->capture_default_str();
  analyze_cmd->add_option("--threshold", analyze.thresholds,
                          "Diotic threshold as VOICES=VALUE (repeatable)");
  analyze_cmd->add_option("--base-note", analyze.base_note, "MIDI note of offset 0")
      ->capture_default_str();
  analyze_cmd->add_flag("--swap", analyze.swap, "Swap left and right");
  analyze_cmd->add_option("--table", analyze.table,
                          "13 interval dissonances, unison to octave")
      ->delimiter(',');
  analyze_cmd->add_option("--octave-increment", analyze.octave_increment,
                          "Dissonance added per extra octave")
      ->capture_default_str();
  analyze_cmd->add_flag("--compact", analyze.compact, "Single-line JSON");

  EnumArgs enumerate;
  auto* enum_cmd = app.add_subcommand("enum", "List chords in id order");
  enum_cmd->add_option("--voices", enumerate.voices)->capture_default_str();
  enum_cmd->add_option("--from", enumerate.from, "First ordinal")->capture_default_str();
  enum_cmd->add_option("--count", enumerate.count,
                       "How many (default: all within an octave)");
  enum_cmd->add_option("--id", enumerate.id, "Print the composition of one id");
  enum_cmd->add_option("--offsets", enumerate.offsets, "Print the id of 0,a,b,...")
      ->delimiter(',');

  int chain_voices = 3;
  std::size_t chain_limit = 55;
  bool chain_json = false;
  auto* chain_cmd = app.add_subcommand("chain", "In-octave chords by optimal dissonance");
  chain_cmd->add_option("--voices", chain_voices)->capture_default_str();
  chain_cmd->add_option("--limit", chain_limit)->capture_default_str();
  chain_cmd->add_flag("--json", chain_json);

  int table_voices = 3;
  std::vector<int> table_modes;
  bool table_check = false, table_json = false;
  auto* table_cmd = app.add_subcommand("table", "Three-voice table in 1/2/3-point modes");
  table_cmd->add_option("--voices", table_voices)->capture_default_str();
  table_cmd->add_option("--modes", table_modes, "Restrict to these PPN values")
      ->delimiter(',');
  table_cmd->add_flag("--check", table_check, "Compare with the reference table");
  table_cmd->add_flag("--json", table_json);

  RepanArgs repan;
  auto* repan_cmd = app.add_subcommand("repan", "Re-pan a MIDI file");
  repan_cmd->add_option("input", repan.input)->required();
  repan_cmd->add_option("output", repan.output)->required();
  repan_cmd->add_option("--report", repan.report, "Report path (default OUTPUT.json)");
  repan_cmd->add_option("--mode", repan.mode)->capture_default_str();
  repan_cmd->add_option("--window", repan.window,
                        "Onset window in ticks (default: 1/32 note)");
  repan_cmd->add_option("--base-note", repan.base_note)->capture_default_str();
  repan_cmd->add_flag("--swap", repan.swap);
  repan_cmd->add_flag("--force", repan.force, "Overwrite existing outputs");
  repan_cmd->add_flag("--lenient", repan.lenient,
                      "Close unreleased notes at end of track");
  repan_cmd->add_option("--left", repan.left)->capture_default_str();
  repan_cmd->add_option("--center", repan.center)->capture_default_str();
  repan_cmd->add_option("--right", repan.right)->capture_default_str();

  std::string bind = EnvOr("BIND", "127.0.0.1");
  int port = std::stoi(EnvOr("PORT", "8080"));
  std::size_t max_upload = dichotic::ServerOptions{}.max_upload_bytes;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP JSON service");
  serve_cmd->add_option("--bind", bind, "Address (env BIND)")->capture_default_str();
  serve_cmd->add_option("--port", port, "Port (env PORT)")->capture_default_str();
  serve_cmd->add_option("--max-upload", max_upload, "Largest accepted body in bytes")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return RunAnalyze(analyze);
    if (*enum_cmd) return RunEnum(enumerate);
    if (*chain_cmd) return RunChain(chain_voices, chain_limit, chain_json);
    if (*table_cmd) return RunTable(table_voices, table_modes, table_check, table_json);
    if (*repan_cmd) return RunRepan(repan);
    if (*serve_cmd) return RunServe(bind, port, max_upload);
  } catch (const dichotic::SmfError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
