#include "dichotic/server.h"

#include <string>

#include "httplib.h"

#include "dichotic/service.h"
#include "dichotic/smf.h"

namespace dichotic {

namespace {

constexpr const char* kJsonType = "application/json";

void SendJson(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), kJsonType);
}

void SendError(httplib::Response& res, int status, const std::string& message) {
  Json body;
  body["schema"] = kSchemaVersion;
  body["error"] = message;
  body["status"] = status;
  SendJson(res, body, status);
}

int IntParam(const httplib::Request& req, const char* name, int fallback) {
  if (!req.has_param(name)) return fallback;
  const std::string text = req.get_param_value(name);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) {
    throw RequestError(400, std::string("query parameter '") + name +
                                "' must be an integer");
  }
  return value;
}

bool BoolParam(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return false;
  const std::string v = req.get_param_value(name);
  return v == "1" || v == "true" || v == "yes";
}

// Runs `fn`, turning library errors into JSON error responses.
template <typename Fn>
void Guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const RequestError& e) {
    SendError(res, e.status(), e.what());
  } catch (const SmfError& e) {
    SendError(res, 400, e.what());
  } catch (const std::invalid_argument& e) {
    SendError(res, 400, e.what());
  } catch (const Json::exception& e) {
    SendError(res, 400, e.what());
  } catch (const std::exception& e) {
    SendError(res, 500, e.what());
  }
}

}  // namespace

void RegisterRoutes(httplib::Server& server, const ServerOptions& options) {
  server.set_payload_max_length(options.max_upload_bytes);
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  server.Get(R"(/api/chord/([^/]+))",
             [](const httplib::Request& req, httplib::Response& res) {
               Guarded(res, [&] {
                 const auto id = ChordId::Parse(req.matches[1].str());
                 if (!id) {
                   throw RequestError(404, "unknown chord id '" +
                                               req.matches[1].str() + "'");
                 }
                 SendJson(res, ChordInfo(*id, IntParam(req, "base_note", 60)));
               });
             });

  server.Post("/api/analyze", [](const httplib::Request& req,
                                 httplib::Response& res) {
    Guarded(res, [&] {
      const Json body = Json::parse(req.body, nullptr, false);
      if (body.is_discarded()) throw RequestError(400, "body is not valid JSON");
      SendJson(res, Analyze(ParseAnalysisRequest(body)));
    });
  });

  server.Get("/api/chain", [](const httplib::Request& req, httplib::Response& res) {
    Guarded(res, [&] {
      SendJson(res, ChainJson(IntParam(req, "n", 3),
                              static_cast<std::size_t>(
                                  std::max(0, IntParam(req, "limit", 55)))));
    });
  });

  server.Get("/api/table", [](const httplib::Request& req, httplib::Response& res) {
    Guarded(res, [&] { SendJson(res, TableJson(IntParam(req, "n", 3))); });
  });

  server.Post("/api/repan", [](const httplib::Request& req,
                               httplib::Response& res) {
    Guarded(res, [&] {
      RepanOptions options;
      if (req.has_param("mode")) {
        const auto mode = ParsePanoramaMode(req.get_param_value("mode"));
        if (!mode) throw RequestError(400, "mode must be 1, 2, 3 or free");
        options.config.mode = *mode;
      }
      options.config.base_note = IntParam(req, "base_note", 60);
      options.config.swap_channels = BoolParam(req, "swap");
      if (req.has_param("window")) {
        const int window = IntParam(req, "window", 0);
        if (window < 0) throw RequestError(400, "window must be non-negative");
        options.window_ticks = static_cast<std::uint64_t>(window);
      }
      const auto* data = reinterpret_cast<const std::uint8_t*>(req.body.data());
      const EventTimeline input = ParseSmf({data, req.body.size()});
      const RepanResult result = Repan(input, options);
      const std::vector<std::uint8_t> smf = WriteSmf(result.timeline);

      const std::string output =
          req.has_param("output") ? req.get_param_value("output") : "json";
      if (output == "smf") {
        res.set_content(std::string(smf.begin(), smf.end()), "audio/midi");
        return;
      }
      if (output != "json") throw RequestError(400, "output must be json or smf");
      Json body;
      body["schema"] = kSchemaVersion;
      body["smf_base64"] = Base64Encode(smf);
      body["report"] = RepanReportJson(result, options);
      SendJson(res, body);
    });
  });
}

}  // namespace dichotic
