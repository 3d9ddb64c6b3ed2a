#pragma once

#include <cstddef>

namespace httplib {
class Server;
}

namespace dichotic {

struct ServerOptions {
  /// Request bodies above this size are answered with 413.
  std::size_t max_upload_bytes = 8 * 1024 * 1024;
};

/// Installs the /api routes and CORS handling on `server`.
///
///   GET  /api/chord/{id}?base_note=60
///   POST /api/analyze                 AnalysisRequest JSON
///   GET  /api/chain?n=3&limit=10
///   GET  /api/table?n=3
///   POST /api/repan?mode=3&window=&base_note=&swap=&output=json|smf
void RegisterRoutes(httplib::Server& server, const ServerOptions& options = {});

}  // namespace dichotic
