#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "flexsr/controller.hpp"

namespace flexsr {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// Transport-free dispatcher for the controller API. Error bodies are
/// {"code": <ErrorCode name>, "message": ...}.
///
///   GET  /topology              GET  /fads          POST /fads
///   POST /links/{id}/delay      GET  /paths/{algo}?source=N
///   POST /traceroute            POST /flows         GET  /counters
ApiResponse handle_api(PathController& controller, std::string_view method,
                       std::string_view path, const std::map<std::string, std::string>& query,
                       std::string_view body);

int http_status(ErrorCode code);

/// Blocks serving the API under /api and, when `ui_dir` is non-empty, static files.
/// Returns false if the socket could not be bound.
bool serve(PathController& controller, const std::string& host, int port,
           const std::string& ui_dir);

}  // namespace flexsr
