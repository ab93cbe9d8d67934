#pragma once

// JSON request handling for the HTTP service. Handlers are pure functions
// of the request, so they are tested without a socket.

#include <string>
#include <string_view>

#include "json.hpp"
#include "trisolve/board.hpp"

namespace trisolve {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kServiceMaxSide = 24;

struct ServiceReply {
  int status = 200;
  nlohmann::json body;
};

// Routes GET /board/{n} and POST /analyze, /move, /hint, /solve. Errors come
// back as {"error": ...} with 400 (malformed), 404 (unknown route), 422
// (illegal or infeasible), 504 (budget exceeded) or 500.
ServiceReply handle_request(std::string_view method, std::string_view path, std::string_view body);

nlohmann::json board_json(int n);
nlohmann::json analyze_json(const Position& p);

// Blocks serving HTTP until the process ends.
void run_server(const std::string& host, int port);

}  // namespace trisolve
