#include "trisolve/service.hpp"

#include <algorithm>

#include "httplib.h"
#include "trisolve/classification.hpp"
#include "trisolve/constructive.hpp"
#include "trisolve/error.hpp"
#include "trisolve/notation.hpp"
#include "trisolve/sax.hpp"
#include "trisolve/search.hpp"

namespace trisolve {

using nlohmann::json;

namespace {

struct BadRequest : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int side_of(const json& req) {
  if (!req.contains("n") || !req["n"].is_number_integer()) throw BadRequest("'n' must be an integer");
  const int n = req["n"].get<int>();
  if (n < 1 || n > kServiceMaxSide)
    throw BadRequest("'n' must be between 1 and " + std::to_string(kServiceMaxSide));
  return n;
}

Hole hole_of(const json& v, int n, const char* field) {
  if (!v.is_string()) throw BadRequest(std::string("'") + field + "' must hold hole names");
  Hole h;
  try {
    h = from_alpha(v.get<std::string>());
  } catch (const EngineError& e) {
    throw BadRequest(e.what());
  }
  if (!on_board(h, n)) throw BadRequest(v.get<std::string>() + " is not on T" + std::to_string(n));
  return h;
}

Position position_of(const json& req, int n) {
  if (!req.contains("occupied") || !req["occupied"].is_array())
    throw BadRequest("'occupied' must be an array of hole names");
  Position p(n);
  for (const json& v : req["occupied"]) p.set(hole_of(v, n, "occupied"));
  return p;
}

json holes_json(const std::vector<Hole>& hs) {
  json out = json::array();
  for (Hole h : hs) out.push_back(to_alpha(h));
  return out;
}

json jump_json(const Jump& j) {
  return {{"from", to_alpha(j.from)}, {"over", to_alpha(j.over)}, {"to", to_alpha(j.to)}};
}

json position_json(const Position& p) {
  return {{"n", p.side()}, {"occupied", holes_json(p.pegs())}, {"peg_count", p.peg_count()}};
}

std::optional<Hole> goal_of(const json& req, int n) {
  if (!req.contains("goal") || req["goal"].is_null()) return std::nullopt;
  if (req["goal"].is_string() && req["goal"].get<std::string>() == "any") return std::nullopt;
  return hole_of(req["goal"], n, "goal");
}

json hint(const json& req) {
  const int n = side_of(req);
  const Position p = position_of(req, n);
  const std::optional<Hole> goal = goal_of(req, n);
  json out = {{"move", nullptr}, {"exact", true}, {"winnable", false}};
  if (p.peg_count() <= 1) {
    out["winnable"] = p.peg_count() == 1 && (!goal || p.has(*goal));
    return out;
  }
  const auto legal = legal_jumps(p);
  if (legal.empty()) return out;
  if (n <= 10) {
    // Exact on small boards; a bounded attempt on the rest.
    SearchBudget budget;
    if (n > 6) budget.node_limit = 2'000'000;
    try {
      if (auto path = solve_position(p, goal, budget)) {
        out["move"] = format_move(Move{{path->front()}});
        out["jump"] = jump_json(path->front());
        out["winnable"] = true;
        return out;
      }
      if (n <= 6) return out;
    } catch (const EngineError& e) {
      if (e.kind() != ErrorKind::kBudgetExceeded) throw;
    }
  }
  // Heuristic: keep the most pegs able to move, avoiding corners.
  auto score = [&](const Jump& j) {
    const Position q = apply_jump(p, j);
    const bool corner = (j.to == Hole{0, 0}) || (j.to == Hole{0, n - 1}) || (j.to == Hole{n - 1, n - 1});
    return static_cast<int>(legal_jumps(q).size()) - (corner ? 100 : 0);
  };
  const Jump best = *std::max_element(legal.begin(), legal.end(), [&](const Jump& a, const Jump& b) {
    return score(a) < score(b);
  });
  out["move"] = format_move(Move{{best}});
  out["jump"] = jump_json(best);
  out["exact"] = false;
  out["winnable"] = nullptr;
  return out;
}

json move_reply(const json& req) {
  const int n = side_of(req);
  const Position p = position_of(req, n);
  if (!req.contains("move") || !req["move"].is_string()) throw BadRequest("'move' must be a string");
  std::vector<Move> moves;
  try {
    moves = parse_moves(req["move"].get<std::string>());
  } catch (const EngineError& e) {
    if (e.kind() == ErrorKind::kIllegal) throw;
    throw BadRequest(e.what());
  }
  if (moves.size() != 1) throw BadRequest("'move' must hold exactly one move");
  for (const Jump& j : moves[0].jumps)
    if (!on_board(j.from, n) || !on_board(j.to, n))
      throw EngineError(ErrorKind::kIllegal, format_move(moves[0]) + " leaves the board");
  const Position q = apply_move(p, moves[0]);
  json out = position_json(q);
  out["move"] = format_move(moves[0]);
  return out;
}

json solve(const json& req) {
  const int n = side_of(req);
  if (!req.contains("vacancy")) throw BadRequest("'vacancy' is required");
  const Hole v = hole_of(req["vacancy"], n, "vacancy");
  std::optional<Hole> f;
  if (req.contains("finish") && !req["finish"].is_null()) f = hole_of(req["finish"], n, "finish");
  if (n < 4) throw EngineError(ErrorKind::kInfeasible, "no one-peg solution exists below T4");
  const Solution s = f ? solve_pair(n, v, *f) : solve_vacancy(n, v);
  json out = {{"n", n},
              {"vacancy", to_alpha(s.vacancy)},
              {"finish", to_alpha(s.finish)},
              {"solution", emit_solution(s)},
              {"move_count", s.moves.size()},
              {"jump_count", s.jump_count()}};
  json moves = json::array();
  for (const Move& m : s.moves) moves.push_back(format_move(m));
  out["moves"] = moves;
  return out;
}

json parse_body(std::string_view body) {
  try {
    json j = json::parse(body);
    if (!j.is_object()) throw BadRequest("request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw BadRequest(std::string("malformed JSON: ") + e.what());
  }
}

ServiceReply error_reply(int status, const std::string& what) {
  return {status, {{"error", what}, {"engine_version", kEngineVersion}}};
}

}  // namespace

json board_json(int n) {
  json holes = json::array();
  for (int y = 0; y < n; ++y)
    for (int x = 0; x <= y; ++x)
      holes.push_back({{"name", to_alpha({x, y})}, {"x", x}, {"y", y}, {"class", hole_class({x, y})}});
  return {{"n", n}, {"holes", holes}};
}

json analyze_json(const Position& p) {
  const int n = p.side();
  const ClassSignature sig = position_class(p);
  json out = position_json(p);
  out["class"] = {{"name", class_name(sig.value())},
                  {"parity", {sig.parity[0], sig.parity[1], sig.parity[2]}}};

  json classes = json::array(), targets = json::array();
  for (int c = 0; c < 3; ++c) {
    Hole rep{-1, -1};
    for (int y = 0; y < n && rep.x < 0; ++y)
      for (int x = 0; x <= y; ++x)
        if (hole_class({x, y}) == c) {
          rep = {x, y};
          break;
        }
    if (rep.x < 0 || !(position_class(Position::single_peg(n, rep)) == sig)) continue;
    classes.push_back(c);
    for (int y = 0; y < n; ++y)
      for (int x = 0; x <= y; ++x)
        if (hole_class({x, y}) == c) targets.push_back(to_alpha({x, y}));
  }
  out["feasible_target_classes"] = classes;
  out["feasible_targets"] = targets;

  const bool t5 = n == 5;
  json jumps = json::array();
  for (const Jump& j : legal_jumps(p)) {
    json e = jump_json(j);
    e["category"] = t5 ? json(category_name(classify_jump(p, j))) : json(nullptr);
    e["sax_delta"] = t5 ? json(jump_sax_delta(p, j)) : json(nullptr);
    jumps.push_back(e);
  }
  out["legal_jumps"] = jumps;
  if (t5) {
    const SaxBreakdown s = sax_count(p);
    const FeBreakdown fe = fe_count(p);
    out["sax"] = {{"s", s.s}, {"a", s.a}, {"x", s.x}, {"total", s.total()}};
    out["fe"] = {{"f", fe.f}, {"e", fe.e}, {"total", fe.total()}};
  } else {
    out["sax"] = nullptr;
    out["fe"] = nullptr;
  }
  out["winnable"] = n <= 6 && p.peg_count() > 0 ? json(solve_position(p, std::nullopt).has_value())
                                                : json(nullptr);
  return out;
}

ServiceReply handle_request(std::string_view method, std::string_view path, std::string_view body) {
  try {
    json out;
    if (method == "GET" && path.starts_with("/board/")) {
      const std::string_view arg = path.substr(7);
      if (arg.empty() || arg.size() > 3 ||
          !std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw BadRequest("board size must be a number");
      const int n = std::stoi(std::string(arg));
      if (n < 1 || n > kServiceMaxSide)
        throw BadRequest("board size must be between 1 and " + std::to_string(kServiceMaxSide));
      out = board_json(n);
    } else if (method == "POST" && path == "/analyze") {
      const json req = parse_body(body);
      out = analyze_json(position_of(req, side_of(req)));
    } else if (method == "POST" && path == "/move") {
      out = move_reply(parse_body(body));
    } else if (method == "POST" && path == "/hint") {
      out = hint(parse_body(body));
    } else if (method == "POST" && path == "/solve") {
      out = solve(parse_body(body));
    } else {
      return error_reply(404, "no route for " + std::string(method) + " " + std::string(path));
    }
    out["engine_version"] = kEngineVersion;
    return {200, out};
  } catch (const BadRequest& e) {
    return error_reply(400, e.what());
  } catch (const EngineError& e) {
    switch (e.kind()) {
      case ErrorKind::kInvalidArgument: return error_reply(400, e.what());
      case ErrorKind::kIllegal:
      case ErrorKind::kInfeasible: return error_reply(422, e.what());
      case ErrorKind::kBudgetExceeded: return error_reply(504, e.what());
      case ErrorKind::kInternal: break;
    }
    return error_reply(500, e.what());
  } catch (const json::exception& e) {
    return error_reply(400, e.what());
  }
}

void run_server(const std::string& host, int port) {
  httplib::Server server;
  auto bridge = [](const httplib::Request& req, httplib::Response& res) {
    const ServiceReply r = handle_request(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(R"(/board/.*)", bridge);
  server.Post(R"(/(analyze|move|hint|solve))", bridge);
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.status = 204;
  });
  if (!server.listen(host, port))
    throw EngineError(ErrorKind::kInvalidArgument, "cannot listen on port " + std::to_string(port));
}

}  // namespace trisolve
