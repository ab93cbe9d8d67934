#include <set>

#include "doctest.h"
#include "trisolve/notation.hpp"
#include "trisolve/search.hpp"
#include "trisolve/service.hpp"

using namespace trisolve;
using nlohmann::json;

namespace {

json full_minus(int n, const std::string& vacancy) {
  json occ = json::array();
  for (int y = 0; y < n; ++y)
    for (int x = 0; x <= y; ++x)
      if (to_alpha({x, y}) != vacancy) occ.push_back(to_alpha({x, y}));
  return occ;
}

ServiceReply post(const char* path, const json& body) { return handle_request("POST", path, body.dump()); }

Position position_from(const json& body) {
  Position p(body["n"].get<int>());
  for (const auto& h : body["occupied"]) p.set(from_alpha(h.get<std::string>()));
  return p;
}

}  // namespace

TEST_CASE("board endpoint") {
  const ServiceReply r = handle_request("GET", "/board/5", "");
  CHECK(r.status == 200);
  CHECK(r.body["engine_version"] == kEngineVersion);
  CHECK(r.body["holes"].size() == 15);
  CHECK(r.body["holes"][4]["name"] == "b3");
  CHECK(r.body["holes"][4]["class"] == 0);
  CHECK(handle_request("GET", "/board/24", "").status == 200);
  CHECK(handle_request("GET", "/board/25", "").status == 400);
  CHECK(handle_request("GET", "/board/x", "").status == 400);
  CHECK(handle_request("GET", "/nowhere", "").status == 404);
  CHECK(handle_request("GET", "/nowhere", "").body.contains("engine_version"));
}

TEST_CASE("analyze the T5 a1 start") {
  const ServiceReply r = post("/analyze", {{"n", 5}, {"occupied", full_minus(5, "a1")}});
  REQUIRE(r.status == 200);
  const json& b = r.body;
  CHECK(b["peg_count"] == 14);
  REQUIRE(b["legal_jumps"].size() == 2);
  std::set<std::string> froms;
  for (const auto& j : b["legal_jumps"]) {
    froms.insert(j["from"].get<std::string>());
    CHECK(j["to"] == "a1");
    CHECK(j["category"] == "INTO_CORNER");
    CHECK(j["sax_delta"] == -1);
  }
  CHECK(froms == std::set<std::string>{"a3", "c3"});
  CHECK(b["sax"]["total"].is_number());
  CHECK(b["fe"]["total"] == b["sax"]["total"]);
  CHECK(b["winnable"] == true);
  // The a1 start finishes on class-0 holes only.
  CHECK(b["feasible_target_classes"] == json::array({0}));
}

TEST_CASE("analyze off T5 leaves SAX fields null") {
  const ServiceReply r = post("/analyze", {{"n", 7}, {"occupied", full_minus(7, "c5")}});
  REQUIRE(r.status == 200);
  CHECK(r.body["sax"].is_null());
  CHECK(r.body["fe"].is_null());
  CHECK(r.body["winnable"].is_null());
  for (const auto& j : r.body["legal_jumps"]) {
    CHECK(j["category"].is_null());
    CHECK(j["sax_delta"].is_null());
  }
}

TEST_CASE("move endpoint") {
  const json start = {{"n", 5}, {"occupied", full_minus(5, "a1")}};
  json req = start;
  req["move"] = "a3-a1";
  const ServiceReply ok = post("/move", req);
  REQUIRE(ok.status == 200);
  CHECK(ok.body["peg_count"] == 13);
  const Position p = position_from(ok.body);
  CHECK(p.has(from_alpha("a1")));
  CHECK(!p.has(from_alpha("a2")));
  CHECK(!p.has(from_alpha("a3")));

  req["move"] = "e5-g5";
  CHECK(post("/move", req).status == 422);
  req["move"] = "b3-b1";
  CHECK(post("/move", req).status == 422);
  req["move"] = "a5-a3";
  CHECK(post("/move", req).status == 422);
  req["move"] = "a3-a1, a5-a3";
  CHECK(post("/move", req).status == 400);
  req["move"] = 7;
  CHECK(post("/move", req).status == 400);
}

TEST_CASE("malformed requests") {
  CHECK(handle_request("POST", "/analyze", "{not json").status == 400);
  CHECK(handle_request("POST", "/analyze", "[1,2]").status == 400);
  CHECK(post("/analyze", {{"n", "5"}, {"occupied", json::array()}}).status == 400);
  CHECK(post("/analyze", {{"n", 5}}).status == 400);
  CHECK(post("/analyze", {{"n", 5}, {"occupied", {"z9"}}}).status == 400);
  CHECK(post("/analyze", {{"n", 30}, {"occupied", json::array()}}).status == 400);
  CHECK(post("/solve", {{"n", 10}}).status == 400);
}

TEST_CASE("hints keep small games winnable") {
  json state = {{"n", 5}, {"occupied", full_minus(5, "c5")}};
  for (int step = 0; step < 13; ++step) {
    json req = state;
    req["goal"] = "any";
    const ServiceReply h = post("/hint", req);
    REQUIRE(h.status == 200);
    CHECK(h.body["exact"] == true);
    REQUIRE(h.body["move"].is_string());
    req.erase("goal");
    req["move"] = h.body["move"];
    const ServiceReply m = post("/move", req);
    REQUIRE(m.status == 200);
    state = {{"n", 5}, {"occupied", m.body["occupied"]}};
    CHECK(solve_position(position_from(state), std::nullopt).has_value());
  }
  CHECK(state["occupied"].size() == 1);

  // A position with no winning line gets no move.
  const ServiceReply lost = post("/hint", {{"n", 5}, {"occupied", {"a1", "e5"}}});
  REQUIRE(lost.status == 200);
  CHECK(lost.body["move"].is_null());
  CHECK(lost.body["winnable"] == false);

  const ServiceReply big = post("/hint", {{"n", 14}, {"occupied", full_minus(14, "a1")}});
  REQUIRE(big.status == 200);
  CHECK(big.body["exact"] == false);
  CHECK(big.body["move"].is_string());
}

TEST_CASE("hint toward a finish hole") {
  json req = {{"n", 5}, {"occupied", full_minus(5, "a1")}, {"goal", "a1"}};
  const ServiceReply h = post("/hint", req);
  REQUIRE(h.status == 200);
  CHECK(h.body["winnable"] == true);
  req["goal"] = "b3";
  CHECK(post("/hint", req).body["winnable"] == false);
}

TEST_CASE("solve endpoint") {
  const ServiceReply r = post("/solve", {{"n", 20}, {"vacancy", "g10"}});
  REQUIRE(r.status == 200);
  const Solution s = parse_solution(20, r.body["solution"].get<std::string>());
  CHECK(replay(s).ok);
  CHECK(r.body["jump_count"] == 208);
  CHECK(r.body["engine_version"] == kEngineVersion);

  const ServiceReply pair = post("/solve", {{"n", 9}, {"vacancy", "a1"}, {"finish", "a7"}});
  REQUIRE(pair.status == 200);
  CHECK(pair.body["finish"] == "a7");
  CHECK(post("/solve", {{"n", 10}, {"vacancy", "d7"}}).status == 422);
  CHECK(post("/solve", {{"n", 6}, {"vacancy", "a1"}, {"finish", "a2"}}).status == 422);
  CHECK(post("/solve", {{"n", 3}, {"vacancy", "a1"}}).status == 422);
}

TEST_CASE("identical requests give identical responses") {
  const json req = {{"n", 6}, {"occupied", full_minus(6, "c5")}};
  CHECK(post("/analyze", req).body.dump() == post("/analyze", req).body.dump());
  CHECK(post("/hint", req).body.dump() == post("/hint", req).body.dump());
}
