#include <cmath>
#include <set>

#include "doctest.h"
#include "trisolve/classification.hpp"
#include "trisolve/error.hpp"
#include "trisolve/notation.hpp"
#include "trisolve/sax.hpp"
#include "trisolve/search.hpp"

using namespace trisolve;

namespace {

Hole h(const char* name) { return from_alpha(name); }

// Plain breadth-first enumeration over Position values.
std::size_t enumerate(int n, Hole vacancy, const JumpFilter& allowed) {
  std::set<Position> seen{Position::with_vacancy(n, vacancy)};
  std::vector<Position> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Position p = todo.back();
    todo.pop_back();
    for (const Jump& j : legal_jumps(p)) {
      if (allowed && !allowed(j)) continue;
      const Position q = apply_jump(p, j);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("T4 pair outcomes") {
  CHECK(brute_force_solvable(4, h("a2"), h("b2")));
  CHECK(!brute_force_solvable(4, h("a2"), h("a3")));
  CHECK(!brute_force_solvable(4, h("a2"), h("c4")));
  CHECK(brute_force_solvable(4, h("a2")));
  CHECK(!brute_force_solvable(4, h("a1")));
}

TEST_CASE("T5 solvable pairs follow effective slack") {
  int solvable = 0;
  const auto pairs = distinct_feasible_pairs(5);
  CHECK(pairs.size() == 17);
  for (const auto& [v, f] : pairs) {
    CAPTURE(to_alpha(v));
    CAPTURE(to_alpha(f));
    const bool s = brute_force_solvable(5, v, f);
    CHECK(s == (effective_slack(v, f) >= 0));
    solvable += s;
  }
  CHECK(solvable == 12);
}

TEST_CASE("feasibility is sufficient on T6") {
  for (const auto& [v, f] : distinct_feasible_pairs(6)) {
    CAPTURE(to_alpha(v));
    CAPTURE(to_alpha(f));
    CHECK(brute_force_solvable(6, v, f));
  }
  // Infeasible pairs never solve.
  CHECK(!brute_force_solvable(6, h("a1"), h("a2")));
  CHECK(!brute_force_solvable(5, h("a1"), h("b2")));
}

TEST_CASE("find_solution") {
  const auto [v, f] = distinct_feasible_pairs(7).front();
  const auto s = find_solution(7, v, f);
  REQUIRE(s);
  CHECK(replay(*s).ok);
  CHECK(s->vacancy == v);
  CHECK(s->finish == f);
  CHECK(!find_solution(4, h("a2"), h("a3")));
  CHECK_THROWS_AS(find_solution(9, h("a1"), std::nullopt, {0, 10, 0}), EngineError);
}

TEST_CASE("counting T5 a1 complement") {
  CHECK(count_solutions(5, h("a1"), h("a1")) == 6816);
  CHECK(solution_equivalence_classes(5, h("a1"), h("a1")) == 2);
  CHECK(count_solutions(5, h("a1"), h("b3")) == 0);
  CHECK(count_solutions(4, h("a2"), h("b2")) > 0);
}

TEST_CASE("reachable positions") {
  CHECK(reachable_count(4, h("a2")) == enumerate(4, h("a2"), {}));
  CHECK(reachable_count(4, h("a2")) == 62);
  CHECK(reachable_count(4, h("a2"), b3_only_a2_c4()) == enumerate(4, h("a2"), b3_only_a2_c4()));
  CHECK(reachable_count(4, h("a2"), b3_only_a2_c4()) == 26);
  CHECK(reachable_count(4, h("a2"), [](const Jump&) { return false; }) == 1);
  CHECK(reachable_count(5, h("c5")) == enumerate(5, h("c5"), {}));
}

TEST_CASE("player odds") {
  struct Row {
    const char* vacancy;
    Player player;
    std::int64_t odds;
  };
  const Row rows[] = {
      {"a1", Player::kA, 146}, {"b3", Player::kA, 579}, {"a4", Player::kA, 291},
      {"c5", Player::kA, 141}, {"a1", Player::kB, 47},  {"b3", Player::kB, 142},
      {"a4", Player::kB, 47},  {"c5", Player::kB, 13},  {"a1", Player::kC, 7},
      {"b3", Player::kC, 19},  {"a4", Player::kC, 7},   {"c5", Player::kC, 7}};
  for (const Row& r : rows) {
    CAPTURE(r.vacancy);
    CAPTURE(static_cast<int>(r.player));
    const OddsResult o = player_odds(h(r.vacancy), r.player);
    CHECK(o.probability > 0);
    CHECK(o.probability <= 1);
    CHECK(o.terminal_total == 1);
    CHECK(o.odds_rounded == r.odds);
    const mpq_class inverse = 1 / o.probability;
    CHECK(o.odds_rounded == std::llround(inverse.get_d()));
  }
  CHECK(parse_player("b") == Player::kB);
  CHECK_THROWS_AS(parse_player("D"), EngineError);
}

TEST_CASE("shortest solutions up to T7") {
  const int expected[] = {5, 9, 9, 12};
  for (int n = 4; n <= 7; ++n) {
    CAPTURE(n);
    const ShortestResult r = shortest_solution(n, std::nullopt, std::nullopt);
    REQUIRE(r.found);
    CHECK(r.moves == expected[n - 4]);
    CHECK(r.proved_minimal);
    CHECK(r.proved_lower == r.moves);
    CHECK(static_cast<int>(r.witness.moves.size()) == r.moves);
    CHECK(replay(r.witness).ok);
    CHECK(r.moves >= lower_bound_moves(n));
  }
}

TEST_CASE("shortest agrees with plain enumeration") {
  for (int n = 4; n <= 5; ++n)
    for (Hole v : distinct_feasible_vacancies(n)) {
      CAPTURE(n);
      CAPTURE(to_alpha(v));
      const ShortestResult r = shortest_solution(n, v, std::nullopt);
      const auto plain = min_moves_exhaustive(n, v, std::nullopt);
      REQUIRE(plain);
      CHECK(r.found);
      CHECK(r.moves == *plain);
    }
  for (const auto& [v, f] : distinct_feasible_pairs(5)) {
    const ShortestResult r = shortest_solution(5, v, f);
    const auto plain = min_moves_exhaustive(5, v, f);
    CHECK(r.found == plain.has_value());
    CHECK(r.unsolvable == !plain.has_value());
    if (plain) CHECK(r.moves == *plain);
  }
  const ShortestResult none = shortest_solution(4, h("a2"), h("a3"));
  CHECK(!none.found);
  CHECK(none.unsolvable);
}

TEST_CASE("shortest under a budget") {
  const ShortestResult r = shortest_solution(8, std::nullopt, std::nullopt, {0, 1000, 0});
  CHECK(!r.found);
  CHECK(!r.proved_minimal);
  CHECK(r.proved_lower >= 1);
  CHECK(r.proved_lower <= 13);
  const ShortestResult capped = shortest_solution(6, std::nullopt, std::nullopt, {7, 0, 0});
  CHECK(!capped.found);
  CHECK(capped.proved_lower == 8);
}

TEST_CASE("heuristic is a lower bound") {
  // On T5 the heuristic never exceeds the true remaining move count.
  for (Hole v : distinct_feasible_vacancies(5)) {
    const Position p = Position::with_vacancy(5, v);
    const auto plain = min_moves_exhaustive(5, v, std::nullopt);
    REQUIRE(plain);
    CHECK(merson_heuristic(p) <= *plain);
    CHECK(merson_heuristic(p) >= 1);
  }
  CHECK(merson_heuristic(Position::single_peg(6, h("c5"))) == 0);
}
