// One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trisolve/classification.hpp"
#include "trisolve/constructive.hpp"
#include "trisolve/notation.hpp"
#include "trisolve/published.hpp"
#include "trisolve/purge.hpp"
#include "trisolve/sax.hpp"
#include "trisolve/search.hpp"

using namespace trisolve;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

bool run(const char* name, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(start);
  c.expect(secs <= limit_s, "took longer than " + std::to_string(limit_s) + " s");
  std::printf("%s  %-22s %8.2f s (limit %g s)%s%s\n", c.ok ? "PASS" : "FAIL", name, secs, limit_s,
              c.detail.empty() ? "" : "  ", c.detail.c_str());
  std::fflush(stdout);
  return c.ok;
}

Hole h(const char* name) { return from_alpha(name); }

void fixtures(Check& c) {
  // T5 has two 10-move fixtures.
  const std::multimap<int, int> expected = {{4, 5},  {5, 10}, {5, 10}, {5, 11}, {5, 9},
                                            {6, 10}, {6, 9},  {6, 10}, {6, 9},  {6, 9},
                                            {7, 12}, {8, 13}, {9, 16}, {10, 18}};
  const auto& all = published_solutions();
  c.expect(all.size() == 14, "expected 14 fixtures, got " + std::to_string(all.size()));
  std::multimap<int, int> seen;
  for (const PublishedSolution& p : all) {
    const Solution s = parse_solution(p.n, p.text);
    const ReplayReport r = replay(s);
    const std::string tag = "T" + std::to_string(p.n) + " " + p.vacancy;
    c.expect(r.ok, tag + ": " + r.message);
    c.expect(to_alpha(s.vacancy) == p.vacancy, tag + ": wrong vacancy");
    c.expect(r.final_position.peg_count() == 1 && r.final_position.has(s.finish), tag + ": not one peg");
    c.expect(static_cast<int>(s.moves.size()) == p.moves, tag + ": move count");
    seen.insert({p.n, static_cast<int>(s.moves.size())});
  }
  c.expect(seen == expected, "move counts differ from the fixture table");
}

void purges(Check& c) {
  const PurgeTemplate& trap = find_template("trapezoid");
  c.expect(trap.catalysts.size() == 1 && trap.catalysts[0].scripts.size() == 6,
           "trapezoid needs six catalyst configurations");
  for (const PurgeTemplate& t : catalog()) {
    const VerifyReport r = verify_template(t);
    c.expect(r.ok && r.scripts_checked > 0,
             t.name + ": " + (r.failures.empty() ? std::string("nothing checked") : r.failures.front()));
  }
  auto band = plan_three_row_clear(10, {0, 0}, BandSide::kBottom, false);
  const ScheduleTrace t = run_schedule(Position::with_vacancy(10, h("c7")), band, {});
  c.expect(!t.stalled, "T10 band stalled: " + t.stall_reason);
  const std::vector<int> attribution = {0, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 2, 2, 1, 2, 2};
  c.expect(t.source.size() >= attribution.size() && std::vector<int>(t.source.begin(), t.source.begin() + 16) == attribution,
           "T10 band attribution differs");
}

void theory(Check& c) {
  const std::array<std::size_t, 11> pairs = {1, 4, 3, 17, 29, 27, 80, 125, 108, 260, 356};
  for (int n = 2; n <= 12; ++n) {
    const std::size_t got = distinct_feasible_pairs(n).size();
    c.expect(got == pairs[n - 2], "T" + std::to_string(n) + " pairs " + std::to_string(got));
    if (n >= 4)
      c.expect(feasible_pair_count_formula(n) == static_cast<std::int64_t>(got),
               "formula disagrees at n=" + std::to_string(n));
  }
  const std::array<int, 9> lower = {5, 6, 8, 10, 12, 13, 17, 18, 20};
  for (int n = 4; n <= 12; ++n)
    c.expect(lower_bound_moves(n) == lower[n - 4], "lower bound at n=" + std::to_string(n));
  c.expect(upper_bound_moves(12) == 29, "upper bound at n=12");
}

void pagoda(Check& c) {
  for (std::uint64_t bits = 0; bits < (1u << 15); ++bits) {
    const Position p = Position::from_bits64(5, bits);
    const int sax = sax_count(p).total();
    const int fe = fe_count(p).total();
    c.expect(sax_count(complement(p)).total() == -sax, "complement sign");
    for (const Jump& j : legal_jumps(p)) {
      const Position q = apply_jump(p, j);
      c.expect(sax_count(q).total() <= sax, "SAX increased");
      c.expect(fe_count(q).total() <= fe, "F-E increased");
    }
  }
  const std::map<std::pair<std::string, std::string>, int> table = {
      {{"c5", "c5"}, 2},  {{"a1", "c5"}, 1},  {{"c5", "a1"}, 1},  {{"c5", "a4"}, 1},
      {{"a4", "c5"}, 1},  {{"a1", "a1"}, 0},  {{"a1", "a4"}, 0},  {{"b3", "c5"}, 0},
      {{"c5", "b3"}, 0},  {{"a4", "a1"}, 0},  {{"a4", "a4"}, 0},  {{"a4", "d4"}, 0},
      {{"a1", "b3"}, -1}, {{"b3", "a1"}, -1}, {{"b3", "a4"}, -1}, {{"a4", "b3"}, -1},
      {{"b3", "b3"}, -2}};
  c.expect(distinct_feasible_pairs(5).size() == table.size(), "T5 pair count");
  int solvable = 0;
  for (const auto& [key, value] : table) {
    const Hole v = from_alpha(key.first), f = from_alpha(key.second);
    c.expect(effective_slack(v, f) == value, "effective slack " + key.first + "-" + key.second);
    solvable += brute_force_solvable(5, v, f);
  }
  c.expect(solvable == 12, std::to_string(solvable) + " of 17 pairs solvable");
}

void enumeration(Check& c) {
  const std::uint64_t count = count_solutions(5, h("a1"), h("a1"));
  c.expect(count == 6816, "T5 a1 count " + std::to_string(count));
  const int classes = solution_equivalence_classes(5, h("a1"), h("a1"));
  c.expect(classes == 2, "classes " + std::to_string(classes));
  c.expect(brute_force_solvable(4, h("a2"), h("b2")), "T4 a2-b2 unsolved");
  c.expect(!brute_force_solvable(4, h("a2"), h("a3")), "T4 a2-a3 solved");
  c.expect(!brute_force_solvable(4, h("a2"), h("c4")), "T4 a2-c4 solved");
  const std::uint64_t reach = reachable_count(4, h("a2"), b3_only_a2_c4());
  c.expect(reach == 27, "constrained T4 reachability " + std::to_string(reach) + ", want 27");
}

void odds(Check& c) {
  const std::array<const char*, 4> holes = {"a1", "b3", "a4", "c5"};
  const std::array<Player, 3> players = {Player::kA, Player::kB, Player::kC};
  const std::array<std::array<std::int64_t, 4>, 3> want = {
      {{146, 579, 291, 141}, {47, 142, 47, 13}, {7, 19, 7, 7}}};
  for (int pi = 0; pi < 3; ++pi)
    for (int hi = 0; hi < 4; ++hi) {
      const OddsResult r = player_odds(h(holes[hi]), players[pi]);
      c.expect(r.odds_rounded == want[pi][hi],
               std::string("player ") + "ABC"[pi] + " " + holes[hi] + ": " + std::to_string(r.odds_rounded));
      c.expect(r.terminal_total == 1, "terminal mass is not 1");
    }
}

void constructive(Check& c) {
  auto timed = [&](const std::function<Solution()>& f, const std::string& tag) {
    const auto start = std::chrono::steady_clock::now();
    const Solution s = f();
    c.expect(seconds_since(start) < 1.0, tag + " took over 1 s");
    c.expect(replay(s).ok, tag + " does not replay");
    c.expect(is_feasible_pair(s.n, s.vacancy, s.finish), tag + " finish class");
    return s;
  };
  for (int n = 4; n <= 20; ++n)
    for (Hole v : distinct_feasible_vacancies(n))
      timed([&] { return solve_vacancy(n, v); }, "T" + std::to_string(n) + " " + to_alpha(v));
  for (int n = 6; n <= 12; ++n)
    for (const auto& [v, f] : distinct_feasible_pairs(n)) {
      const std::string tag = "T" + std::to_string(n) + " " + to_alpha(v) + "-" + to_alpha(f);
      const Solution s = timed([&] { return solve_pair(n, v, f); }, tag);
      c.expect(s.finish == f, tag + " wrong finish");
      if (v != f) continue;
      Position p = Position::with_vacancy(n, v);
      bool symmetric = has_rotational_symmetry(p);
      for (const Jump& j : s.jumps()) {
        apply_jump_unchecked(p, j);
        symmetric = symmetric || has_rotational_symmetry(p);
      }
      c.expect(!symmetric, tag + " passes a rotationally symmetric position");
    }
}

void shortest(Check& c) {
  const std::array<int, 5> want = {5, 9, 9, 12, 13};
  for (int n = 4; n <= 8; ++n) {
    const ShortestResult r = shortest_solution(n, std::nullopt, std::nullopt);
    const std::string tag = "S(" + std::to_string(n) + ")";
    c.expect(r.found && r.proved_minimal && r.moves == want[n - 4], tag + " = " + std::to_string(r.moves));
    c.expect(replay(r.witness).ok, tag + " witness does not replay");
    c.expect(r.moves >= lower_bound_moves(n), tag + " below the lower bound");
  }
  c.expect(lower_bound_moves(11) == 18 && lower_bound_moves(12) == 20, "lower bounds for n=11,12");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run("fixture replay", 1, fixtures);
  ok &= run("purge verification", 60, purges);
  ok &= run("theory tables", 1, theory);
  ok &= run("T5 pagoda suite", 60, pagoda);
  ok &= run("enumeration", 60, enumeration);
  ok &= run("odds", 300, odds);
  ok &= run("constructive solver", 600, constructive);
  ok &= run("shortest solutions", 3 * 3600, shortest);
  return ok ? 0 : 1;
}
