#include <set>

#include "doctest.h"
#include "trisolve/classification.hpp"
#include "trisolve/error.hpp"
#include "trisolve/notation.hpp"
#include "trisolve/purge.hpp"

using namespace trisolve;

namespace {

// Replays jumps on an explicit peg set, refusing anything outside `region`.
bool replay_on(std::set<Hole>& pegs, const std::set<Hole>& region, const std::vector<Jump>& js) {
  for (const Jump& j : js) {
    const Hole mid{(j.from.x + j.to.x) / 2, (j.from.y + j.to.y) / 2};
    if (!region.count(j.from) || !region.count(mid) || !region.count(j.to)) return false;
    if (!pegs.count(j.from) || !pegs.count(mid) || pegs.count(j.to)) return false;
    pegs.erase(j.from);
    pegs.erase(mid);
    pegs.insert(j.to);
  }
  return true;
}

std::vector<Jump> jumps_of(const std::string& text) {
  std::vector<Jump> out;
  for (const Move& m : parse_moves(text)) out.insert(out.end(), m.jumps.begin(), m.jumps.end());
  return out;
}

std::set<Hole> band_of(int side, Hole top, BandSide band) {
  std::set<Hole> out;
  for (int y = 0; y < side; ++y)
    for (int x = 0; x <= y; ++x) {
      const bool in_band = band == BandSide::kBottom ? y >= side - 3
                           : band == BandSide::kRight ? y - x <= 2
                                                      : x <= 2;
      if (in_band) out.insert(Hole{x, y} + top);
    }
  return out;
}

}  // namespace

TEST_CASE("catalog contents") {
  const auto& trap = find_template("trapezoid");
  CHECK(trap.cells.size() == 12);
  REQUIRE(trap.catalysts.size() == 1);
  CHECK(format_hole_list(trap.catalysts[0].holes) == "a3 b3 c3");
  CHECK(trap.catalysts[0].scripts.size() == 6);

  const auto& three = find_template("three");
  CHECK(three.cells.size() == 3);
  REQUIRE(three.catalysts.size() == 2);
  for (const auto& c : three.catalysts) {
    CHECK(c.holes.size() == 2);
    CHECK(c.scripts.count("10") == 1);
    CHECK(c.scripts.count("01") == 1);
  }
  const auto& six = find_template("six");
  CHECK(six.cells.size() == 6);
  REQUIRE(six.catalysts.size() == 2);
  for (const auto& c : six.catalysts) CHECK(c.scripts.size() == 2);

  const auto& edge = find_template("edge");
  CHECK(edge.edge);
  CHECK(edge.vacancy_scripts.size() == 12);
  CHECK_THROWS_AS(find_template("wide"), EngineError);
}

TEST_CASE("trapezoid scripts as listed") {
  const auto& s = find_template("trapezoid").catalysts[0].scripts;
  CHECK(format_jumps(s.at("110")) ==
        format_jumps(jumps_of("c5-c3, a4-c4, c3-c5, c6-c4, a3-c3-c5, e6-c6-a4, a5-a3, a6-c6-c4, d5-b3")));
  const auto reversed = s.at("100");
  const auto head = jumps_of("d5-b3, a4-c4, a6-a4, c6-a6, e6-c6, c5-c3");
  REQUIRE(reversed.size() >= head.size());
  CHECK(std::vector<Jump>(reversed.begin(), reversed.begin() + head.size()) == head);
}

TEST_CASE("every script has the purge effect on a plain replay") {
  for (const PurgeTemplate& t : catalog()) {
    if (t.edge) continue;
    std::set<Hole> region(t.cells.begin(), t.cells.end());
    for (const CatalystOption& c : t.catalysts) {
      region.insert(c.holes.begin(), c.holes.end());
      for (const auto& [key, script] : c.scripts) {
        CAPTURE(t.name);
        CAPTURE(key);
        std::set<Hole> pegs(t.cells.begin(), t.cells.end()), expected;
        for (std::size_t i = 0; i < key.size(); ++i)
          if (key[i] == '1') {
            pegs.insert(c.holes[i]);
            expected.insert(c.holes[i]);
          }
        std::set<Hole> local = region;
        for (const auto& other : t.catalysts)
          if (&other != &c)
            for (Hole h : other.holes) local.erase(h);
        local.insert(c.holes.begin(), c.holes.end());
        CHECK(replay_on(pegs, local, script));
        CHECK(pegs == expected);
      }
    }
  }
}

TEST_CASE("verify_template passes the catalog") {
  for (const PurgeTemplate& t : catalog()) {
    const VerifyReport r = verify_template(t);
    CAPTURE(t.name);
    CHECK(r.ok);
    CHECK(r.failures.empty());
    CHECK(r.scripts_checked > 0);
  }
  // 6 configurations, each checked forwards and backwards, in 6 images.
  CHECK(verify_template(find_template("trapezoid")).scripts_checked == 72);
  CHECK(!check_block_script(find_template("six").cells, find_template("six").catalysts[0].holes,
                            "10", find_template("six").catalysts[0].scripts.at("10")));
}

TEST_CASE("tampered scripts fail") {
  PurgeTemplate t = find_template("trapezoid");
  auto& script = t.catalysts[0].scripts.at("110");
  std::swap(script[1], script[2]);
  const VerifyReport r = verify_template(t);
  CHECK(!r.ok);
  REQUIRE(!r.failures.empty());
  CHECK(r.failures[0].find("script 110") != std::string::npos);
  CHECK(r.failures[0].find("jump 1") != std::string::npos);

  PurgeTemplate e = find_template("edge");
  e.vacancy_scripts.begin()->second.pop_back();
  CHECK(!verify_template(e).ok);

  const auto& six = find_template("six");
  CHECK(check_block_script(six.cells, six.catalysts[0].holes, "01",
                           six.catalysts[0].scripts.at("10")));
}

TEST_CASE("script derivation") {
  const auto& six = find_template("six");
  for (const auto& c : six.catalysts)
    for (const char* key : {"10", "01"}) {
      const auto found = derive_block_scripts(six.cells, c.holes, key, 5);
      REQUIRE(!found.empty());
      for (const auto& s : found) CHECK(!check_block_script(six.cells, c.holes, key, s));
    }
  // A full catalyst cannot be restored once the cells are gone.
  const auto& three = find_template("three");
  CHECK(derive_block_scripts(three.cells, three.catalysts[0].holes, "11", 1).empty());
  CHECK(derive_block_scripts(three.cells, three.catalysts[0].holes, "00", 1).empty());
}

TEST_CASE("catalog parse errors") {
  CHECK_THROWS_AS(parse_catalog("cells: a1\n"), EngineError);
  CHECK_THROWS_AS(parse_catalog("purge x 3\ncells: a1\nscript 1: a1-a3\n"), EngineError);
  CHECK_THROWS_AS(parse_catalog("purge x 3\ncatalyst: a1 b1\nscript 1: a1-a3\n"), EngineError);
  CHECK_THROWS_AS(parse_catalog("purge x 3\nwhatever: a1\n"), EngineError);
  CHECK_THROWS_AS(parse_catalog("purge x 3\ncatalyst: a1 b1\nscript 10: a1-a2\n"), EngineError);
  const auto round = parse_catalog(format_catalog(catalog()));
  REQUIRE(round.size() == catalog().size());
  for (std::size_t i = 0; i < round.size(); ++i) {
    CHECK(round[i].cells == catalog()[i].cells);
    CHECK(round[i].vacancy_scripts == catalog()[i].vacancy_scripts);
  }
}

TEST_CASE("trapezoid scripts expose a side catalyst") {
  // The 6-purge next to a trapezoid uses b4/c4 or d6/e6 of its frame.
  const Hole b4{1, 3}, c4{2, 3}, d6{3, 5}, e6{4, 5};
  const auto& trap = find_template("trapezoid");
  int exposing = 0;
  for (const auto& [key, script] : trap.catalysts[0].scripts) {
    std::set<Hole> pegs(trap.cells.begin(), trap.cells.end());
    for (std::size_t i = 0; i < key.size(); ++i)
      if (key[i] == '1') pegs.insert(trap.catalysts[0].holes[i]);
    bool seen = false;
    for (const Jump& j : script) {
      seen |= (!pegs.count(c4) && pegs.count(b4) && pegs.count(e6)) ||
              (!pegs.count(e6) && pegs.count(c4) && pegs.count(d6));
      pegs.erase(j.from);
      pegs.erase(j.over);
      pegs.insert(j.to);
    }
    exposing += seen;
  }
  CHECK(exposing == 6);
}

TEST_CASE("edge scripts keep the vacancy class") {
  const auto& edge = find_template("edge");
  const auto& top = edge.catalysts[0].holes;
  std::set<Hole> region(edge.cells.begin(), edge.cells.end());
  region.insert(top.begin(), top.end());
  int both = 0;
  for (const auto& [v, script] : edge.vacancy_scripts) {
    CAPTURE(to_alpha(v));
    std::set<Hole> pegs = region;
    pegs.erase(v);
    REQUIRE(replay_on(pegs, region, script));
    REQUIRE(pegs.size() == 2);
    Hole gap{};
    for (Hole h : top)
      if (!pegs.count(h)) gap = h;
    CHECK(hole_class(gap) == hole_class(v));
    both += exposes_right_catalyst(script, v) && exposes_left_catalyst(script, v);
  }
  CHECK(both == 12);
}

TEST_CASE("three-row bands tile exactly") {
  const Hole tops[] = {{0, 0}, {3, 6}};
  for (int side = 7; side <= 20; ++side)
    for (BandSide band : {BandSide::kBottom, BandSide::kRight, BandSide::kLeft})
      for (bool mirrored : {false, true})
        for (Hole top : tops) {
          CAPTURE(side);
          const auto purges = plan_three_row_clear(side, top, band, mirrored);
          std::multiset<Hole> covered;
          int threes = 0;
          for (const auto& p : purges) {
            for (Hole h : p.cells()) covered.insert(h);
            threes += p.label == "3";
          }
          const auto expected = band_of(side, top, band);
          CHECK(std::set<Hole>(covered.begin(), covered.end()) == expected);
          CHECK(covered.size() == expected.size());
          CHECK(purges.front().label == "T");
          CHECK(threes == (side - 5) % 2);
          if (threes) CHECK(purges[1].label == "3");
          if (purges.back().label == "3") CHECK(purges.size() == 2u);
          for (const auto& p : purges)
            for (int c : p.catalyst_options)
              for (Hole h : p.tmpl->catalysts[c].holes) {
                const Hole b = p.place.map(h) - top;
                CHECK(on_board(b, side));
              }
        }
  CHECK_THROWS_AS(plan_three_row_clear(6, {0, 0}, BandSide::kBottom, false), EngineError);
}

TEST_CASE("band layouts") {
  auto labels = [](const std::vector<PurgeInstance>& ps) {
    std::string s;
    for (const auto& p : ps) s += p.label;
    return s;
  };
  CHECK(labels(plan_three_row_clear(10, {0, 0}, BandSide::kBottom, false)) == "T366");
  CHECK(labels(plan_three_row_clear(20, {0, 0}, BandSide::kBottom, false)) == "T36666666");
  CHECK(labels(plan_three_row_clear(7, {0, 0}, BandSide::kBottom, false)) == "T6");
  CHECK(labels(plan_three_row_clear(8, {0, 0}, BandSide::kBottom, false)) == "T36");
  CHECK(labels(plan_three_row_clear(9, {0, 0}, BandSide::kBottom, false)) == "T66");
}

TEST_CASE("edge-row purge plans") {
  for (int n = 7; n <= 12; ++n)
    for (int y = n - 3; y < n; ++y)
      for (int x = 0; x <= y; ++x) {
        const Hole v{x, y};
        int plans = 0;
        for (int k = 0; k <= n - 5; ++k) {
          const auto plan = edge_row_purge(n, v, k);
          if (!plan) continue;
          ++plans;
          CHECK(plan->new_vacancy.y == n - 4);
          CHECK(hole_class(plan->new_vacancy) == hole_class(v));
          std::multiset<Hole> covered;
          for (const auto& p : plan->purges)
            for (Hole h : p.cells()) covered.insert(h);
          CHECK(covered.size() == static_cast<std::size_t>(3 * n - 3));
          for (Hole h : covered) CHECK((on_board(h, n) && h.y >= n - 3));
        }
        CAPTURE(n);
        CAPTURE(to_alpha(v));
        CHECK(plans > 0);
      }
  CHECK(!edge_row_purge(9, {0, 8}, 1));
  CHECK_THROWS_AS(edge_row_purge(6, {0, 5}, 0), EngineError);
}
