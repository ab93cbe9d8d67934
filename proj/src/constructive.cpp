#include "trisolve/constructive.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trisolve/classification.hpp"
#include "trisolve/error.hpp"
#include "trisolve/notation.hpp"
#include "trisolve/published.hpp"
#include "trisolve/search.hpp"

namespace trisolve {

extern const char* const kEmbeddedBaseLibrary;

namespace {

int base_side(int n) { return n % 3 == 1 ? 4 : n % 3 == 2 ? 5 : 6; }

bool all_on_board(const Jump& j, int n) {
  return on_board(j.from, n) && on_board(j.over, n) && on_board(j.to, n);
}

bool legal_on(const Position& p, const Jump& j) {
  return all_on_board(j, p.side()) && is_legal(p, j);
}

std::vector<Jump> shifted(const std::vector<Jump>& js, Hole d) {
  std::vector<Jump> out;
  for (const Jump& j : js) out.push_back({j.from + d, j.over + d, j.to + d});
  return out;
}

Solution make_solution(int n, const std::vector<Jump>& jumps) {
  Solution s;
  s.n = n;
  s.moves = group_jumps(jumps);
  if (!jumps.empty()) {
    s.vacancy = jumps.front().to;
    s.finish = jumps.back().to;
  }
  return s;
}

// Tries to start purge `p` on position `pos`; fills p.script on success.
bool try_start(const Position& pos, PurgeInstance& p) {
  if (p.fixed_script) {
    if (p.fixed_script->empty() || !legal_on(pos, p.fixed_script->front())) return false;
    p.script = *p.fixed_script;
    return true;
  }
  for (int c : p.catalyst_options) {
    const CatalystOption& opt = p.tmpl->catalysts[c];
    std::string key;
    bool inside = true;
    for (Hole h : opt.holes) {
      const Hole b = p.place.map(h);
      inside &= on_board(b, pos.side());
      key += inside && pos.has(b) ? '1' : '0';
    }
    if (!inside || key.find('0') == std::string::npos || key.find('1') == std::string::npos)
      continue;
    const auto it = opt.scripts.find(key);
    if (it == opt.scripts.end() || it->second.empty()) continue;
    const Jump first = p.place.map(it->second.front());
    if (!legal_on(pos, first)) continue;
    p.script.clear();
    for (const Jump& j : it->second) p.script.push_back(p.place.map(j));
    return true;
  }
  return false;
}

}  // namespace

ScheduleTrace run_schedule(Position pos, std::vector<PurgeInstance>& purges,
                           const std::vector<Jump>& base) {
  ScheduleTrace trace;
  std::size_t next_base = 0;
  int started = 0;
  auto play = [&](const Jump& j, int source) {
    apply_jump_unchecked(pos, j);
    trace.jumps.push_back(j);
    trace.source.push_back(source);
  };
  while (pos.peg_count() > 1) {
    bool done = false;
    for (std::size_t i = 0; i < purges.size() && !done; ++i) {
      PurgeInstance& p = purges[i];
      if (p.started()) continue;
      if (p.after >= 0) {
        const PurgeInstance& host = purges[p.after];
        if (!host.started() || host.finished()) continue;
      }
      if (!try_start(pos, p)) continue;
      p.start_order = started++;
      p.next = 1;
      play(p.script.front(), static_cast<int>(i));
      done = true;
    }
    if (done) continue;
    int best = -1;
    for (std::size_t i = 0; i < purges.size(); ++i) {
      const PurgeInstance& p = purges[i];
      if (!p.started() || p.finished() || !legal_on(pos, p.script[p.next])) continue;
      if (best < 0 || p.start_order > purges[best].start_order) best = static_cast<int>(i);
    }
    if (best >= 0) {
      PurgeInstance& p = purges[best];
      play(p.script[p.next++], best);
      continue;
    }
    if (next_base < base.size()) {
      const Jump& j = base[next_base];
      if (!legal_on(pos, j)) {
        trace.stalled = true;
        trace.stall_reason = "base jump " + std::to_string(next_base) + " is blocked";
        return trace;
      }
      ++next_base;
      play(j, -1);
      continue;
    }
    bool pending = false;
    for (const PurgeInstance& p : purges) pending |= !p.finished();
    if (pending) {
      trace.stalled = true;
      trace.stall_reason = "no purge can continue";
    }
    return trace;
  }
  return trace;
}

std::vector<SubBoard> subboard_candidates(int n, Hole vacancy, int side) {
  std::vector<SubBoard> out;
  for (int ox = 0; ox <= n - side; ox += 3)
    for (int oy = ox; oy <= n - side; oy += 3) {
      const SubBoard s{side, {ox, oy}};
      if (s.contains(vacancy)) out.push_back(s);
    }
  std::sort(out.begin(), out.end(), [](const SubBoard& a, const SubBoard& b) { return a.top < b.top; });
  return out;
}

SubBoard choose_subboard(int n, Hole vacancy) {
  if (!is_feasible_vacancy(n, vacancy))
    throw EngineError(ErrorKind::kInfeasible, "vacancy " + to_alpha(vacancy) + " is not feasible");
  const auto c = subboard_candidates(n, vacancy, std::min(n, base_side(n)));
  if (c.empty()) throw EngineError(ErrorKind::kInternal, "no sub-board holds the vacancy");
  return c.front();
}

Solution base_solution(int m, Hole vacancy) {
  if (m >= 4 && m <= 6) {
    for (const PublishedSolution& ps : published_solutions()) {
      if (ps.n != m) continue;
      const Hole pv = from_alpha(ps.vacancy);
      for (Transform t : kAllTransforms)
        if (apply(t, pv, m) == vacancy) return transformed(t, parse_solution(m, ps.text));
    }
  } else if (auto s = base_library().find_vacancy(m, vacancy)) {
    return *s;
  }
  throw EngineError(ErrorKind::kInternal,
                    "no base solution for T" + std::to_string(m) + " vacancy " + to_alpha(vacancy));
}

SolvePlan make_plan(int n, Hole vacancy, const SubBoard& sub, const std::vector<GrowStep>& steps,
                    const std::vector<bool>& mirrored) {
  SolvePlan plan;
  plan.n = n;
  plan.sub = sub;
  plan.steps = steps;
  plan.mirrored = mirrored;
  plan.base = shifted(base_solution(sub.side, vacancy - sub.top).jumps(), sub.top);
  int side = sub.side;
  Hole top = sub.top;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    BandSide band = BandSide::kBottom;
    if (steps[i] == GrowStep::kRight) {
      top = top - Hole{0, 3};
      band = BandSide::kRight;
    } else if (steps[i] == GrowStep::kLeft) {
      top = top - Hole{3, 3};
      band = BandSide::kLeft;
    }
    side += 3;
    auto band_purges = plan_three_row_clear(side, top, band, mirrored[i]);
    const int shift = static_cast<int>(plan.purges.size());
    for (PurgeInstance& p : band_purges)
      if (p.after >= 0) p.after += shift;
    plan.purges.insert(plan.purges.end(), band_purges.begin(), band_purges.end());
  }
  if (side != n || top != Hole{0, 0})
    throw EngineError(ErrorKind::kInvalidArgument, "growth steps do not reach the whole board");
  return plan;
}

namespace {

std::optional<Solution> try_plan(int n, Hole vacancy, const SubBoard& sub,
                                 const std::vector<GrowStep>& steps,
                                 const std::vector<bool>& mirrored) {
  SolvePlan plan = make_plan(n, vacancy, sub, steps, mirrored);
  ScheduleTrace t = run_schedule(Position::with_vacancy(n, vacancy), plan.purges, plan.base);
  if (t.stalled) return std::nullopt;
  Solution s = make_solution(n, t.jumps);
  if (!replay(s).ok) return std::nullopt;
  return s;
}

std::vector<std::vector<GrowStep>> step_orders(int n, const SubBoard& sub) {
  const int left = sub.top.x / 3;
  const int right = (sub.top.y - sub.top.x) / 3;
  const int bottom = (n - sub.side) / 3 - left - right;
  std::vector<GrowStep> steps;
  steps.insert(steps.end(), bottom, GrowStep::kBottom);
  steps.insert(steps.end(), right, GrowStep::kRight);
  steps.insert(steps.end(), left, GrowStep::kLeft);
  std::vector<std::vector<GrowStep>> out;
  do out.push_back(steps);
  while (std::next_permutation(steps.begin(), steps.end()));
  return out;
}

}  // namespace

Solution solve_vacancy(int n, Hole vacancy) {
  if (n < 4) throw EngineError(ErrorKind::kInvalidArgument, "n must be at least 4");
  if (!is_feasible_vacancy(n, vacancy))
    throw EngineError(ErrorKind::kInfeasible, "vacancy " + to_alpha(vacancy) + " is not feasible");
  if (n <= 6) return base_solution(n, vacancy);
  // Standard base first, then the next congruent size from the library.
  for (int side = base_side(n); side <= std::min(n - 3, base_side(n) + 3); side += 3) {
    for (const SubBoard& sub : subboard_candidates(n, vacancy, side)) {
      for (const auto& steps : step_orders(n, sub)) {
        const std::size_t k = steps.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
          std::vector<bool> mirrored(k);
          for (std::size_t i = 0; i < k; ++i) mirrored[i] = (mask >> i) & 1;
          if (auto s = try_plan(n, vacancy, sub, steps, mirrored)) return *s;
        }
      }
    }
  }
  throw EngineError(ErrorKind::kInternal, "every plan stalled for T" + std::to_string(n) +
                                              " vacancy " + to_alpha(vacancy));
}

namespace {

std::optional<Solution> solve_pair_impl(int n, Hole vacancy, Hole finish, bool allow_reverse);

// Both holes inside a corner copy of T_{n-3}: solve there, clear the band.
std::optional<Solution> solve_in_corner(int n, Hole vacancy, Hole finish) {
  const std::pair<Hole, BandSide> corners[] = {
      {{0, 0}, BandSide::kBottom}, {{0, 3}, BandSide::kRight}, {{3, 3}, BandSide::kLeft}};
  for (const auto& [corner, band] : corners) {
    const SubBoard sub{n - 3, corner};
    if (!sub.contains(vacancy) || !sub.contains(finish)) continue;
    auto inner = solve_pair_impl(n - 3, vacancy - corner, finish - corner, true);
    if (!inner) continue;
    const auto base = shifted(inner->jumps(), corner);
    for (bool mirrored : {false, true}) {
      auto purges = plan_three_row_clear(n, {0, 0}, band, mirrored);
      ScheduleTrace t = run_schedule(Position::with_vacancy(n, vacancy), purges, base);
      if (t.stalled) continue;
      Solution s = make_solution(n, t.jumps);
      if (replay(s).ok && s.finish == finish) return s;
    }
  }
  return std::nullopt;
}

// Vacancy in the bottom three rows and finish above them.
std::optional<Solution> solve_from_edge(int n, Hole vacancy, Hole finish) {
  if (vacancy.y < n - 3 || finish.y >= n - 3) return std::nullopt;
  for (int k = 0; k <= n - 5; ++k) {
    auto plan = edge_row_purge(n, vacancy, k);
    if (!plan) continue;
    ScheduleTrace t = run_schedule(Position::with_vacancy(n, vacancy), plan->purges, {});
    if (t.stalled) continue;
    auto inner = solve_pair_impl(n - 3, plan->new_vacancy, finish, true);
    if (!inner) continue;
    std::vector<Jump> jumps = t.jumps;
    const auto rest = inner->jumps();
    jumps.insert(jumps.end(), rest.begin(), rest.end());
    Solution s = make_solution(n, jumps);
    if (replay(s).ok) return s;
  }
  return std::nullopt;
}

std::optional<Solution> solve_pair_impl(int n, Hole vacancy, Hole finish, bool allow_reverse) {
  if (n <= 8) {
    if (n >= 6)
      if (auto s = base_library().find_pair(n, vacancy, finish)) return s;
    return find_solution(n, vacancy, finish);
  }
  if (auto s = solve_in_corner(n, vacancy, finish)) return s;
  for (Transform t : kAllTransforms) {
    const Hole v = apply(t, vacancy, n), f = apply(t, finish, n);
    if (auto s = solve_from_edge(n, v, f)) return transformed(inverse(t), *s);
  }
  if (allow_reverse)
    if (auto s = solve_pair_impl(n, finish, vacancy, false)) return reverse_solution(*s);
  return std::nullopt;
}

}  // namespace

Solution solve_pair(int n, Hole vacancy, Hole finish) {
  if (!is_feasible_pair(n, vacancy, finish))
    throw EngineError(ErrorKind::kInfeasible,
                      "pair " + to_alpha(vacancy) + " -> " + to_alpha(finish) + " is not feasible");
  if (auto s = solve_pair_impl(n, vacancy, finish, true)) return *s;
  throw EngineError(ErrorKind::kInternal, "no construction for T" + std::to_string(n) + " " +
                                              to_alpha(vacancy) + " -> " + to_alpha(finish));
}

void BaseLibrary::add(const Solution& s) { entries_[{s.n, s.vacancy, s.finish}] = s; }

std::optional<Solution> BaseLibrary::find_pair(int n, Hole vacancy, Hole finish) const {
  for (Transform g : kAllTransforms) {
    const Hole v = apply(g, vacancy, n), f = apply(g, finish, n);
    if (auto it = entries_.find({n, v, f}); it != entries_.end())
      return transformed(inverse(g), it->second);
    if (auto it = entries_.find({n, f, v}); it != entries_.end())
      return transformed(inverse(g), reverse_solution(it->second));
  }
  return std::nullopt;
}

std::optional<Solution> BaseLibrary::find_vacancy(int n, Hole vacancy) const {
  for (Transform g : kAllTransforms) {
    const Hole v = apply(g, vacancy, n);
    auto it = entries_.lower_bound({n, v, Hole{-1, -1}});
    if (it != entries_.end() && std::get<0>(it->first) == n && std::get<1>(it->first) == v)
      return transformed(inverse(g), it->second);
  }
  return std::nullopt;
}

std::size_t BaseLibrary::size(int n) const {
  std::size_t c = 0;
  for (const auto& [key, s] : entries_) c += std::get<0>(key) == n;
  return c;
}

BaseLibrary parse_base_library(std::istream& in) {
  BaseLibrary lib;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& what) {
      throw EngineError(ErrorKind::kInvalidArgument,
                        "base library line " + std::to_string(line_no) + ": " + what);
    };
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string part; std::getline(ss, part, ';');) f.push_back(part);
    if (f.size() != 4) fail("expected n;vacancy;finish;solution");
    try {
      const int n = std::stoi(f[0]);
      Solution s = parse_solution(n, f[3]);
      if (s.vacancy != from_alpha(f[1]) || s.finish != from_alpha(f[2]))
        fail("solution does not match its vacancy and finish");
      const ReplayReport r = replay(s);
      if (!r.ok) fail(r.message);
      lib.add(s);
    } catch (const EngineError& e) {
      if (std::string_view(e.what()).starts_with("base library")) throw;
      fail(e.what());
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  return lib;
}

BaseLibrary load_base_library(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EngineError(ErrorKind::kInvalidArgument, "cannot open " + path);
  return parse_base_library(in);
}

BaseLibrary generate_base_library(const std::vector<int>& sides) {
  BaseLibrary lib;
  for (int n : sides) {
    for (const HolePair& p : distinct_feasible_pairs(n)) {
      // A stored reversed pair gives this one for free.
      std::optional<Solution> s = lib.find_pair(n, p.first, p.second);
      if (!s) s = find_solution(n, p.first, p.second);
      if (!s)
        throw EngineError(ErrorKind::kInternal, "T" + std::to_string(n) + " " +
                                                    to_alpha(p.first) + " -> " +
                                                    to_alpha(p.second) + " has no solution");
      lib.add(*s);
    }
  }
  return lib;
}

void write_base_library(const BaseLibrary& lib, std::ostream& out) {
  out << "# n;vacancy;finish;solution\n";
  for (const auto& [key, s] : lib.entries())
    out << s.n << ';' << to_alpha(s.vacancy) << ';' << to_alpha(s.finish) << ';'
        << emit_solution(s) << '\n';
}

const BaseLibrary& base_library() {
  static const BaseLibrary lib = [] {
    if (const char* path = std::getenv("TRISOLVE_CACHE"); path && *path)
      return load_base_library(path);
    std::istringstream in(kEmbeddedBaseLibrary);
    return parse_base_library(in);
  }();
  return lib;
}

}  // namespace trisolve
