// Command-line front end for the engine.
// Exit codes: 0 success, 1 infeasible or unsolvable, 2 usage error, 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "trisolve/classification.hpp"
#include "trisolve/constructive.hpp"
#include "trisolve/error.hpp"
#include "trisolve/notation.hpp"
#include "trisolve/sax.hpp"
#include "trisolve/search.hpp"
#include "trisolve/service.hpp"

using namespace trisolve;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUnsolvable = 1, kUsage = 2, kBudget = 3 };

struct Output {
  bool as_json = false;
  json doc = json::object();
  std::string text;

  void line(const std::string& s) { text += s + "\n"; }
  int finish(int code) const {
    if (as_json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text;
    return code;
  }
};

struct Failure {
  int code;
  std::string message;
};

Hole board_hole(const std::string& name, int n) {
  const Hole h = from_alpha(name);
  if (!on_board(h, n)) throw Failure{kUsage, name + " is not on T" + std::to_string(n)};
  return h;
}

json holes_json(const std::vector<Hole>& hs) {
  json out = json::array();
  for (Hole h : hs) out.push_back(to_alpha(h));
  return out;
}

std::string join(const std::vector<Hole>& hs) {
  std::string s;
  for (Hole h : hs) s += (s.empty() ? "" : " ") + to_alpha(h);
  return s;
}

std::vector<Hole> feasible_finishes(int n, Hole v) {
  std::vector<Hole> out;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x <= y; ++x)
      if (is_feasible_pair(n, v, {x, y})) out.push_back({x, y});
  return out;
}

void require_side(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw Failure{kUsage, std::string(what) + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi)};
}

int classify(Output& out, int n, const std::string& vacancy) {
  require_side(n, 4, kMaxSide, "classify");
  const Hole v = board_hole(vacancy, n);
  const PositionClass c = position_class(Position::with_vacancy(n, v)).value();
  const bool feasible = is_feasible_vacancy(n, v);
  const std::vector<Hole> finishes = feasible_finishes(n, v);
  out.doc = {{"n", n},
             {"vacancy", to_alpha(v)},
             {"hole_class", hole_class(v)},
             {"position_class", class_name(c)},
             {"feasible", feasible},
             {"feasible_finishes", holes_json(finishes)}};
  out.line("T" + std::to_string(n) + " vacancy " + to_alpha(v) + ": hole class " +
           std::to_string(hole_class(v)) + ", position class " + class_name(c));
  if (feasible)
    out.line("feasible finishes: " + join(finishes));
  else
    out.line("infeasible: no single-peg finish satisfies the class conditions");
  return feasible ? kOk : kUnsolvable;
}

int feasible(Output& out, int n, bool pairs) {
  require_side(n, 4, kMaxSide, "feasible");
  out.doc = {{"n", n}};
  if (pairs) {
    const auto ps = distinct_feasible_pairs(n);
    json list = json::array();
    for (const auto& [v, f] : ps) list.push_back({to_alpha(v), to_alpha(f)});
    out.doc["pair_count"] = ps.size();
    out.doc["pair_count_formula"] = feasible_pair_count_formula(n);
    out.doc["pairs"] = list;
    out.line(std::to_string(ps.size()) + " distinct feasible pairs on T" + std::to_string(n));
    for (const auto& [v, f] : ps) out.line("  " + to_alpha(v) + " -> " + to_alpha(f));
  } else {
    const auto vs = distinct_feasible_vacancies(n);
    out.doc["vacancy_count"] = vs.size();
    out.doc["vacancies"] = holes_json(vs);
    out.line(std::to_string(vs.size()) + " distinct feasible vacancies on T" + std::to_string(n) + ": " +
             join(vs));
  }
  return kOk;
}

void solution_doc(Output& out, const Solution& s) {
  out.doc = {{"n", s.n},
             {"vacancy", to_alpha(s.vacancy)},
             {"finish", to_alpha(s.finish)},
             {"solution", emit_solution(s)},
             {"move_count", s.moves.size()},
             {"jump_count", s.jump_count()}};
}

int solve(Output& out, int n, const std::string& vacancy, const std::optional<std::string>& finish) {
  require_side(n, 4, kMaxSide, "solve");
  const Hole v = board_hole(vacancy, n);
  const Solution s = finish ? solve_pair(n, v, board_hole(*finish, n)) : solve_vacancy(n, v);
  solution_doc(out, s);
  out.line(emit_solution(s));
  out.line(std::to_string(s.moves.size()) + " moves, " + std::to_string(s.jump_count()) +
           " jumps, finishing at " + to_alpha(s.finish));
  return kOk;
}

int shortest(Output& out, int n, const std::optional<std::string>& vacancy,
             const std::optional<std::string>& finish, const SearchBudget& budget) {
  require_side(n, 4, 10, "shortest");
  std::optional<Hole> v, f;
  if (vacancy) v = board_hole(*vacancy, n);
  if (finish) f = board_hole(*finish, n);
  const ShortestResult r = shortest_solution(n, v, f, budget);
  out.doc = {{"n", n},
             {"vacancy", vacancy ? json(*vacancy) : json(nullptr)},
             {"finish", finish ? json(*finish) : json(nullptr)},
             {"found", r.found},
             {"proved_minimal", r.proved_minimal},
             {"proved_lower", r.proved_lower},
             {"unsolvable", r.unsolvable},
             {"moves", r.found ? json(r.moves) : json(nullptr)},
             {"solution", r.found ? json(emit_solution(r.witness)) : json(nullptr)}};
  if (r.found) {
    out.line(emit_solution(r.witness));
    out.line(std::to_string(r.moves) + " moves" + (r.proved_minimal ? " (proved minimal)" : ""));
  }
  if (r.unsolvable) {
    out.line("unsolvable: the search space holds no solution");
    return kUnsolvable;
  }
  if (!r.found || !r.proved_minimal) {
    out.line("budget exhausted; no solution has fewer than " + std::to_string(r.proved_lower) + " moves");
    return kBudget;
  }
  return kOk;
}

int count(Output& out, int n, const std::string& vacancy, const std::string& finish) {
  require_side(n, 4, 6, "count");
  const Hole v = board_hole(vacancy, n), f = board_hole(finish, n);
  const std::uint64_t c = count_solutions(n, v, f);
  const int classes = solution_equivalence_classes(n, v, f);
  out.doc = {{"n", n}, {"vacancy", to_alpha(v)}, {"finish", to_alpha(f)}, {"solutions", c}, {"classes", classes}};
  out.line(std::to_string(c) + " solutions in " + std::to_string(classes) + " equivalence classes");
  return c ? kOk : kUnsolvable;
}

int odds(Output& out, int n, const std::string& vacancy, const std::string& player) {
  require_side(n, 5, 5, "odds");
  const Hole v = board_hole(vacancy, n);
  Player p;
  try {
    p = parse_player(player);
  } catch (const EngineError& e) {
    throw Failure{kUsage, e.what()};
  }
  const OddsResult r = player_odds(v, p);
  out.doc = {{"n", n},
             {"vacancy", to_alpha(v)},
             {"player", player},
             {"probability", r.probability.get_str()},
             {"odds", r.odds_rounded}};
  out.line("1 in " + std::to_string(r.odds_rounded) + " (probability " + r.probability.get_str() + ")");
  return kOk;
}

int sax(Output& out, int n, const std::string& position) {
  require_side(n, 5, 5, "sax");
  Position p(n);
  for (Hole h : parse_hole_list(position)) {
    if (!on_board(h, n)) throw Failure{kUsage, to_alpha(h) + " is not on T5"};
    p.set(h);
  }
  const SaxBreakdown s = sax_count(p);
  const FeBreakdown fe = fe_count(p);
  json jumps = json::array();
  out.line("SAX " + std::to_string(s.total()) + " (S " + std::to_string(s.s) + ", A " + std::to_string(s.a) +
           ", X " + std::to_string(s.x) + "), F-E " + std::to_string(fe.total()));
  for (const Jump& j : legal_jumps(p)) {
    const int d = jump_sax_delta(p, j);
    const char* cat = category_name(classify_jump(p, j));
    jumps.push_back({{"jump", to_alpha(j.from) + "-" + to_alpha(j.to)}, {"sax_delta", d}, {"category", cat}});
    out.line("  " + to_alpha(j.from) + "-" + to_alpha(j.to) + "  " + std::to_string(d) + "  " + cat);
  }
  out.doc = {{"occupied", holes_json(p.pegs())},
             {"peg_count", p.peg_count()},
             {"sax", {{"s", s.s}, {"a", s.a}, {"x", s.x}, {"total", s.total()}}},
             {"fe", {{"f", fe.f}, {"e", fe.e}, {"total", fe.total()}}},
             {"legal_jumps", jumps}};
  return kOk;
}

int replay_cmd(Output& out, int n, const std::string& text) {
  require_side(n, 1, kMaxSide, "replay");
  const Solution s = parse_solution(n, text);
  const ReplayReport r = replay(s);
  out.doc = {{"n", n},
             {"ok", r.ok},
             {"move_count", s.moves.size()},
             {"jump_count", s.jump_count()},
             {"vacancy", to_alpha(s.vacancy)},
             {"finish", to_alpha(s.finish)},
             {"failed_move", r.ok ? json(nullptr) : json(r.failed_move)},
             {"message", r.message}};
  if (r.ok)
    out.line("ok: " + std::to_string(s.moves.size()) + " moves from " + to_alpha(s.vacancy) + " to " +
             to_alpha(s.finish));
  else
    out.line("failed at move index " + std::to_string(r.failed_move) + ": " + r.message);
  return r.ok ? kOk : kUnsolvable;
}

int bounds(Output& out, int n) {
  require_side(n, 4, kMaxSide, "bounds");
  const int lo = lower_bound_moves(n);
  const std::optional<int> hi = upper_bound_moves(n);
  out.doc = {{"n", n}, {"lower", lo}, {"upper", hi ? json(*hi) : json(nullptr)}};
  out.line("T" + std::to_string(n) + ": at least " + std::to_string(lo) + " moves" +
           (hi ? ", at most " + std::to_string(*hi) : std::string()));
  return kOk;
}

int gen_cache(Output& out, const std::string& path) {
  const BaseLibrary lib = generate_base_library();
  std::ofstream file(path);
  if (!file) throw Failure{kUsage, "cannot write " + path};
  write_base_library(lib, file);
  out.doc = {{"path", path}, {"entries", lib.size()}};
  out.line("wrote " + std::to_string(lib.size()) + " solutions to " + path);
  return kOk;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::kInvalidArgument: return kUsage;
    case ErrorKind::kBudgetExceeded: return kBudget;
    default: return kUnsolvable;
  }
}

int fail(bool as_json, const Failure& f) {
  if (as_json)
    std::cout << json{{"error", f.message}}.dump(2) << "\n";
  else
    std::cerr << "error: " << f.message << "\n";
  return f.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular peg solitaire engine"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print JSON instead of text");

  int n = 5;
  std::string vacancy, finish_name, player, position, text, path, host = "127.0.0.1";
  std::optional<std::string> finish, opt_vacancy, cache;
  bool pairs = false;
  int port = 8080;
  SearchBudget budget;

  auto side = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--n", n, "Board side");
    if (required) o->required();
  };

  auto* c_classify = app.add_subcommand("classify", "Class and feasibility of a vacancy");
  side(c_classify);
  c_classify->add_option("--vacancy", vacancy)->required();

  auto* c_feasible = app.add_subcommand("feasible", "Distinct feasible vacancies or pairs");
  side(c_feasible);
  c_feasible->add_flag("--pairs", pairs);

  auto* c_solve = app.add_subcommand("solve", "Constructive solution");
  side(c_solve);
  c_solve->add_option("--vacancy", vacancy)->required();
  c_solve->add_option("--finish", finish);

  auto* c_shortest = app.add_subcommand("shortest", "Minimal-move solution");
  side(c_shortest);
  c_shortest->add_option("--vacancy", opt_vacancy);
  c_shortest->add_option("--finish", finish);
  c_shortest->add_option("--max-moves", budget.max_moves);
  c_shortest->add_option("--budget", budget.node_limit, "Node limit");
  c_shortest->add_option("--time-limit", budget.time_limit_s, "Seconds");

  auto* c_count = app.add_subcommand("count", "Count solutions");
  side(c_count);
  c_count->add_option("--vacancy", vacancy)->required();
  c_count->add_option("--finish", finish_name)->required();

  auto* c_odds = app.add_subcommand("odds", "Exact odds for a random player on T5");
  side(c_odds);
  c_odds->add_option("--vacancy", vacancy)->required();
  c_odds->add_option("--player", player)->required();

  auto* c_sax = app.add_subcommand("sax", "SAX and F-E counts of a T5 position");
  side(c_sax, false);
  c_sax->add_option("--position", position, "Occupied holes, e.g. \"a1 b2 c3\"")->required();

  auto* c_replay = app.add_subcommand("replay", "Check a solution");
  side(c_replay);
  c_replay->add_option("--solution", text)->required();

  auto* c_bounds = app.add_subcommand("bounds", "Move-count bounds");
  side(c_bounds);

  auto* c_gen = app.add_subcommand("gen-cache", "Regenerate the base solution library");
  c_gen->add_option("--out", path)->required();

  auto* c_serve = app.add_subcommand("serve", "Run the JSON service");
  c_serve->add_option("--port", port);
  c_serve->add_option("--host", host);
  c_serve->add_option("--cache", cache, "Base library file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Output out;
  out.as_json = as_json;
  try {
    int code = kOk;
    if (*c_classify) code = classify(out, n, vacancy);
    else if (*c_feasible) code = feasible(out, n, pairs);
    else if (*c_solve) code = solve(out, n, vacancy, finish);
    else if (*c_shortest) code = shortest(out, n, opt_vacancy, finish, budget);
    else if (*c_count) code = count(out, n, vacancy, finish_name);
    else if (*c_odds) code = odds(out, n, vacancy, player);
    else if (*c_sax) code = sax(out, n, position);
    else if (*c_replay) code = replay_cmd(out, n, text);
    else if (*c_bounds) code = bounds(out, n);
    else if (*c_gen) code = gen_cache(out, path);
    else if (*c_serve) {
      if (cache) setenv("TRISOLVE_CACHE", cache->c_str(), 1);
      base_library();
      std::cerr << "listening on " << host << ":" << port << "\n";
      run_server(host, port);
      return kOk;
    }
    return out.finish(code);
  } catch (const Failure& f) {
    return fail(as_json, f);
  } catch (const EngineError& e) {
    return fail(as_json, {exit_code(e.kind()), e.what()});
  }
}
