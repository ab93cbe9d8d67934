#include "trisolve/search.hpp"

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "bitboard.hpp"
#include "trisolve/classification.hpp"
#include "trisolve/error.hpp"
#include "trisolve/notation.hpp"
#include "trisolve/sax.hpp"

namespace trisolve {

using detail::Geometry;
using detail::JumpBits;
using detail::legal;
using detail::play;

namespace {

class Meter {
 public:
  explicit Meter(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    ++nodes_;
    if (budget_.node_limit && nodes_ > budget_.node_limit)
      throw EngineError(ErrorKind::kBudgetExceeded, "node limit reached");
    if (budget_.time_limit_s > 0 && (nodes_ & 0xfff) == 0 && elapsed() > budget_.time_limit_s)
      throw EngineError(ErrorKind::kBudgetExceeded, "time limit reached");
  }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

void require_side(int n, int max_n) {
  if (n < 2 || n > max_n)
    throw EngineError(ErrorKind::kInvalidArgument,
                      "this search supports sides 2 to " + std::to_string(max_n));
}

void require_hole(int n, Hole h) {
  if (!on_board(h, n)) throw EngineError(ErrorKind::kInvalidArgument, "hole is off the board");
}

std::uint64_t start_bits(int n, Hole vacancy) {
  return Geometry::of(n).full() & ~(1ull << hole_index(vacancy));
}

int pegs(std::uint64_t b) { return __builtin_popcountll(b); }

// Holes the move heuristic looks at: the corners, each edge's holes between
// its corners in order, and every interior hexagon.
struct RegionTables {
  std::uint64_t corners = 0;
  std::vector<std::vector<std::uint64_t>> edges;
  std::vector<std::uint64_t> hexagons;
};

const RegionTables& regions_of(int n) {
  static const auto all = [] {
    std::array<RegionTables, detail::kMaxBitSide + 1> r;
    for (int k = 2; k <= detail::kMaxBitSide; ++k) {
      auto bit = [](Hole h) { return 1ull << hole_index(h); };
      r[k].corners = bit({0, 0}) | bit({0, k - 1}) | bit({k - 1, k - 1});
      std::vector<std::uint64_t> left, bottom, right;
      for (int i = 1; i + 1 < k; ++i) {
        left.push_back(bit({0, i}));
        bottom.push_back(bit({i, k - 1}));
        right.push_back(bit({i, i}));
      }
      r[k].edges = {left, bottom, right};
      auto interior = [k](Hole h) { return h.x >= 1 && h.y - h.x >= 1 && h.y <= k - 2; };
      for (int y = 0; y < k; ++y)
        for (int x = 0; x <= y; ++x) {
          const Hole c{x, y};
          bool ok = interior(c);
          std::uint64_t m = bit(c);
          for (Hole d : kDirections) {
            ok = ok && interior(c + d);
            if (ok) m |= bit(c + d);
          }
          if (ok) r[k].hexagons.push_back(m);
        }
    }
    return r;
  }();
  return all[n];
}

// Corner pegs cannot be jumped over and the last peg standing made the last
// jump, so while two or more pegs remain every full region in a disjoint
// family needs its own move. Regions: corners, adjacent edge pairs, and
// interior hexagons (packed greedily).
int heuristic(int n, std::uint64_t b) {
  if (pegs(b) <= 1) return 0;
  const RegionTables& r = regions_of(n);
  int full = pegs(b & r.corners);
  for (const auto& edge : r.edges) {
    int run = 0;
    for (std::uint64_t m : edge) {
      if (b & m) {
        ++run;
      } else {
        full += run / 2;
        run = 0;
      }
    }
    full += run / 2;
  }
  std::uint64_t used = 0;
  for (std::uint64_t m : r.hexagons) {
    if ((b & m) == m && !(used & m)) {
      used |= m;
      ++full;
    }
  }
  return std::max(1, full);
}

Solution to_solution(int n, Hole vacancy, const std::vector<Jump>& jumps) {
  Solution s{n, vacancy, jumps.back().to, group_jumps(jumps)};
  return s;
}

class DeadEndSearch {
 public:
  DeadEndSearch(int n, std::optional<Hole> finish, const SearchBudget& budget)
      : g_(Geometry::of(n)), meter_(budget) {
    if (finish) finish_bit_ = 1ull << hole_index(*finish);
  }

  bool solve(std::uint64_t b) {
    if (pegs(b) == 1) return finish_bit_ == 0 || b == finish_bit_;
    const std::uint64_t key = finish_bit_ ? b : g_.canonical(b);
    if (dead_.contains(key)) return false;
    for (const JumpBits& j : g_.all_jumps()) {
      if (!legal(b, j)) continue;
      meter_.tick();
      path_.push_back(j);
      if (solve(play(b, j))) return true;
      path_.pop_back();
    }
    dead_.insert(key);
    return false;
  }

  std::vector<Jump> path() const {
    std::vector<Jump> out;
    for (const JumpBits& j : path_) out.push_back(g_.to_jump(j));
    return out;
  }

 private:
  const Geometry& g_;
  Meter meter_;
  std::uint64_t finish_bit_ = 0;
  absl::flat_hash_set<std::uint64_t> dead_;
  std::vector<JumpBits> path_;
};

void check_problem(int n, Hole vacancy, std::optional<Hole> finish) {
  require_hole(n, vacancy);
  if (finish) require_hole(n, *finish);
}

}  // namespace

int merson_heuristic(const Position& p) {
  require_side(p.side(), detail::kMaxBitSide);
  return heuristic(p.side(), p.bits64());
}

bool brute_force_solvable(int n, Hole vacancy, std::optional<Hole> finish,
                          const SearchBudget& budget) {
  require_side(n, 7);
  check_problem(n, vacancy, finish);
  DeadEndSearch search(n, finish, budget);
  return search.solve(start_bits(n, vacancy));
}

std::optional<std::vector<Jump>> solve_position(const Position& p, std::optional<Hole> finish,
                                                const SearchBudget& budget) {
  const int n = p.side();
  require_side(n, detail::kMaxBitSide);
  if (finish) require_hole(n, *finish);
  if (p.peg_count() == 0) return std::nullopt;
  DeadEndSearch search(n, finish, budget);
  if (!search.solve(p.bits64())) return std::nullopt;
  return search.path();
}

std::optional<Solution> find_solution(int n, Hole vacancy, std::optional<Hole> finish,
                                      const SearchBudget& budget) {
  require_side(n, detail::kMaxBitSide);
  check_problem(n, vacancy, finish);
  DeadEndSearch search(n, finish, budget);
  if (!search.solve(start_bits(n, vacancy))) return std::nullopt;
  return to_solution(n, vacancy, search.path());
}

std::uint64_t count_solutions(int n, Hole vacancy, Hole finish) {
  require_side(n, 6);
  check_problem(n, vacancy, finish);
  const Geometry& g = Geometry::of(n);
  const std::uint64_t goal = 1ull << hole_index(finish);
  absl::flat_hash_map<std::uint64_t, std::uint64_t> ways;
  auto count = [&](auto& self, std::uint64_t b) -> std::uint64_t {
    if (pegs(b) == 1) return b == goal ? 1 : 0;
    if (auto it = ways.find(b); it != ways.end()) return it->second;
    std::uint64_t total = 0;
    for (const JumpBits& j : g.all_jumps())
      if (legal(b, j)) total += self(self, play(b, j));
    ways[b] = total;
    return total;
  };
  return count(count, start_bits(n, vacancy));
}

int solution_equivalence_classes(int n, Hole vacancy, Hole finish) {
  require_side(n, 6);
  check_problem(n, vacancy, finish);
  const Geometry& g = Geometry::of(n);
  const std::uint64_t goal = 1ull << hole_index(finish);
  std::vector<Transform> fixing;
  for (Transform t : kAllTransforms)
    if (apply(t, vacancy, n) == vacancy && apply(t, finish, n) == finish) fixing.push_back(t);

  // Prune positions that cannot reach the goal before enumerating sequences.
  absl::flat_hash_map<std::uint64_t, bool> alive;
  auto reaches = [&](auto& self, std::uint64_t b) -> bool {
    if (pegs(b) == 1) return b == goal;
    if (auto it = alive.find(b); it != alive.end()) return it->second;
    bool ok = false;
    for (const JumpBits& j : g.all_jumps())
      if (legal(b, j) && self(self, play(b, j))) ok = true;
    alive[b] = ok;
    return ok;
  };

  std::set<std::vector<Jump>> classes;
  std::vector<Jump> stack;
  auto walk = [&](auto& self, std::uint64_t b) -> void {
    if (pegs(b) == 1) {
      std::vector<Jump> best;
      for (Transform t : fixing) {
        std::vector<Jump> image;
        for (const Jump& j : stack) {
          Jump line = transformed(t, j, n);
          if (line.to < line.from) std::swap(line.from, line.to);
          image.push_back(line);
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
      }
      classes.insert(best);
      return;
    }
    for (const JumpBits& j : g.all_jumps()) {
      if (!legal(b, j) || !reaches(reaches, play(b, j))) continue;
      stack.push_back(g.to_jump(j));
      self(self, play(b, j));
      stack.pop_back();
    }
  };
  const std::uint64_t start = start_bits(n, vacancy);
  if (reaches(reaches, start)) walk(walk, start);
  return static_cast<int>(classes.size());
}

std::uint64_t reachable_count(int n, Hole vacancy, const JumpFilter& allowed) {
  require_side(n, detail::kMaxBitSide);
  require_hole(n, vacancy);
  const Geometry& g = Geometry::of(n);
  std::vector<bool> permitted;
  for (const JumpBits& j : g.all_jumps()) permitted.push_back(!allowed || allowed(g.to_jump(j)));
  absl::flat_hash_set<std::uint64_t> seen{start_bits(n, vacancy)};
  std::vector<std::uint64_t> frontier{start_bits(n, vacancy)};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t b : frontier) {
      for (std::size_t k = 0; k < g.all_jumps().size(); ++k) {
        const JumpBits& j = g.all_jumps()[k];
        if (!permitted[k] || !legal(b, j)) continue;
        if (seen.insert(play(b, j)).second) next.push_back(play(b, j));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

JumpFilter b3_only_a2_c4() {
  return [](const Jump& j) {
    if (j.over != Hole{1, 2}) return true;
    const Hole a2{0, 1};
    const Hole c4{2, 3};
    return (j.from == a2 && j.to == c4) || (j.from == c4 && j.to == a2);
  };
}

Player parse_player(const std::string& name) {
  if (name == "A" || name == "a") return Player::kA;
  if (name == "B" || name == "b") return Player::kB;
  if (name == "C" || name == "c") return Player::kC;
  throw EngineError(ErrorKind::kInvalidArgument, "unknown player '" + name + "'");
}

OddsResult player_odds(Hole vacancy, Player player) {
  constexpr int n = 5;
  require_hole(n, vacancy);
  if (!is_feasible_vacancy(n, vacancy))
    throw EngineError(ErrorKind::kInfeasible, "vacancy is not feasible");
  const Geometry& g = Geometry::of(n);
  const std::uint64_t start = start_bits(n, vacancy);
  const int floor_sax = std::min(0, sax_count(Position::from_bits64(n, start)).total());
  const int first = pegs(start);

  auto admissible = [&](std::uint64_t b, const JumpBits& j) {
    if (player == Player::kA) return true;
    const Position p = Position::from_bits64(n, b);
    const Jump jump = g.to_jump(j);
    if (player == Player::kB) {
      const JumpCategory c = classify_jump(p, jump);
      return c != JumpCategory::kIntoCorner && c != JumpCategory::kOutOfInterior;
    }
    return sax_count(apply_jump(p, jump)).total() >= floor_sax;
  };

  OddsResult out;
  std::map<std::uint64_t, mpq_class> layer{{start, 1}};
  while (!layer.empty()) {
    std::map<std::uint64_t, mpq_class> next;
    for (const auto& [b, prob] : layer) {
      const int count = pegs(b);
      if (count == 1) {
        out.probability += prob;
        out.terminal_total += prob;
        continue;
      }
      std::vector<const JumpBits*> all;
      std::vector<const JumpBits*> chosen;
      for (const JumpBits& j : g.all_jumps()) {
        if (!legal(b, j)) continue;
        all.push_back(&j);
        if (admissible(b, j)) chosen.push_back(&j);
      }
      if (count == 2 || (count == first && chosen.empty())) chosen = all;
      if (chosen.empty()) {
        out.terminal_total += prob;
        continue;
      }
      const mpq_class share = prob / static_cast<long>(chosen.size());
      for (const JumpBits* j : chosen) next[play(b, *j)] += share;
    }
    layer = std::move(next);
  }
  if (out.probability > 0) {
    const mpq_class inv = 1 / out.probability + mpq_class(1, 2);
    const mpz_class rounded = inv.get_num() / inv.get_den();
    out.odds_rounded = rounded.get_si();
  }
  return out;
}

std::optional<int> min_moves_exhaustive(int n, Hole vacancy, std::optional<Hole> finish) {
  require_side(n, 6);
  check_problem(n, vacancy, finish);
  const Geometry& g = Geometry::of(n);
  const std::uint64_t goal = finish ? 1ull << hole_index(*finish) : 0;
  absl::flat_hash_set<std::uint64_t> seen{start_bits(n, vacancy)};
  std::vector<std::uint64_t> frontier{start_bits(n, vacancy)};
  for (int depth = 1; !frontier.empty(); ++depth) {
    std::vector<std::uint64_t> next;
    bool done = false;
    for (std::uint64_t b : frontier) {
      detail::for_each_move_child(g, b, [&](std::uint64_t c) {
        if (pegs(c) == 1 && (!goal || c == goal)) done = true;
        if (seen.insert(c).second) next.push_back(c);
      });
    }
    if (done) return depth;
    frontier = std::move(next);
  }
  return std::nullopt;
}

ShortestResult shortest_solution(int n, std::optional<Hole> vacancy, std::optional<Hole> finish,
                                 const SearchBudget& budget) {
  require_side(n, detail::kMaxBitSide);
  if (n < 4) throw EngineError(ErrorKind::kInvalidArgument, "shortest search needs n >= 4");
  if (finish && !vacancy)
    throw EngineError(ErrorKind::kInvalidArgument, "a finishing hole needs a starting vacancy");
  if (vacancy) {
    check_problem(n, *vacancy, finish);
    const bool ok = finish ? is_feasible_pair(n, *vacancy, *finish) : is_feasible_vacancy(n, *vacancy);
    if (!ok) throw EngineError(ErrorKind::kInfeasible, "problem fails the parity condition");
  }

  const Geometry& g = Geometry::of(n);
  const bool symmetric = !finish;
  const std::uint64_t goal = finish ? 1ull << hole_index(*finish) : 0;
  auto key = [&](std::uint64_t b) { return symmetric ? g.canonical(b) : b; };
  auto is_goal = [&](std::uint64_t b) { return pegs(b) == 1 && (!goal || b == goal); };

  std::vector<std::uint64_t> roots;
  if (vacancy) {
    roots.push_back(key(start_bits(n, *vacancy)));
  } else {
    for (Hole v : distinct_feasible_vacancies(n)) roots.push_back(key(start_bits(n, v)));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  ShortestResult result;
  Meter meter(budget);
  int bound = heuristic(n, roots.front());
  for (std::uint64_t r : roots) bound = std::min(bound, heuristic(n, r));
  bound = std::max(1, bound);
  result.proved_lower = bound;

  for (;; ++bound) {
    if (budget.max_moves && bound > budget.max_moves) {
      result.nodes = meter.nodes();
      return result;
    }
    std::vector<std::vector<std::uint64_t>> levels{roots};
    absl::flat_hash_set<std::uint64_t> seen(roots.begin(), roots.end());
    std::optional<std::uint64_t> hit;
    bool pruned = false;
    try {
      for (int depth = 0; depth < bound && !hit; ++depth) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t b : levels[depth]) {
          detail::for_each_move_child(g, b, [&](std::uint64_t c) {
            meter.tick();
            if (hit) return;
            if (is_goal(c)) {
              hit = key(c);
              return;
            }
            if (depth + 1 + heuristic(n, c) > bound) {
              pruned = true;
              return;
            }
            const std::uint64_t k = key(c);
            if (seen.insert(k).second) next.push_back(k);
          });
          if (hit) break;
        }
        levels.push_back(std::move(next));
      }
    } catch (const EngineError& e) {
      if (e.kind() != ErrorKind::kBudgetExceeded) throw;
      result.nodes = meter.nodes();
      return result;
    }
    if (!hit && !pruned && levels.back().empty()) {
      // Nothing was cut off, so the whole tree has been seen.
      result.unsolvable = true;
      result.nodes = meter.nodes();
      return result;
    }
    if (!hit) {
      result.proved_lower = bound + 1;
      continue;
    }

    // Walk back through the levels to a chain of keys from a root.
    const int depth = static_cast<int>(levels.size()) - 1;
    std::vector<std::uint64_t> chain(depth + 1);
    chain[depth] = *hit;
    for (int k = depth - 1; k >= 0; --k) {
      bool linked = false;
      for (std::uint64_t b : levels[k]) {
        detail::for_each_move_child(g, b, [&](std::uint64_t c) {
          if (!linked && key(c) == chain[k + 1] && (k + 1 < depth || is_goal(c))) linked = true;
        });
        if (linked) {
          chain[k] = b;
          break;
        }
      }
      if (!linked) throw EngineError(ErrorKind::kInternal, "lost the path while rebuilding");
    }

    // Replay the chain on real coordinates, one move per step.
    std::uint64_t cur = chain[0];
    std::vector<Move> moves;
    for (int k = 1; k <= depth; ++k) {
      std::vector<JumpBits> stack;
      std::optional<std::vector<JumpBits>> found;
      auto extend = [&](auto& self, std::uint64_t b, int hole) -> void {
        for (const JumpBits& j : g.jumps_from(hole)) {
          if (found || !legal(b, j)) continue;
          const std::uint64_t c = play(b, j);
          stack.push_back(j);
          if (key(c) == chain[k] && (k < depth || is_goal(c))) found = stack;
          self(self, c, j.to_index);
          stack.pop_back();
        }
      };
      for (std::uint64_t rest = cur; rest && !found; rest &= rest - 1)
        extend(extend, cur, __builtin_ctzll(rest));
      if (!found) throw EngineError(ErrorKind::kInternal, "lost the path while replaying");
      Move m;
      for (const JumpBits& j : *found) {
        m.jumps.push_back(g.to_jump(j));
        cur = play(cur, j);
      }
      moves.push_back(std::move(m));
    }
    const Hole root_vacancy = hole_at(__builtin_ctzll(~chain[0] & g.full()));
    Solution witness{n, root_vacancy, moves.back().end(), std::move(moves)};
    if (vacancy && symmetric) {
      const Position user = Position::with_vacancy(n, *vacancy);
      for (Transform t : kAllTransforms) {
        if (user.transformed(t).bits64() == chain[0]) {
          witness = transformed(inverse(t), witness);
          break;
        }
      }
    }
    validate(witness);
    result.found = true;
    result.moves = depth;
    result.witness = std::move(witness);
    result.proved_lower = depth;
    result.proved_minimal = true;
    result.nodes = meter.nodes();
    return result;
  }
}

}  // namespace trisolve
