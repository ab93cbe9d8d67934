#pragma once

// Exhaustive and heuristic search on small boards: solvability, counting,
// reachability, exact odds for random players, and minimal-move search.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trisolve/board.hpp"

namespace trisolve {

struct SearchBudget {
  int max_moves = 0;             // 0: no limit
  std::uint64_t node_limit = 0;  // 0: no limit
  double time_limit_s = 0;       // 0: no limit
};

// True if some jump sequence from the one-vacancy start leaves one peg (at
// `finish` when given). n <= 7.
bool brute_force_solvable(int n, Hole vacancy, std::optional<Hole> finish = std::nullopt,
                          const SearchBudget& budget = {});

// One solution of any length, found by depth-first search with a table of
// dead positions. n <= 10; throws kBudgetExceeded when the budget runs out.
std::optional<Solution> find_solution(int n, Hole vacancy, std::optional<Hole> finish,
                                      const SearchBudget& budget = {});

// Jumps from an arbitrary position down to one peg (at `finish` when
// given), or nullopt if there are none. n <= 10.
std::optional<std::vector<Jump>> solve_position(const Position& p, std::optional<Hole> finish,
                                                const SearchBudget& budget = {});

// Number of distinct jump sequences solving the problem. n <= 6.
std::uint64_t count_solutions(int n, Hole vacancy, Hole finish);
// Solutions grouped by the multiset of lines their jumps use (a jump and its
// reverse count as the same line). A solution and its mirror image under a
// reflection fixing both ends share a class. n <= 6.
int solution_equivalence_classes(int n, Hole vacancy, Hole finish);

using JumpFilter = std::function<bool(const Jump&)>;

// Distinct positions reachable from the one-vacancy start, the start
// included, using only jumps accepted by `allowed` (all when empty).
std::uint64_t reachable_count(int n, Hole vacancy, const JumpFilter& allowed = {});
// Jumps over b3 restricted to a2-c4 and c4-a2.
JumpFilter b3_only_a2_c4();

enum class Player { kA, kB, kC };

Player parse_player(const std::string& name);

struct OddsResult {
  mpq_class probability;     // of ending with one peg
  mpq_class terminal_total;  // probability mass over all terminal positions
  std::int64_t odds_rounded = 0;  // N in "1 in N"
};

// Exact odds on T5 for a player choosing uniformly among admissible jumps.
OddsResult player_odds(Hole vacancy, Player player);

struct ShortestResult {
  bool found = false;
  int moves = 0;         // valid when found
  Solution witness;      // valid when found
  int proved_lower = 0;  // no solution has fewer moves
  std::uint64_t nodes = 0;
  bool proved_minimal = false;
  bool unsolvable = false;  // the search space ran out with no solution
};

// Minimal number of moves. With no vacancy, every distinct feasible
// vacancy is a root; with no finish, any one-peg end counts. n <= 10.
ShortestResult shortest_solution(int n, std::optional<Hole> vacancy, std::optional<Hole> finish,
                                 const SearchBudget& budget = {});

// Plain iterative deepening over moves with no pruning; reference for tiny
// boards. Returns nullopt when unsolvable.
std::optional<int> min_moves_exhaustive(int n, Hole vacancy, std::optional<Hole> finish);

// Lower bound on the remaining moves from a position: the size of a
// disjoint family of full Merson regions (at least one while more than one
// peg remains). n <= 10.
int merson_heuristic(const Position& p);

}  // namespace trisolve
