#pragma once

// Fast solutions for large boards: a small base solution on a sub-board,
// interleaved with purges that clear the rest of the board.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "trisolve/board.hpp"
#include "trisolve/purge.hpp"

namespace trisolve {

// An upright sub-triangle of T_n: holes (x, y) with
// top.x <= x, y <= top.y + side - 1 and x - top.x <= y - top.y.
struct SubBoard {
  int side = 0;
  Hole top;

  bool contains(Hole h) const {
    const Hole d = h - top;
    return 0 <= d.x && d.x <= d.y && d.y < side;
  }
  friend bool operator==(const SubBoard&, const SubBoard&) = default;
};

// T4, T5 or T6 congruent to n mod 3 with its top corner on the lattice of
// multiples of 3, holding the vacancy. Ties go to the smallest top corner.
// Throws kInfeasible for infeasible vacancies and kInvalidArgument for n < 4.
SubBoard choose_subboard(int n, Hole vacancy);
std::vector<SubBoard> subboard_candidates(int n, Hole vacancy, int side);

enum class GrowStep { kBottom, kRight, kLeft };

struct SolvePlan {
  int n = 0;
  SubBoard sub;
  std::vector<GrowStep> steps;
  std::vector<bool> mirrored;         // one per step
  std::vector<Jump> base;             // board coordinates
  std::vector<PurgeInstance> purges;  // in scan order
};

struct ScheduleTrace {
  std::vector<Jump> jumps;
  std::vector<int> source;  // purge index, or -1 for the base solution
  bool stalled = false;
  std::string stall_reason;
};

// The interleaving rule. Before every jump: (1) start the first unstarted
// purge whose catalyst is unlike and whose script's first jump is legal;
// (2) otherwise continue the most recently started unfinished purge whose
// next jump is legal; (3) otherwise play the next base jump. Stops at one
// peg, or when purges and base are both exhausted.
ScheduleTrace run_schedule(Position start, std::vector<PurgeInstance>& purges,
                           const std::vector<Jump>& base);

// A base solution on T_m (4 <= m <= 8) from `vacancy`, finishing anywhere.
Solution base_solution(int m, Hole vacancy);

SolvePlan make_plan(int n, Hole vacancy, const SubBoard& sub, const std::vector<GrowStep>& steps,
                    const std::vector<bool>& mirrored);

// Throws kInfeasible for infeasible vacancies and kInternal if every plan
// variant stalls.
Solution solve_vacancy(int n, Hole vacancy);
Solution solve_pair(int n, Hole vacancy, Hole finish);

class BaseLibrary {
 public:
  void add(const Solution& s);
  // Looks up every symmetric image, and the reversed problem.
  std::optional<Solution> find_pair(int n, Hole vacancy, Hole finish) const;
  std::optional<Solution> find_vacancy(int n, Hole vacancy) const;
  std::size_t size(int n) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::tuple<int, Hole, Hole>, Solution>& entries() const { return entries_; }

 private:
  std::map<std::tuple<int, Hole, Hole>, Solution> entries_;
};

// Records are `n;vacancy;finish;solution-text`. Every record is replayed;
// bad records throw kInvalidArgument naming the line.
BaseLibrary parse_base_library(std::istream& in);
BaseLibrary load_base_library(const std::string& path);
// Solves one pair per orbit for each n in `sides` by search.
BaseLibrary generate_base_library(const std::vector<int>& sides = {6, 7, 8});
void write_base_library(const BaseLibrary& lib, std::ostream& out);

// The embedded library, or the file named by TRISOLVE_CACHE when set.
const BaseLibrary& base_library();

}  // namespace trisolve
