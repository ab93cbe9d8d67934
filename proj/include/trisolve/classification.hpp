#pragma once

// Position classes, the feasibility conditions for one-vacancy problems,
// counts of geometrically distinct problems, and move-count bounds.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisolve/board.hpp"

namespace trisolve {

enum class PositionClass { kEmpty, kPeg0, kPeg1, kPeg2 };

const char* class_name(PositionClass c);

// Parities of (c1+c2, c0+c2, c0+c1) where c_i counts pegs on holes of label i.
struct ClassSignature {
  std::array<int, 3> parity{};

  PositionClass value() const;
  friend bool operator==(const ClassSignature&, const ClassSignature&) = default;
};

int hole_class(Hole h);  // (x + y) mod 3
ClassSignature position_class(const Position& p);

struct Problem {
  int n = 0;
  Hole vacancy;
  std::optional<Hole> finish;
};

// Both throw EngineError(kInvalidArgument) for n < 4 or off-board holes.
bool is_feasible_vacancy(int n, Hole vacancy);
bool is_feasible_pair(int n, Hole vacancy, Hole finish);
// The same parity test with no lower limit on n.
bool pair_parity_ok(int n, Hole vacancy, Hole finish);

using HolePair = std::pair<Hole, Hole>;

// Lexicographically smallest image of (vacancy, finish) under the group.
HolePair canonical_pair(int n, HolePair p);
// One representative per orbit of feasible (vacancy, finish) pairs.
std::vector<HolePair> distinct_feasible_pairs(int n);
// One representative per orbit of feasible vacancies (n >= 4).
std::vector<Hole> distinct_feasible_vacancies(int n);
std::int64_t feasible_pair_count_formula(int n);

int lower_bound_moves(int n);
std::optional<int> upper_bound_moves(int n);

// Disjoint regions that each need a move originating inside them whenever
// they are full: the corners, pairs of adjacent edge holes, and 7-hole
// hexagons packed into the interior.
std::vector<std::vector<Hole>> merson_regions(int n);

struct ParityInvariant {
  std::vector<Hole> holes;
  Jump breaking_jump;  // the one jump line (either sense) that flips it
};

// Hole sets of T4 whose peg-count parity is kept by every jump except those
// along one line, one minimal set per such line.
std::vector<ParityInvariant> derive_t4_parity_invariants();

}  // namespace trisolve
