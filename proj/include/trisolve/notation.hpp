#pragma once

// Alphanumeric hole names and the chained solution notation,
// e.g. "a4-a2, a1-a3, c4-a4-a2".

#include <string>
#include <string_view>
#include <vector>

#include "trisolve/board.hpp"

namespace trisolve {

// (6,9) <-> "g10". Column letter is the skew x, the number is y + 1.
std::string to_alpha(Hole h);
Hole from_alpha(std::string_view text);

// Each move is written as two or more holes joined by '-', moves separated
// by commas. Throws EngineError(kInvalidArgument) with the character offset
// on syntax errors and kIllegal when consecutive holes are not a jump apart.
std::vector<Move> parse_moves(std::string_view text);
std::string format_moves(const std::vector<Move>& moves);
std::string format_move(const Move& m);
std::string format_jumps(const std::vector<Jump>& jumps);  // one jump per entry

// A full solution on T_n. The vacancy is where the first jump lands and the
// finish is where the last jump lands; replay() decides validity.
Solution parse_solution(int n, std::string_view text);
std::string emit_solution(const Solution& s);

// Canonical spelling: lowercase, ", " between moves, no trailing separators.
std::string normalize_notation(std::string_view text);

std::vector<Hole> parse_hole_list(std::string_view text);  // "a1 b2,c3"
std::string format_hole_list(const std::vector<Hole>& holes);

}  // namespace trisolve
