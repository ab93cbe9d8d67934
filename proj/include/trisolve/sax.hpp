#pragma once

// The SAX pagoda count on T5, its F-E reformulation, and the rule-of-thumb
// jump taxonomy. Every function here requires a T5 position.

#include "trisolve/board.hpp"

namespace trisolve {

struct SaxBreakdown {
  int s = 0;  // edge regions holding two or more pegs
  int a = 0;  // pegs on +1 holes
  int x = 0;  // pegs on -1 holes
  int total() const { return s + a - x; }
};

struct FeBreakdown {
  int f = 0;  // fodder pegs
  int e = 0;  // exits still required
  int total() const { return f - e; }
};

enum class JumpCategory { kIntoCorner, kOutOfInterior, kEdgeToEdge, kIntoInterior, kOther };

const char* category_name(JumpCategory c);

// -1 on corners and edge midpoints, +1 on the three interior holes, 0 elsewhere.
int sax_weight(Hole h);

SaxBreakdown sax_count(const Position& p);
int jump_sax_delta(const Position& p, const Jump& j);
JumpCategory classify_jump(const Position& p, const Jump& j);
FeBreakdown fe_count(const Position& p);

// Both require a feasible (vacancy, finish) pair on T5.
int slack(Hole vacancy, Hole finish);
int effective_slack(Hole vacancy, Hole finish);

}  // namespace trisolve
