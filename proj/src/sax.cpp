#include "trisolve/sax.hpp"

#include <algorithm>
#include <array>

#include "trisolve/classification.hpp"
#include "trisolve/error.hpp"
#include "trisolve/notation.hpp"

namespace trisolve {

namespace {

constexpr int kSide = 5;

constexpr std::array<Hole, 3> kCorners = {Hole{0, 0}, Hole{0, 4}, Hole{4, 4}};
constexpr std::array<Hole, 3> kInterior = {Hole{1, 2}, Hole{1, 3}, Hole{2, 3}};
constexpr std::array<Hole, 3> kMidpoints = {Hole{0, 2}, Hole{2, 2}, Hole{2, 4}};

// {a2,a3,a4}, {b2,c3,d4}, {b5,c5,d5}
constexpr std::array<std::array<Hole, 3>, 3> kEdgeRegions = {{
    {Hole{0, 1}, Hole{0, 2}, Hole{0, 3}},
    {Hole{1, 1}, Hole{2, 2}, Hole{3, 3}},
    {Hole{1, 4}, Hole{2, 4}, Hole{3, 4}},
}};

// a2 b2 b3 a4 b4 c4 d4 b5 d5
constexpr std::array<Hole, 9> kFodder = {Hole{0, 1}, Hole{1, 1}, Hole{1, 2}, Hole{0, 3}, Hole{1, 3},
                                         Hole{2, 3}, Hole{3, 3}, Hole{1, 4}, Hole{3, 4}};

template <std::size_t N>
bool contains(const std::array<Hole, N>& set, Hole h) {
  return std::find(set.begin(), set.end(), h) != set.end();
}

bool on_boundary(Hole h) { return h.x == 0 || h.x == h.y || h.y == kSide - 1; }

void require_t5(const Position& p) {
  if (p.side() != kSide) throw EngineError(ErrorKind::kInvalidArgument, "SAX needs a T5 position");
}

void require_legal(const Position& p, const Jump& j) {
  require_t5(p);
  if (!on_board(j.from, kSide) || !on_board(j.to, kSide) || !is_legal(p, j))
    throw EngineError(ErrorKind::kIllegal, "jump " + to_alpha(j.from) + "-" + to_alpha(j.to) +
                                               " is not legal here");
}

void require_pair(Hole vacancy, Hole finish) {
  if (!is_feasible_pair(kSide, vacancy, finish))
    throw EngineError(ErrorKind::kInfeasible, "pair " + to_alpha(vacancy) + " -> " +
                                                  to_alpha(finish) + " is not feasible on T5");
}

}  // namespace

const char* category_name(JumpCategory c) {
  switch (c) {
    case JumpCategory::kIntoCorner: return "INTO_CORNER";
    case JumpCategory::kOutOfInterior: return "OUT_OF_INTERIOR";
    case JumpCategory::kEdgeToEdge: return "EDGE_TO_EDGE";
    case JumpCategory::kIntoInterior: return "INTO_INTERIOR";
    case JumpCategory::kOther: return "OTHER";
  }
  return "?";
}

int sax_weight(Hole h) {
  if (contains(kInterior, h)) return 1;
  if (contains(kCorners, h) || contains(kMidpoints, h)) return -1;
  return 0;
}

SaxBreakdown sax_count(const Position& p) {
  require_t5(p);
  SaxBreakdown b;
  for (Hole h : p.pegs()) {
    const int w = sax_weight(h);
    if (w > 0) ++b.a;
    if (w < 0) ++b.x;
  }
  for (const auto& region : kEdgeRegions) {
    int pegs = 0;
    for (Hole h : region) pegs += p.has(h);
    if (pegs >= 2) ++b.s;
  }
  return b;
}

int jump_sax_delta(const Position& p, const Jump& j) {
  require_legal(p, j);
  return sax_count(apply_jump(p, j)).total() - sax_count(p).total();
}

JumpCategory classify_jump(const Position& p, const Jump& j) {
  require_legal(p, j);
  if (contains(kCorners, j.to)) return JumpCategory::kIntoCorner;
  if (contains(kInterior, j.from)) return JumpCategory::kOutOfInterior;
  if (contains(kInterior, j.over) && on_boundary(j.from) && on_boundary(j.to))
    return JumpCategory::kEdgeToEdge;
  if (contains(kInterior, j.to)) return JumpCategory::kIntoInterior;
  return JumpCategory::kOther;
}

FeBreakdown fe_count(const Position& p) {
  require_t5(p);
  FeBreakdown b;
  for (Hole h : kFodder) b.f += p.has(h);
  for (Hole h : kCorners) b.e += p.has(h);
  for (const auto& region : kEdgeRegions) {
    int pegs = 0;
    for (Hole h : region) pegs += p.has(h);
    b.e += pegs == 3 ? 2 : (pegs > 0 ? 1 : 0);
  }
  return b;
}

int slack(Hole vacancy, Hole finish) {
  require_pair(vacancy, finish);
  return sax_count(Position::with_vacancy(kSide, vacancy)).total() -
         sax_count(Position::single_peg(kSide, finish)).total();
}

int effective_slack(Hole vacancy, Hole finish) {
  int s = slack(vacancy, finish);
  if (contains(kCorners, vacancy)) --s;
  if (contains(kCorners, finish)) --s;
  return s;
}

}  // namespace trisolve
