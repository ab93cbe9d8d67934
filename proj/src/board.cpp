#include "trisolve/board.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "trisolve/error.hpp"
#include "trisolve/notation.hpp"

namespace trisolve {

namespace {

Hole flip(Hole h) { return {h.y - h.x, h.y}; }
Hole rotate(Hole h, int n) { return {h.y - h.x, n - 1 - h.x}; }

int rotations(Transform t) { return static_cast<int>(t) % 3; }
bool flips(Transform t) { return static_cast<int>(t) >= 3; }

// compose_table[a][b] = a o b, found by acting on a triangle with distinct holes.
struct GroupTables {
  std::array<std::array<Transform, 6>, 6> compose{};
  std::array<Transform, 6> inverse{};

  GroupTables() {
    constexpr int n = 5;
    const std::array<Hole, 3> probe = {Hole{0, 1}, Hole{1, 3}, Hole{2, 4}};
    for (Transform a : kAllTransforms) {
      for (Transform b : kAllTransforms) {
        for (Transform c : kAllTransforms) {
          bool same = true;
          for (Hole h : probe) same = same && apply(a, apply(b, h, n), n) == apply(c, h, n);
          if (same) compose[static_cast<int>(a)][static_cast<int>(b)] = c;
        }
      }
    }
    for (Transform a : kAllTransforms)
      for (Transform b : kAllTransforms)
        if (compose[static_cast<int>(a)][static_cast<int>(b)] == Transform::kIdentity)
          inverse[static_cast<int>(a)] = b;
  }
};

const GroupTables& tables() {
  static const GroupTables t;
  return t;
}

}  // namespace

Hole hole_at(int index) {
  // Invert index = y(y+1)/2 + x.
  int y = static_cast<int>((std::sqrt(8.0 * index + 1.0) - 1.0) / 2.0);
  while (triangular(y + 1) <= index) ++y;
  while (triangular(y) > index) --y;
  return {index - triangular(y), y};
}

Hole apply(Transform t, Hole h, int n) {
  if (flips(t)) h = flip(h);
  for (int k = 0; k < rotations(t); ++k) h = rotate(h, n);
  return h;
}

Hole apply_linear(Transform t, Hole h) {
  // Every transform is affine; its linear part is the image of h minus the
  // image of the origin, for any board size.
  constexpr int n = 1;
  return apply(t, h, n) - apply(t, Hole{0, 0}, n);
}

Transform compose(Transform outer, Transform inner) {
  return tables().compose[static_cast<int>(outer)][static_cast<int>(inner)];
}

Transform inverse(Transform t) { return tables().inverse[static_cast<int>(t)]; }

const char* transform_name(Transform t) {
  static constexpr std::array<const char*, 6> kNames = {"i", "r", "r2", "f", "rf", "r2f"};
  return kNames[static_cast<int>(t)];
}

// ---------------------------------------------------------------------------
// Position

Position::Position(int n) : n_(n) {
  if (n < 1 || n > kMaxSide)
    throw EngineError(ErrorKind::kInvalidArgument,
                      "board side must be in [1, " + std::to_string(kMaxSide) + "], got " +
                          std::to_string(n));
}

Position Position::full(int n) {
  Position p(n);
  const int holes = triangular(n);
  for (int w = 0; w < kWords; ++w) {
    const int lo = w * 64;
    if (holes >= lo + 64) {
      p.bits_[w] = ~std::uint64_t{0};
    } else if (holes > lo) {
      p.bits_[w] = (std::uint64_t{1} << (holes - lo)) - 1;
    }
  }
  return p;
}

Position Position::with_vacancy(int n, Hole vacancy) {
  if (!on_board(vacancy, n))
    throw EngineError(ErrorKind::kInvalidArgument, "vacancy is off the board");
  Position p = full(n);
  p.set(vacancy, false);
  return p;
}

Position Position::single_peg(int n, Hole peg) {
  if (!on_board(peg, n)) throw EngineError(ErrorKind::kInvalidArgument, "hole is off the board");
  Position p(n);
  p.set(peg);
  return p;
}

Position Position::from_pegs(int n, const std::vector<Hole>& pegs) {
  Position p(n);
  for (Hole h : pegs) {
    if (!on_board(h, n))
      throw EngineError(ErrorKind::kInvalidArgument, to_alpha(h) + " is off the board T" +
                                                         std::to_string(n));
    p.set(h);
  }
  return p;
}

Position Position::from_bits64(int n, std::uint64_t bits) {
  Position p(n);
  p.bits_[0] = bits & full(n).bits_[0];
  return p;
}

void Position::set(Hole h, bool peg) { set_index(hole_index(h), peg); }

void Position::set_index(int i, bool peg) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (peg) {
    bits_[i >> 6] |= mask;
  } else {
    bits_[i >> 6] &= ~mask;
  }
}

int Position::peg_count() const {
  int c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

std::vector<Hole> Position::pegs() const {
  std::vector<Hole> out;
  for (int i = 0; i < hole_count(); ++i)
    if (has_index(i)) out.push_back(hole_at(i));
  return out;
}

Position Position::complement() const {
  Position p = full(n_);
  for (int w = 0; w < kWords; ++w) p.bits_[w] &= ~bits_[w];
  return p;
}

Position Position::transformed(Transform t) const {
  if (t == Transform::kIdentity) return *this;
  Position p(n_);
  for (int i = 0; i < hole_count(); ++i)
    if (has_index(i)) p.set(apply(t, hole_at(i), n_));
  return p;
}

std::size_t Position::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
  for (auto w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Position& a, const Position& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (int w = Position::kWords - 1; w >= 0; --w)
    if (auto c = a.bits_[w] <=> b.bits_[w]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Jumps and moves

std::optional<Jump> jump_between(Hole from, Hole to) {
  const Hole d = to - from;
  for (Hole u : kDirections) {
    if (d.x == 2 * u.x && d.y == 2 * u.y) return Jump{from, from + u, to};
  }
  return std::nullopt;
}

Jump transformed(Transform t, const Jump& j, int n) {
  return {apply(t, j.from, n), apply(t, j.over, n), apply(t, j.to, n)};
}

int Solution::jump_count() const {
  int c = 0;
  for (const auto& m : moves) c += static_cast<int>(m.jumps.size());
  return c;
}

std::vector<Jump> Solution::jumps() const {
  std::vector<Jump> out;
  for (const auto& m : moves) out.insert(out.end(), m.jumps.begin(), m.jumps.end());
  return out;
}

bool is_legal(const Position& p, const Jump& j) {
  const int n = p.side();
  return on_board(j.from, n) && on_board(j.over, n) && on_board(j.to, n) && p.has(j.from) &&
         p.has(j.over) && !p.has(j.to);
}

std::vector<Jump> legal_jumps(const Position& p) {
  std::vector<Jump> out;
  const int n = p.side();
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x <= y; ++x) {
      const Hole from{x, y};
      if (!p.has(from)) continue;
      for (Hole u : kDirections) {
        const Jump j{from, from + u, from + u + u};
        if (is_legal(p, j)) out.push_back(j);
      }
    }
  }
  return out;
}

void apply_jump_unchecked(Position& p, const Jump& j) {
  p.set(j.from, false);
  p.set(j.over, false);
  p.set(j.to, true);
}

void undo_jump_unchecked(Position& p, const Jump& j) {
  p.set(j.to, false);
  p.set(j.over, true);
  p.set(j.from, true);
}

Position apply_jump(const Position& p, const Jump& j) {
  if (!is_legal(p, j))
    throw EngineError(ErrorKind::kIllegal, "illegal jump " + to_alpha(j.from) + "-" + to_alpha(j.to));
  Position q = p;
  apply_jump_unchecked(q, j);
  return q;
}

Position undo_jump(const Position& p, const Jump& j) {
  const int n = p.side();
  if (!on_board(j.from, n) || !on_board(j.over, n) || !on_board(j.to, n) || p.has(j.from) ||
      p.has(j.over) || !p.has(j.to))
    throw EngineError(ErrorKind::kIllegal,
                      "cannot undo jump " + to_alpha(j.from) + "-" + to_alpha(j.to));
  Position q = p;
  undo_jump_unchecked(q, j);
  return q;
}

Position apply_move(const Position& p, const Move& m) {
  if (m.jumps.empty()) throw EngineError(ErrorKind::kIllegal, "empty move");
  Position q = p;
  for (std::size_t i = 0; i < m.jumps.size(); ++i) {
    const Jump& j = m.jumps[i];
    if (i > 0 && !(j.from == m.jumps[i - 1].to))
      throw EngineError(ErrorKind::kIllegal, "jump " + std::to_string(i) +
                                                 " of move does not continue the same peg");
    if (!is_legal(q, j))
      throw EngineError(ErrorKind::kIllegal, "illegal jump " + std::to_string(i) + " (" +
                                                 to_alpha(j.from) + "-" + to_alpha(j.to) +
                                                 ") in move");
    apply_jump_unchecked(q, j);
  }
  return q;
}

Position complement(const Position& p) { return p.complement(); }

std::pair<Position, Transform> canonicalize_with(const Position& p) {
  std::pair<Position, Transform> best{p, Transform::kIdentity};
  for (Transform t : kAllTransforms) {
    if (t == Transform::kIdentity) continue;
    Position q = p.transformed(t);
    if (q < best.first) best = {q, t};
  }
  return best;
}

Position canonicalize(const Position& p) { return canonicalize_with(p).first; }

bool has_rotational_symmetry(const Position& p) { return p.transformed(Transform::kRot) == p; }

std::vector<Move> group_jumps(const std::vector<Jump>& jumps) {
  std::vector<Move> moves;
  for (const Jump& j : jumps) {
    if (!moves.empty() && moves.back().end() == j.from) {
      moves.back().jumps.push_back(j);
    } else {
      moves.push_back(Move{{j}});
    }
  }
  return moves;
}

ReplayReport replay(const Solution& s) {
  ReplayReport r;
  if (s.n < 1 || s.n > kMaxSide || !on_board(s.vacancy, s.n) || !on_board(s.finish, s.n)) {
    r.message = "problem holes are off the board";
    r.final_position = Position(std::clamp(s.n, 1, kMaxSide));
    return r;
  }
  Position p = Position::with_vacancy(s.n, s.vacancy);
  int jump_no = 0;
  for (std::size_t mi = 0; mi < s.moves.size(); ++mi) {
    const Move& m = s.moves[mi];
    if (m.jumps.empty()) {
      r.failed_move = static_cast<int>(mi);
      r.message = "move " + std::to_string(mi + 1) + " is empty";
      r.final_position = p;
      return r;
    }
    for (std::size_t ji = 0; ji < m.jumps.size(); ++ji, ++jump_no) {
      const Jump& j = m.jumps[ji];
      const bool chained = ji == 0 || j.from == m.jumps[ji - 1].to;
      if (!chained || !is_legal(p, j)) {
        r.failed_move = static_cast<int>(mi);
        r.failed_jump = jump_no;
        r.message = "move " + std::to_string(mi + 1) + ": jump " + to_alpha(j.from) + "-" +
                    to_alpha(j.to) + (chained ? " is illegal" : " does not continue the same peg");
        r.final_position = p;
        return r;
      }
      apply_jump_unchecked(p, j);
    }
  }
  r.final_position = p;
  if (p.peg_count() != 1 || !p.has(s.finish)) {
    r.failed_move = static_cast<int>(s.moves.size());
    r.message = "replay ends with " + std::to_string(p.peg_count()) + " pegs, not one peg at " +
                to_alpha(s.finish);
    return r;
  }
  r.ok = true;
  return r;
}

void validate(const Solution& s) {
  auto r = replay(s);
  if (!r.ok) throw EngineError(ErrorKind::kIllegal, r.message);
}

Solution transformed(Transform t, const Solution& s) {
  Solution out{s.n, apply(t, s.vacancy, s.n), apply(t, s.finish, s.n), {}};
  out.moves.reserve(s.moves.size());
  for (const Move& m : s.moves) {
    Move mm;
    for (const Jump& j : m.jumps) mm.jumps.push_back(transformed(t, j, s.n));
    out.moves.push_back(std::move(mm));
  }
  return out;
}

Solution reverse_solution(const Solution& s) {
  validate(s);
  std::vector<Jump> js = s.jumps();
  // Complementing every position turns each jump back into itself, so only
  // the order changes.
  std::reverse(js.begin(), js.end());
  return Solution{s.n, s.finish, s.vacancy, group_jumps(js)};
}

}  // namespace trisolve
