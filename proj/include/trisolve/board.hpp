#pragma once

// Board geometry for triangular peg solitaire on T_n.
//
// Holes use skew coordinates (x, y) with 0 <= x <= y <= n-1; row y holds
// y+1 holes. The three jump axes are (1,0), (0,1) and (1,1). Holes are
// bit-indexed row-major: (x, y) -> y(y+1)/2 + x.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace trisolve {

constexpr int kMaxSide = 26;  // one letter per skew column

constexpr int triangular(int n) { return n * (n + 1) / 2; }

struct Hole {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Hole&, const Hole&) = default;
  friend constexpr Hole operator+(Hole a, Hole b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Hole operator-(Hole a, Hole b) { return {a.x - b.x, a.y - b.y}; }
};

constexpr bool on_board(Hole h, int n) {
  return 0 <= h.x && h.x <= h.y && h.y < n;
}
constexpr int hole_index(Hole h) { return triangular(h.y) + h.x; }
Hole hole_at(int index);

// Unit steps along the three lattice axes, both senses.
inline constexpr std::array<Hole, 6> kDirections = {
    Hole{1, 0}, Hole{-1, 0}, Hole{0, 1}, Hole{0, -1}, Hole{1, 1}, Hole{-1, -1}};

// The symmetry group of the triangle. Element k encodes r^(k%3) o f^(k/3):
// identity, r, r^2, f, rf, r^2f, where f(x,y) = (y-x, y) and
// r(x,y) = (y-x, n-1-x).
enum class Transform : std::uint8_t { kIdentity, kRot, kRot2, kFlip, kRotFlip, kRot2Flip };

inline constexpr std::array<Transform, 6> kAllTransforms = {
    Transform::kIdentity, Transform::kRot,     Transform::kRot2,
    Transform::kFlip,     Transform::kRotFlip, Transform::kRot2Flip};

Hole apply(Transform t, Hole h, int n);
// Linear part of a transform (the map about the origin, independent of n).
Hole apply_linear(Transform t, Hole h);
Transform compose(Transform outer, Transform inner);  // outer o inner
Transform inverse(Transform t);
const char* transform_name(Transform t);

class Position {
 public:
  static constexpr int kWords = (triangular(kMaxSide) + 63) / 64;

  Position() : Position(4) {}
  explicit Position(int n);  // empty board

  static Position full(int n);
  static Position with_vacancy(int n, Hole vacancy);
  static Position single_peg(int n, Hole peg);
  static Position from_pegs(int n, const std::vector<Hole>& pegs);

  int side() const { return n_; }
  int hole_count() const { return triangular(n_); }

  bool has(Hole h) const {
    const int i = hole_index(h);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }
  bool has_index(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
  void set(Hole h, bool peg = true);
  void set_index(int i, bool peg = true);

  int peg_count() const;
  std::vector<Hole> pegs() const;

  // Low 64 bits; the whole board for n <= 10.
  std::uint64_t bits64() const { return bits_[0]; }
  std::uint64_t word(int i) const { return bits_[i]; }
  static Position from_bits64(int n, std::uint64_t bits);

  Position complement() const;
  Position transformed(Transform t) const;
  std::size_t hash() const;

  friend bool operator==(const Position&, const Position&) = default;
  // Orders by side, then by the occupancy bit pattern read as an integer.
  friend std::strong_ordering operator<=>(const Position& a, const Position& b);

 private:
  int n_;
  std::array<std::uint64_t, kWords> bits_{};
};

struct Jump {
  Hole from;
  Hole over;
  Hole to;

  friend constexpr auto operator<=>(const Jump&, const Jump&) = default;
};

// A jump from `from` landing on `to`, if the two are two steps apart on an axis.
std::optional<Jump> jump_between(Hole from, Hole to);
Jump transformed(Transform t, const Jump& j, int n);

// One or more consecutive jumps by the same peg.
struct Move {
  std::vector<Jump> jumps;

  Hole start() const { return jumps.front().from; }
  Hole end() const { return jumps.back().to; }
  friend bool operator==(const Move&, const Move&) = default;
};

struct Solution {
  int n = 0;
  Hole vacancy;
  Hole finish;
  std::vector<Move> moves;

  int jump_count() const;
  std::vector<Jump> jumps() const;
  friend bool operator==(const Solution&, const Solution&) = default;
};

bool is_legal(const Position& p, const Jump& j);
std::vector<Jump> legal_jumps(const Position& p);

// Unchecked primitives; callers establish legality first.
void apply_jump_unchecked(Position& p, const Jump& j);
void undo_jump_unchecked(Position& p, const Jump& j);

// Checked: throw EngineError(kIllegal) naming the failing jump index.
Position apply_jump(const Position& p, const Jump& j);
Position undo_jump(const Position& p, const Jump& j);
Position apply_move(const Position& p, const Move& m);

Position complement(const Position& p);

// Smallest of the six symmetric images.
Position canonicalize(const Position& p);
// Canonical image together with a transform t such that t(p) is canonical.
std::pair<Position, Transform> canonicalize_with(const Position& p);
bool has_rotational_symmetry(const Position& p);

// Merge consecutive jumps into moves while each jump starts where the
// previous one landed.
std::vector<Move> group_jumps(const std::vector<Jump>& jumps);

struct ReplayReport {
  bool ok = false;
  int failed_move = -1;  // 0-based
  int failed_jump = -1;  // 0-based within the whole sequence
  std::string message;
  Position final_position;
};

// Replays from the one-vacancy start and checks the one-peg finish.
ReplayReport replay(const Solution& s);
// Throws EngineError(kIllegal) when replay fails.
void validate(const Solution& s);

Solution transformed(Transform t, const Solution& s);
Solution reverse_solution(const Solution& s);

}  // namespace trisolve

template <>
struct std::hash<trisolve::Position> {
  std::size_t operator()(const trisolve::Position& p) const noexcept { return p.hash(); }
};
