#pragma once

// 64-bit occupancy boards for n <= 10, used by the search routines.

#include <array>
#include <cstdint>
#include <vector>

#include "trisolve/board.hpp"

namespace trisolve::detail {

constexpr int kMaxBitSide = 10;

struct JumpBits {
  std::uint64_t from;
  std::uint64_t over;
  std::uint64_t to;
  std::uint64_t all;  // from | over | to
  int from_index;
  int to_index;
};

inline bool legal(std::uint64_t b, const JumpBits& j) {
  return (b & j.from) && (b & j.over) && !(b & j.to);
}
inline std::uint64_t play(std::uint64_t b, const JumpBits& j) { return b ^ j.all; }

class Geometry {
 public:
  explicit Geometry(int n);
  static const Geometry& of(int n);

  int side() const { return n_; }
  int holes() const { return holes_; }
  std::uint64_t full() const { return full_; }
  const std::vector<JumpBits>& jumps_from(int hole) const { return from_[hole]; }
  const std::vector<JumpBits>& all_jumps() const { return all_; }

  std::uint64_t transform(Transform t, std::uint64_t b) const;
  std::uint64_t canonical(std::uint64_t b) const;
  Jump to_jump(const JumpBits& j) const;

 private:
  int n_;
  int holes_;
  std::uint64_t full_;
  std::vector<std::vector<JumpBits>> from_;
  std::vector<JumpBits> all_;
  // table_[t][k][v]: image under t of byte k of the board holding value v.
  std::array<std::vector<std::array<std::uint64_t, 256>>, 6> table_;
};

// Calls f(child) for every board reachable by one move (a chain of jumps
// by one peg), including each prefix of every chain.
template <class F>
void for_each_move_child(const Geometry& g, std::uint64_t b, F&& f) {
  auto chain = [&](auto& self, std::uint64_t cur, int hole) -> void {
    for (const JumpBits& j : g.jumps_from(hole)) {
      if (!legal(cur, j)) continue;
      const std::uint64_t next = play(cur, j);
      f(next);
      self(self, next, j.to_index);
    }
  };
  for (std::uint64_t rest = b; rest; rest &= rest - 1) chain(chain, b, __builtin_ctzll(rest));
}

}  // namespace trisolve::detail
