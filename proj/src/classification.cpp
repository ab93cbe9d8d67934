#include "trisolve/classification.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "trisolve/error.hpp"

namespace trisolve {

namespace {

void require_board(int n, std::initializer_list<Hole> holes, int min_n) {
  if (n < min_n || n > kMaxSide)
    throw EngineError(ErrorKind::kInvalidArgument,
                      "board side must be in [" + std::to_string(min_n) + ", " +
                          std::to_string(kMaxSide) + "]");
  for (Hole h : holes)
    if (!on_board(h, n)) throw EngineError(ErrorKind::kInvalidArgument, "hole is off the board");
}

}  // namespace

const char* class_name(PositionClass c) {
  switch (c) {
    case PositionClass::kEmpty: return "EMPTY";
    case PositionClass::kPeg0: return "PEG0";
    case PositionClass::kPeg1: return "PEG1";
    case PositionClass::kPeg2: return "PEG2";
  }
  return "?";
}

PositionClass ClassSignature::value() const {
  if (parity == std::array<int, 3>{0, 0, 0}) return PositionClass::kEmpty;
  if (parity == std::array<int, 3>{0, 1, 1}) return PositionClass::kPeg0;
  if (parity == std::array<int, 3>{1, 0, 1}) return PositionClass::kPeg1;
  if (parity == std::array<int, 3>{1, 1, 0}) return PositionClass::kPeg2;
  // Each component is the sum of the other two mod 2, so no other vector occurs.
  throw EngineError(ErrorKind::kInternal, "impossible class signature");
}

int hole_class(Hole h) { return ((h.x + h.y) % 3 + 3) % 3; }

ClassSignature position_class(const Position& p) {
  std::array<int, 3> c{};
  for (int i = 0; i < p.hole_count(); ++i)
    if (p.has_index(i)) ++c[hole_class(hole_at(i))];
  return {{(c[1] + c[2]) & 1, (c[0] + c[2]) & 1, (c[0] + c[1]) & 1}};
}

bool pair_parity_ok(int n, Hole s, Hole f) {
  const int ss = (s.x + s.y) % 3;
  const int fs = (f.x + f.y) % 3;
  if (n % 3 == 1) return ss != 0 && (ss + fs) % 3 == 0;
  return ss == fs;
}

bool is_feasible_vacancy(int n, Hole vacancy) {
  require_board(n, {vacancy}, 4);
  return !(n % 3 == 1 && (vacancy.x + vacancy.y) % 3 == 0);
}

bool is_feasible_pair(int n, Hole vacancy, Hole finish) {
  require_board(n, {vacancy, finish}, 4);
  return pair_parity_ok(n, vacancy, finish);
}

HolePair canonical_pair(int n, HolePair p) {
  auto key = [](const HolePair& q) {
    return std::pair{hole_index(q.first), hole_index(q.second)};
  };
  HolePair best = p;
  for (Transform t : kAllTransforms) {
    HolePair q{apply(t, p.first, n), apply(t, p.second, n)};
    if (key(q) < key(best)) best = q;
  }
  return best;
}

std::vector<HolePair> distinct_feasible_pairs(int n) {
  require_board(n, {}, 2);
  std::vector<HolePair> out;
  const int holes = triangular(n);
  for (int a = 0; a < holes; ++a) {
    for (int b = 0; b < holes; ++b) {
      const HolePair p{hole_at(a), hole_at(b)};
      if (!pair_parity_ok(n, p.first, p.second)) continue;
      if (canonical_pair(n, p) == p) out.push_back(p);
    }
  }
  return out;
}

std::vector<Hole> distinct_feasible_vacancies(int n) {
  require_board(n, {}, 4);
  std::vector<Hole> out;
  for (int i = 0; i < triangular(n); ++i) {
    const Hole h = hole_at(i);
    if (!is_feasible_vacancy(n, h)) continue;
    bool minimal = true;
    for (Transform t : kAllTransforms) minimal = minimal && hole_index(apply(t, h, n)) >= i;
    if (minimal) out.push_back(h);
  }
  return out;
}

std::int64_t feasible_pair_count_formula(int n) {
  const std::int64_t t = triangular(n);
  const std::int64_t nn = n;
  if (n % 3 == 1) return (t - 1) * (t - 1) / 27;
  if (n % 2 == 0) return (4 * t * t + 9 * nn * nn) / 72;
  return (4 * t * t + 9 * (nn + 1) * (nn + 1)) / 72;
}

int lower_bound_moves(int n) {
  require_board(n, {}, 4);
  return triangular((n - 4) / 3) + (3 * n - 2) / 2;
}

std::optional<int> upper_bound_moves(int n) {
  if (n <= 0 || n % 12 != 0) return std::nullopt;
  return n * n / 8 + 7 * n / 6 - 3;
}

std::vector<std::vector<Hole>> merson_regions(int n) {
  require_board(n, {}, 2);
  std::vector<std::vector<Hole>> regions;
  regions.push_back({{0, 0}});
  regions.push_back({{0, n - 1}});
  regions.push_back({{n - 1, n - 1}});

  // Each edge walked from one corner to the next; pairs of consecutive holes.
  const std::array<std::pair<Hole, Hole>, 3> edges = {
      std::pair{Hole{0, 0}, Hole{0, 1}}, std::pair{Hole{0, n - 1}, Hole{1, 0}},
      std::pair{Hole{n - 1, n - 1}, Hole{-1, -1}}};
  for (auto [corner, step] : edges) {
    for (int k = 1; k + 1 <= n - 2; k += 2) {
      const Hole a = corner + Hole{step.x * k, step.y * k};
      const Hole b = a + step;
      regions.push_back({a, b});
    }
  }

  // Largest set of disjoint hexagons whose holes avoid the boundary.
  auto interior = [n](Hole h) { return h.x >= 1 && h.y - h.x >= 1 && h.y <= n - 2; };
  std::vector<Hole> centers;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x <= y; ++x) {
      const Hole c{x, y};
      bool ok = interior(c);
      for (Hole d : kDirections) ok = ok && interior(c + d);
      if (ok) centers.push_back(c);
    }
  auto distance = [](Hole a, Hole b) {
    const int dx = a.x - b.x;
    const int dy = a.y - b.y;
    return (dx * dy >= 0) ? std::max(std::abs(dx), std::abs(dy)) : std::abs(dx) + std::abs(dy);
  };
  std::vector<Hole> best;
  std::vector<Hole> chosen;
  std::function<void(std::size_t)> pack = [&](std::size_t from) {
    if (chosen.size() > best.size()) best = chosen;
    if (chosen.size() + (centers.size() - from) <= best.size()) return;
    for (std::size_t i = from; i < centers.size(); ++i) {
      bool free = true;
      for (Hole c : chosen) free = free && distance(c, centers[i]) >= 3;
      if (!free) continue;
      chosen.push_back(centers[i]);
      pack(i + 1);
      chosen.pop_back();
    }
  };
  pack(0);
  for (Hole c : best) {
    std::vector<Hole> hex{c};
    for (Hole d : kDirections) hex.push_back(c + d);
    regions.push_back(std::move(hex));
  }
  return regions;
}

std::vector<ParityInvariant> derive_t4_parity_invariants() {
  constexpr int n = 4;
  constexpr int holes = triangular(n);
  // Distinct jump lines, one mask per unordered (from, to) pair.
  std::vector<std::pair<std::uint32_t, Jump>> lines;
  for (int i = 0; i < holes; ++i) {
    for (Hole d : {Hole{1, 0}, Hole{0, 1}, Hole{1, 1}}) {
      const Hole a = hole_at(i);
      const Jump j{a, a + d, a + d + d};
      if (!on_board(j.to, n)) continue;
      const std::uint32_t mask = (1u << hole_index(j.from)) | (1u << hole_index(j.over)) |
                                 (1u << hole_index(j.to));
      lines.push_back({mask, j});
    }
  }
  std::vector<ParityInvariant> out;
  for (const auto& [breaking, jump] : lines) {
    std::optional<std::uint32_t> best;
    for (std::uint32_t s = 1; s < (1u << holes); ++s) {
      bool ok = std::popcount(s & breaking) % 2 == 1;
      for (const auto& [mask, other] : lines)
        if (mask != breaking) ok = ok && std::popcount(s & mask) % 2 == 0;
      if (!ok) continue;
      if (!best || std::popcount(s) < std::popcount(*best) ||
          (std::popcount(s) == std::popcount(*best) && s < *best))
        best = s;
    }
    if (!best) continue;
    ParityInvariant inv;
    for (int i = 0; i < holes; ++i)
      if ((*best >> i) & 1u) inv.holes.push_back(hole_at(i));
    inv.breaking_jump = jump;
    out.push_back(std::move(inv));
  }
  return out;
}

}  // namespace trisolve
