#include "bitboard.hpp"

#include <memory>

#include "trisolve/error.hpp"

namespace trisolve::detail {

Geometry::Geometry(int n) : n_(n), holes_(triangular(n)) {
  if (n < 1 || n > kMaxBitSide)
    throw EngineError(ErrorKind::kInvalidArgument, "bit boards support sides 1 to 10");
  full_ = holes_ == 64 ? ~0ull : (1ull << holes_) - 1;
  from_.resize(holes_);
  for (int i = 0; i < holes_; ++i) {
    const Hole a = hole_at(i);
    for (Hole d : kDirections) {
      const Hole over = a + d;
      const Hole to = over + d;
      if (!on_board(to, n)) continue;
      const int o = hole_index(over);
      const int t = hole_index(to);
      JumpBits j{1ull << i, 1ull << o, 1ull << t, 0, i, t};
      j.all = j.from | j.over | j.to;
      from_[i].push_back(j);
      all_.push_back(j);
    }
  }
  const int bytes = (holes_ + 7) / 8;
  for (Transform t : kAllTransforms) {
    auto& tab = table_[static_cast<int>(t)];
    tab.resize(bytes);
    for (int k = 0; k < bytes; ++k) {
      for (int v = 0; v < 256; ++v) {
        std::uint64_t image = 0;
        for (int bit = 0; bit < 8; ++bit) {
          const int i = 8 * k + bit;
          if (((v >> bit) & 1) && i < holes_) image |= 1ull << hole_index(apply(t, hole_at(i), n));
        }
        tab[k][v] = image;
      }
    }
  }
}

const Geometry& Geometry::of(int n) {
  static const auto all = [] {
    std::array<std::unique_ptr<Geometry>, kMaxBitSide + 1> g;
    for (int k = 1; k <= kMaxBitSide; ++k) g[k] = std::make_unique<Geometry>(k);
    return g;
  }();
  if (n < 1 || n > kMaxBitSide)
    throw EngineError(ErrorKind::kInvalidArgument, "bit boards support sides 1 to 10");
  return *all[n];
}

std::uint64_t Geometry::transform(Transform t, std::uint64_t b) const {
  const auto& tab = table_[static_cast<int>(t)];
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < tab.size(); ++k) out |= tab[k][(b >> (8 * k)) & 0xff];
  return out;
}

std::uint64_t Geometry::canonical(std::uint64_t b) const {
  std::uint64_t best = b;
  for (int t = 1; t < 6; ++t) {
    const std::uint64_t c = transform(static_cast<Transform>(t), b);
    if (c < best) best = c;
  }
  return best;
}

Jump Geometry::to_jump(const JumpBits& j) const {
  const Hole a = hole_at(j.from_index);
  const Hole c = hole_at(j.to_index);
  return {a, Hole{(a.x + c.x) / 2, (a.y + c.y) / 2}, c};
}

}  // namespace trisolve::detail
