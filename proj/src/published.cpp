#include "trisolve/published.hpp"

namespace trisolve {

namespace {

const char* const kT5a1 =
    "a3-a1, c3-a3, e5-c3, b2-d4, c5-c3, a5-c5, d5-b5-b3, d4-b2, a4-a2, a1-a3-c3-a1";

}  // namespace

const std::vector<PublishedSolution>& published_solutions() {
  static const std::vector<PublishedSolution> all = {
      {4, "a2", "a4-a2, a1-a3, c4-a4-a2, c3-a3-a1-c3, d4-b2", 5},
      {5, "a1", kT5a1, 10},
      // a2-a4 reaches the position left by the first jump of the a1 solution.
      {5, "a4", std::string("a2-a4") + (kT5a1 + 5), 10},
      {5, "b3",
       "b5-b3, d4-b4, d5-b5, b2-d4, a2-c4, a4-a2, e5-c3-c5, b5-d5, a1-a3-c5, d5-b5, a5-c5", 11},
      {5, "c5",
       "a5-c5, d5-b5, a3-c5, a1-a3, b2-b4, d4-b2, a4-a2, b5-d5, e5-c5-c3-a1-a3-c5", 9},
      {6, "a1",
       "a3-a1, c4-a2, a4-c4, d4-b4, a6-a4, a1-a3-a5, c6-c4, f6-d4, e6-c6-a6-a4, "
       "c3-e5-c5-a5-a3-c5-c3-a1",
       10},
      {6, "a4",
       "a6-a4, a3-a5, a1-a3, c4-a2-a4-c4, d4-b4, c6-c4, e6-c6-a6-a4, f6-d4, "
       "c3-e5-c5-a5-a3-c5-c3-a1",
       9},
      {6, "b3",
       "d5-b3, c6-c4, c3-c5, a6-c6, d6-b6, f6-d6, a4-c4, a2-a4-a6-c6-e6, a1-c3, "
       "d4-f6-d6-b4-b2-d4-b4-b6",
       10},
      {6, "c5",
       "a3-c5, d4-b4, a4-c4, f6-d4, a6-a4, c3-e5, d6-b4, b6-d6-f6-d4, "
       "a1-a3-a5-c5-e5-c3-c5-a3-c3-a1",
       9},
      {6, "b6",
       "d6-b6, a6-c6, f6-d6-b6, c4-e6, a4-a6-c6-c4, c3-c5, a2-a4-c4, a1-c3, "
       "d4-b4-b2-d4-f6-d6-b4-b6",
       9},
      {7, "c3",
       "a1-c3, d4-b2, f6-d4, a3-c3-e5, d6-d4-f6, b4-d6, a5-c5, f7-d5-b5, d7-f7, g7-e7, "
       "b7-d7-f7, a7-a5-c7-c5-a5-a3-a1-c3-c5-e7-g7-e5",
       12},
      {8, "a2",
       "a4-a2, a1-a3, a6-a4-a2, c5-a5, e5-c5, d7-d5-b5-d7, c8-c6-a6-a4, f8-d6, "
       "c3-c5-e7-c7, a8-c8-c6, g7-e5-c3-a1-a3-a5, h8-f8-f6-d6-b6-b8, "
       "e8-c8-a8-a6-a4-c4-a2",
       13},
      {9, "a2",
       "a4-a2, a6-a4, c5-a3-a5, e7-c5, g9-e7, d4-d6-f8, i9-g9-e7, f6-d4-b4-d6-f8, c7-c5, "
       "a1-a3, h8-f6, e9-e7, c9-c7, a9-c9-e9-g9-g7-e5, b2-d4-f6-d6-b4, "
       "a8-c8-e8-g8-e6-e8-c6-a4-c4-a2-a4-a6-c6-c8-a6-a8",
       16},
      {10, "a3",
       "a1-a3, a4-a2, a6-a4, a8-a6, c3-a1-a3-a5-a7, c5-a3, e5-c3-c5-a5, g7-e5-c5, f8-f6, "
       "f10-f8, d7-d5-b5-d7-f9-f7-d5, c8-c6-a6-a8-c8-e8-e6, d10-b8-b6, b10-d10-f10-d8-d10, "
       "i9-g7-e5-e7, h10-h8-f8, j10-h10-f10, a10-a8-c10-e10-g10-g8-e8-e6-c4-a2-a4-a6-c6",
       18},
  };
  return all;
}

}  // namespace trisolve
