#pragma once

// Known solutions for T4..T10 in chained notation.

#include <string>
#include <vector>

namespace trisolve {

struct PublishedSolution {
  int n;
  std::string vacancy;
  std::string text;
  int moves;
};

const std::vector<PublishedSolution>& published_solutions();

}  // namespace trisolve
