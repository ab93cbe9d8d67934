#pragma once

#include <stdexcept>
#include <string>

namespace trisolve {

enum class ErrorKind {
  kInvalidArgument,  // malformed input, off-board hole, bad shape
  kIllegal,          // a jump or move that cannot be played
  kInfeasible,       // problem fails the parity conditions or is unsolvable
  kBudgetExceeded,   // search ran out of nodes or time
  kInternal,         // a plan that should work did not (scheduler stall etc.)
};

class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trisolve
