#pragma once

#include <stdexcept>
#include <string>

namespace stw {

enum class Errc {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  BadPartition,
  DeadRep,
  UnknownRep,
  BadSequence,
  LimitExceeded,
  BadDivision,
  NotDiagonal,
  EdgeMissing,
  ComponentTooLarge,
  Infeasible,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg, int line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        code(c),
        line(line) {}

  Errc code;
  int line;
};

}  // namespace stw
