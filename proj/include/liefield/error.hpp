#pragma once

#include <stdexcept>
#include <string>

namespace liefield {

enum class ErrorKind {
  DivisionByZero,
  Pole,
  NotIntegral,
  InexactDivision,
  NotInvertible,
  NotCentral,
  UnmappedGenerator,
  TermLimit,
  InsufficientOrder,
  Domain,
  Config,
  Degenerate,
};

const char* kindName(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the
// driver's exit-code logic) can tell configuration problems from math ones.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liefield
