#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricdimer {

enum class Errc {
  InvalidGraph,
  MissingRotation,
  NotCellular,
  Unbalanced,
  NoMatchings,
  InvalidMatching,
  ZeroHomology,
  NoSuitableCircuit,
  InconsistentHeights,
  Inconsistent,
  SigningMismatch,
  NoPatternFound,
  Disconnected,
  NotInLattice,
  PreconditionViolated,
  NotClosed,
  RepeatedVertex,
  BruteForceTooLarge,
  BadParameters,
  SingularMatrix,
  NotVisible,
  OutsideTriangle,
  NotDivisible,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace toricdimer
