#include "toricdimer/error.hpp"

namespace toricdimer {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::MissingRotation: return "MissingRotation";
    case Errc::NotCellular: return "NotCellular";
    case Errc::Unbalanced: return "Unbalanced";
    case Errc::NoMatchings: return "NoMatchings";
    case Errc::InvalidMatching: return "InvalidMatching";
    case Errc::ZeroHomology: return "ZeroHomology";
    case Errc::NoSuitableCircuit: return "NoSuitableCircuit";
    case Errc::InconsistentHeights: return "InconsistentHeights";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::SigningMismatch: return "SigningMismatch";
    case Errc::NoPatternFound: return "NoPatternFound";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotInLattice: return "NotInLattice";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotClosed: return "NotClosed";
    case Errc::RepeatedVertex: return "RepeatedVertex";
    case Errc::BruteForceTooLarge: return "BruteForceTooLarge";
    case Errc::BadParameters: return "BadParameters";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotVisible: return "NotVisible";
    case Errc::OutsideTriangle: return "OutsideTriangle";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace toricdimer
