#include "qcells/errors.hpp"

namespace qcells {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::CardinalityMismatch: return "CardinalityMismatch";
    case ErrorKind::JugglingViolation: return "JugglingViolation";
    case ErrorKind::OddAmbient: return "OddAmbient";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NoProblemFound: return "NoProblemFound";
    case ErrorKind::UnpairedMove: return "UnpairedMove";
    case ErrorKind::OddSize: return "OddSize";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::SingularDiagonal: return "SingularDiagonal";
    case ErrorKind::MoveNotApplicable: return "MoveNotApplicable";
    case ErrorKind::TruncationTooShallow: return "TruncationTooShallow";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GoldenMismatch: return "GoldenMismatch";
  }
  return "Unknown";
}

int exit_class(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoProblemFound:
    case ErrorKind::UnpairedMove:
      return 3;
    case ErrorKind::GoldenMismatch:
      return 2;
    default:
      return 1;
  }
}

Error::Error(ErrorKind kind, const std::string& msg, int a, int b)
    : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind), a_(a), b_(b) {}

void fail(ErrorKind kind, const std::string& msg, int a, int b) {
  throw Error(kind, msg, a, b);
}

}  // namespace qcells
