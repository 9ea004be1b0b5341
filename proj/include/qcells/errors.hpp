#pragma once

#include <stdexcept>
#include <string>

namespace qcells {

/// Failure categories surfaced by the library. The CLI maps these to exit codes
/// via exit_class().
enum class ErrorKind {
  CardinalityMismatch,
  JugglingViolation,
  OddAmbient,
  ShapeMismatch,
  RankTooLarge,
  InvalidMove,
  NotApplicable,
  NoProblemFound,
  UnpairedMove,
  OddSize,
  NotSymplectic,
  SingularDiagonal,
  MoveNotApplicable,
  TruncationTooShallow,
  IndexOutOfRange,
  GoldenMismatch,
};

const char* to_string(ErrorKind k);

/// 1 = bad input / precondition violation, 2 = verification failure,
/// 3 = broken internal invariant (a structural assumption failed — abort loudly).
int exit_class(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, int a = -1, int b = -1);
  ErrorKind kind() const { return kind_; }
  /// Optional integer payload, e.g. the (vertex, element) of a juggling violation.
  int a() const { return a_; }
  int b() const { return b_; }

 private:
  ErrorKind kind_;
  int a_, b_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg, int a = -1, int b = -1);

}  // namespace qcells
