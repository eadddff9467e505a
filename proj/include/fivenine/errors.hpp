#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fivenine {

enum class ErrorKind {
  parse,
  invariant,
  not_a_simplex,
  unknown_vertex,
  not_a_loop,
  not_flag,
  missing_triviality_evidence,
  precondition_violated,
  no_diagonal,
  not_a_disc,
  not_flag_disc,
  target_mismatch,
  disconnected,
  too_large_for_exact,
  unrealizable,
  usage,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::invariant: return "InvariantError";
    case ErrorKind::not_a_simplex: return "NotASimplex";
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::not_a_loop: return "NotALoop";
    case ErrorKind::not_flag: return "NotFlag";
    case ErrorKind::missing_triviality_evidence: return "MissingTrivialityEvidence";
    case ErrorKind::precondition_violated: return "PreconditionViolated";
    case ErrorKind::no_diagonal: return "NoDiagonal";
    case ErrorKind::not_a_disc: return "NotADisc";
    case ErrorKind::not_flag_disc: return "NotFlagDisc";
    case ErrorKind::target_mismatch: return "TargetMismatch";
    case ErrorKind::disconnected: return "Disconnected";
    case ErrorKind::too_large_for_exact: return "TooLargeForExact";
    case ErrorKind::unrealizable: return "Unrealizable";
    case ErrorKind::usage: return "UsageError";
  }
  return "Error";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fivenine
