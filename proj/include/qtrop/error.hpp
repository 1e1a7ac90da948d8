#pragma once

#include <stdexcept>
#include <string>

namespace qtrop {

/**
 * Machine-readable failure categories. Every library error is thrown as an
 * Error carrying one of these codes; the CLI maps codes to exit status.
 */
enum class ErrorCode {
  NonAdmissible,
  CycleWithoutRelations,
  NotAcyclic,
  FieldMismatch,
  NonRigidWeight,
  NotExchangePair,
  BudgetExceeded,
  EmptyInput,
  VertexNotInP,
  DimensionMismatch,
  IncomparableEdge,
  NotSkewSymmetric,
  IndexOutOfRange,
  SignCoherenceBroken,
  NotUnimodular,
  NonIntegralResult,
  OrientationUndecided,
  LedgerIncomplete,
  UniquenessViolated,
  ParseError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonAdmissible: return "NonAdmissible";
    case ErrorCode::CycleWithoutRelations: return "CycleWithoutRelations";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NonRigidWeight: return "NonRigidWeight";
    case ErrorCode::NotExchangePair: return "NotExchangePair";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::VertexNotInP: return "VertexNotInP";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IncomparableEdge: return "IncomparableEdge";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SignCoherenceBroken: return "SignCoherenceBroken";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::OrientationUndecided: return "OrientationUndecided";
    case ErrorCode::LedgerIncomplete: return "LedgerIncomplete";
    case ErrorCode::UniquenessViolated: return "UniquenessViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

/** Library exception type: an ErrorCode plus a human-readable message. */
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

/** Throws DimensionMismatch unless cond holds. */
inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace qtrop
