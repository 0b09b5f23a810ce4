#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ingms {

enum class ErrorKind {
  NegativeProbability,
  RowSumNotOne,
  UnknownVariable,
  MissingVariable,
  BadTopologicalOrder,
  AlphabetMismatch,
  FactorNotNormalized,
  BadFactorization,
  TooLarge,
  InternalConsistency,
  NotDagClosed,
  LengthMismatch,
  BudgetExceeded,
  InvalidArgument,
  Parse,
  Io,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NegativeProbability: return "NegativeProbability";
    case ErrorKind::RowSumNotOne: return "RowSumNotOne";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::BadTopologicalOrder: return "BadTopologicalOrder";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::FactorNotNormalized: return "FactorNotNormalized";
    case ErrorKind::BadFactorization: return "BadFactorization";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::NotDagClosed: return "NotDagClosed";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ingms
