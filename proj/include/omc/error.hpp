#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace omc {

enum class ErrorKind {
  EmptyInput,
  RaggedInput,
  BadSymbol,
  NotSymmetric,
  Duplicate,
  ParallelElements,
  IndexOutOfRange,
  NotSubset,
  BadCardinality,
  LengthMismatch,
  BadH,
  BudgetExceeded,
  BadRange,
  BadAntichain,
  BadThreshold,
  ScaleExceeded,
  DegenerateNormals,
  UnknownName,
  Overflow,
  IoError,
};

constexpr std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::RaggedInput: return "RaggedInput";
    case ErrorKind::BadSymbol: return "BadSymbol";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Duplicate: return "Duplicate";
    case ErrorKind::ParallelElements: return "ParallelElements";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSubset: return "NotSubset";
    case ErrorKind::BadCardinality: return "BadCardinality";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BadH: return "BadH";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::BadAntichain: return "BadAntichain";
    case ErrorKind::BadThreshold: return "BadThreshold";
    case ErrorKind::ScaleExceeded: return "ScaleExceeded";
    case ErrorKind::DegenerateNormals: return "DegenerateNormals";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a stable machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace omc
