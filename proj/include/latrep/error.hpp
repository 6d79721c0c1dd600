#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latrep {

enum class ErrorKind {
  CycleDetected,
  IndexOutOfRange,
  NotALattice,
  Unbounded,
  IsoInvalid,
  PartTooSmall,
  NotPrime,
  NotComparable,
  TooLarge,
  BudgetExceeded,
  InvalidTable,
  NotGenerating,
  CertificationFailed,
  DuplicateGadget,
  NotPrimeAfterSplice,
  NotFound,
  PreconditionFailed,
  GenerationFailure,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::IsoInvalid: return "IsoInvalid";
    case ErrorKind::PartTooSmall: return "PartTooSmall";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::DuplicateGadget: return "DuplicateGadget";
    case ErrorKind::NotPrimeAfterSplice: return "NotPrimeAfterSplice";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::GenerationFailure: return "GenerationFailure";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code logic) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latrep
