#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hirano {

enum class ErrorKind {
  DimensionMismatch,
  NotSquare,
  Singular,
  NotHirano,
  NotStronglyDrazin,
  BadInverse,
  CertificateFailure,
  IterationCapExceeded,
  SingularNewtonStep,
  ArityMismatch,
  HypothesesFail,
  GenerationFailure,
  Parse,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library; `kind()` carries the
/// machine-readable category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hirano
