#include "hirano/error.hpp"

namespace hirano {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotHirano: return "NotHirano";
    case ErrorKind::NotStronglyDrazin: return "NotStronglyDrazin";
    case ErrorKind::BadInverse: return "BadInverse";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::SingularNewtonStep: return "SingularNewtonStep";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::HypothesesFail: return "HypothesesFail";
    case ErrorKind::GenerationFailure: return "GenerationFailure";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace hirano
