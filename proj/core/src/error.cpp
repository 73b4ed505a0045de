#include "sdepth/error.hpp"

namespace sdepth {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::DensityOutOfRange: return "DensityOutOfRange";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SOutOfRange: return "SOutOfRange";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace sdepth
