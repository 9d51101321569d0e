#include "loops/error.hpp"

namespace loops {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::NotLatin: return "NotLatin";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Capped: return "Capped";
    case ErrorKind::NotASubloop: return "NotASubloop";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::UnknownVariety: return "UnknownVariety";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::WitnessNotFoundInWindow: return "WitnessNotFoundInWindow";
  }
  return "Unknown";
}

LoopError::LoopError(ErrorKind kind, const std::string& message,
                     std::optional<std::int64_t> detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(detail) {}

}  // namespace loops
