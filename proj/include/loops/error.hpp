#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace loops {

enum class ErrorKind {
  BadDimensions,
  NotLatin,
  NoIdentity,
  OrderMismatch,
  DegreeMismatch,
  Overflow,
  Capped,
  NotASubloop,
  NotNormal,
  IllDefined,
  UnknownVariety,
  BudgetExceeded,
  InvalidSpec,
  Parse,
  Inconsistent,
  WitnessNotFoundInWindow,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported as a LoopError. `detail` carries
// the offending index for NotLatin (row or column) and the element count for
// Capped; it is empty otherwise.
class LoopError : public std::runtime_error {
 public:
  LoopError(ErrorKind kind, const std::string& message,
            std::optional<std::int64_t> detail = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> detail_;
};

}  // namespace loops
