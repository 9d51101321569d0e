#pragma once

#include <doctest.h>

#include <optional>

#include "loops/error.hpp"

namespace testing {

// Kind of the LoopError thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<loops::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const loops::LoopError& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testing
