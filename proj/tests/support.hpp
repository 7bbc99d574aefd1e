#pragma once

#include "fano/arith.hpp"

#include <optional>

// Runs f and returns the kind of the fano::Error it throws, if any.
template <class F>
std::optional<fano::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const fano::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
