#pragma once

#include <stdexcept>
#include <string>

namespace semcond {

// Malformed files, bad magic bytes, dimension or label-range violations.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NaN/Inf encountered in a computation that must stay finite.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace semcond
