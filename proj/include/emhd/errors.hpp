#pragma once

#include <stdexcept>
#include <string>

namespace emhd {

/// Invalid parameters or configuration (maps to the CLI config-error exit code).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The grid cannot represent the requested field or time.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN/Inf, non-convergent quadrature, degenerate fits.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different grids.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace emhd
