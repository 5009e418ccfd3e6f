#pragma once

#include <span>

namespace emhd {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least-squares line through (log x, log y). Needs >= 2 positive samples.
FitResult log_log_fit(std::span<const double> x, std::span<const double> y);

/// log_log_fit with the scaling-law preconditions: at least five positive
/// samples whose abscissae span at least half a decade.
FitResult fit_exponent(std::span<const double> x, std::span<const double> y);

}  // namespace emhd
