#include "emhd/fit.hpp"

#include <algorithm>
#include <cmath>

#include "emhd/errors.hpp"

namespace emhd {

FitResult log_log_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw NumericError("fit: sample counts differ");
  if (x.size() < 2) throw NumericError("fit: need at least two samples");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw NumericError("fit: samples must be finite and strictly positive");
    }
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx, dy = std::log(y[i]) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw NumericError("fit: degenerate abscissa span");
  FitResult r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  r.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return r;
}

FitResult fit_exponent(std::span<const double> x, std::span<const double> y) {
  if (x.size() < 5) throw NumericError("fit_exponent: need at least five samples");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (!(*lo > 0.0) || *hi / *lo < std::sqrt(10.0)) {
    throw NumericError("fit_exponent: samples must span at least half a decade");
  }
  return log_log_fit(x, y);
}

}  // namespace emhd
