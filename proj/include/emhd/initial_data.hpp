#pragma once

#include <span>
#include <string>
#include <vector>

#include "emhd/params.hpp"
#include "emhd/profile.hpp"
#include "emhd/state.hpp"

namespace emhd {

/// Box half-width used for a parameter set: the support radius 4/lambda sits
/// at half the box (times `safety`).
double default_box_half_width(const ParamSet& p, double safety = 1.0);

/// Smallest power-of-two grid on the default box that passes
/// check_initial_resolution, never smaller than min_n.
Grid default_grid(const ParamSet& p, std::size_t min_n = 16, double safety = 1.0);

/// Smallest power of two n >= default_grid(p).n() on a box of half-width
/// `half_width` whose initial data passes check_initial_resolution and keeps
/// the top-band energy share (see resolution_fraction) at or below
/// `threshold`. Throws ResolutionError when no n <= max_n qualifies.
Grid monitored_grid(const ParamSet& p, double half_width, double threshold = 1e-6,
                    bool dealias = true, std::size_t max_n = 8192);

/// Throws ResolutionError unless n >= 8 max(m, 4 lambda L / pi) and the
/// support radius 4/lambda is at most L/2.
void check_initial_resolution(const ParamSet& p, const Grid& grid);

struct InitialData {
  State state;
  /// Common factor applied to a0 and b0 (1 unless normalized).
  double scale = 1.0;
};

/// a0 = lambda^{1-beta gamma} g(lambda r) cos(m theta), b0 = lambda^{2-beta} h(lambda r).
/// With `normalize`, both are multiplied by one factor so that
/// ||a0||_{H^beta} + ||b0||_{H^{beta-1}} = 1.
InitialData make_initial_data(const ParamSet& p, const Grid& grid, bool normalize = false);

/// u0 = scale lambda^{3-beta} h'(lambda r) e_theta, sampled analytically.
VectorField make_u0(const ParamSet& p, const Grid& grid, double scale = 1.0);

/// ||u||_inf + ||Du||_inf with pointwise Euclidean / Frobenius magnitudes.
double c1_norm(const VectorField& u);

struct ScalingFit {
  std::string quantity;  // "a0", "u0" or "u0_C1"
  double s = 0.0;
  double slope = 0.0;
  double predicted = 0.0;
  double r2 = 0.0;
  double relative_deviation() const;
};

struct ScalingReport {
  std::vector<double> lambdas;
  std::vector<ScalingFit> fits;
  /// values[f][l]: norm of fits[f] at lambdas[l].
  std::vector<std::vector<double>> values;
};

/// Log-log fits of ||a0||_{H^s}, ||u0||_{H^s} and ||u0||_{C^1} against lambda,
/// compared with the exponents gamma(s - beta), s + 2 - beta and 4 - beta.
/// `grid_oversample` multiplies the size picked by monitored_grid.
ScalingReport verify_initial_scalings(std::span<const ParamSet> sweep,
                                      std::span<const double> orders,
                                      std::size_t grid_oversample = 1);

}  // namespace emhd
