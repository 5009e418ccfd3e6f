#pragma once

#include <vector>

#include "emhd/field.hpp"
#include "emhd/fit.hpp"
#include "emhd/params.hpp"
#include "emhd/profile.hpp"

namespace emhd {

/// t_N = lambda^{-zeta}.
double inflation_time(const ParamSet& p);

/// Closed-form frozen-velocity solution
///   abar = scale lambda^{1-beta gamma} g(lambda r) cos(m (theta - omega(r) t)),
///   omega(r) = d_r b0 / r = scale lambda^{4-beta} h'(lambda r) / (lambda r).
class ApproxSolution {
 public:
  ApproxSolution(const ParamSet& p, const Grid& grid, double scale = 1.0);

  const ParamSet& params() const { return params_; }
  const Grid& grid() const { return grid_; }
  const BumpProfile& profile() const { return profile_; }
  double scale() const { return scale_; }

  /// Angular drift omega at radius r.
  double angular_velocity(double r) const;
  /// Largest radial phase wavenumber m t |d_r omega| over the support of g.
  double shear_wavenumber(double t) const;
  /// Whether abar(t) keeps 8 points per wavelength of the sheared phase
  /// (and the angular resolution of the initial data).
  bool resolved(double t) const;
  /// Latest resolved time.
  double resolution_horizon() const;

  /// Pointwise value of abar; no resolution check.
  double value(double x, double y, double t) const;
  /// Throws ResolutionError beyond the horizon.
  Field abar(double t) const;

 private:
  ParamSet params_;
  Grid grid_;
  BumpProfile profile_;
  double scale_;
  double resolution_limit() const;

  double max_abs_shear_ = 0.0;  // max |d/drho (h'/rho)| on supp g
};

struct UbarResult {
  VectorField u;
  /// ||u(quad_steps) - u(2 quad_steps)|| / ||u(2 quad_steps)|| in L2.
  double refinement_change = 0.0;
  int steps = 0;
};

/// ubar(t) = u0 - int_0^t grad^perp(grad^perp abar . grad Lap abar) dtau by
/// composite Simpson on 2 quad_steps panels; the quad_steps result is kept
/// for the refinement check, which must stay below `tolerance`.
UbarResult ubar(const ApproxSolution& sol, double t, int quad_steps, double tolerance = 1e-4);

/// The integrand grad^perp(grad^perp abar . grad Lap abar) at time tau.
VectorField ubar_integrand(const ApproxSolution& sol, double tau);

struct NormSample {
  double t = 0.0;
  double value = 0.0;
};

/// Homogeneous H^s norms of abar at the given times.
std::vector<NormSample> abar_norm_scan(const ApproxSolution& sol, double s,
                                       const std::vector<double>& times);
/// Several orders at once (one transform per time). Result[q][i] matches orders[q], times[i].
std::vector<std::vector<NormSample>> abar_norm_scan(const ApproxSolution& sol,
                                                    const std::vector<double>& orders,
                                                    const std::vector<double>& times);

/// `count` log-spaced times covering the last decade before `t_end`.
std::vector<double> latest_decade(double t_end, int count);

/// Log-log fit restricted to samples in the last decade of the series.
FitResult fit_latest_decade(const std::vector<NormSample>& series);

}  // namespace emhd
