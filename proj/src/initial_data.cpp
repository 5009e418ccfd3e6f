#include "emhd/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "emhd/errors.hpp"
#include "emhd/fit.hpp"
#include "emhd/solver.hpp"
#include "emhd/spectral.hpp"

namespace emhd {
namespace {

constexpr double kSupportRadius = 4.0;  // in rho = lambda r

const BumpProfile& profile() {
  static const BumpProfile instance;
  return instance;
}

std::size_t required_points(const ParamSet& p, double half_width) {
  const double need =
      8.0 * std::max(static_cast<double>(p.m), 4.0 * p.lambda * half_width / std::numbers::pi);
  return static_cast<std::size_t>(std::ceil(need));
}

}  // namespace

double default_box_half_width(const ParamSet& p, double safety) {
  return 2.0 * kSupportRadius / p.lambda * safety;
}

Grid default_grid(const ParamSet& p, std::size_t min_n, double safety) {
  const double half_width = default_box_half_width(p, safety);
  const std::size_t need = std::max(required_points(p, half_width), min_n);
  std::size_t n = 16;
  while (n < need) n *= 2;
  return Grid(n, half_width);
}

Grid monitored_grid(const ParamSet& p, double half_width, double threshold, bool dealias,
                    std::size_t max_n) {
  for (std::size_t n = default_grid(p).n(); n <= max_n; n *= 2) {
    const Grid g(n, half_width);
    try {
      check_initial_resolution(p, g);
    } catch (const ResolutionError&) {
      continue;
    }
    if (resolution_fraction(make_initial_data(p, g).state, dealias) <= threshold) return g;
  }
  throw ResolutionError(fmt::format("no grid up to n = {} resolves the initial data", max_n));
}

void check_initial_resolution(const ParamSet& p, const Grid& grid) {
  const double L = grid.box_half_width();
  if (kSupportRadius / p.lambda > 0.5 * L) {
    throw ResolutionError(fmt::format(
        "lambda too large for the box: support radius {:.4g} exceeds L/2 = {:.4g}",
        kSupportRadius / p.lambda, 0.5 * L));
  }
  const std::size_t need = required_points(p, L);
  if (grid.n() < need) {
    throw ResolutionError(fmt::format(
        "initial data under-resolved: n = {} but at least {} points are needed (m = {})",
        grid.n(), need, p.m));
  }
}

InitialData make_initial_data(const ParamSet& p, const Grid& grid, bool normalize) {
  p.validate();
  check_initial_resolution(p, grid);
  const BumpProfile& prof = profile();
  const double a_amp = std::pow(p.lambda, 1.0 - p.beta * p.gamma);
  const double b_amp = std::pow(p.lambda, 2.0 - p.beta);
  const double m = static_cast<double>(p.m);

  Field a = Field::sample(grid, [&](double x, double y) {
    const double rho = p.lambda * std::hypot(x, y);
    if (rho <= prof.g_support_lo() || rho >= prof.g_support_hi()) return 0.0;
    return a_amp * prof.g(rho) * std::cos(m * std::atan2(y, x));
  });
  Field b = Field::sample(grid, [&](double x, double y) {
    return b_amp * prof.h(p.lambda * std::hypot(x, y));
  });

  double scale = 1.0;
  if (normalize) {
    const double total =
        sobolev_norm(a, p.beta, false) + sobolev_norm(b, p.beta - 1.0, false);
    if (!(total > 0.0)) throw NumericError("cannot normalize vanishing initial data");
    scale = 1.0 / total;
    a *= scale;
    b *= scale;
  }
  return {State(std::move(a), std::move(b), 0.0), scale};
}

VectorField make_u0(const ParamSet& p, const Grid& grid, double scale) {
  p.validate();
  check_initial_resolution(p, grid);
  const BumpProfile& prof = profile();
  const double amp = scale * std::pow(p.lambda, 3.0 - p.beta);
  auto speed = [&](double x, double y, double& r) {
    r = std::hypot(x, y);
    return r > 0.0 ? amp * prof.h_prime(p.lambda * r) : 0.0;
  };
  Field ux = Field::sample(grid, [&](double x, double y) {
    double r;
    const double v = speed(x, y, r);
    return r > 0.0 ? -v * y / r : 0.0;
  });
  Field uy = Field::sample(grid, [&](double x, double y) {
    double r;
    const double v = speed(x, y, r);
    return r > 0.0 ? v * x / r : 0.0;
  });
  return {std::move(ux), std::move(uy)};
}

double c1_norm(const VectorField& u) {
  const Field dxx = derivative(u.x, 1, 0), dxy = derivative(u.x, 0, 1);
  const Field dyx = derivative(u.y, 1, 0), dyy = derivative(u.y, 0, 1);
  double sup_u = 0.0, sup_du = 0.0;
  const auto ux = u.x.values(), uy = u.y.values();
  const auto a = dxx.values(), b = dxy.values(), c = dyx.values(), d = dyy.values();
  for (std::size_t k = 0; k < ux.size(); ++k) {
    sup_u = std::max(sup_u, std::hypot(ux[k], uy[k]));
    sup_du = std::max(sup_du, std::sqrt(a[k] * a[k] + b[k] * b[k] + c[k] * c[k] + d[k] * d[k]));
  }
  return sup_u + sup_du;
}

double ScalingFit::relative_deviation() const {
  if (predicted == 0.0) return std::abs(slope);
  return std::abs(slope - predicted) / std::abs(predicted);
}

ScalingReport verify_initial_scalings(std::span<const ParamSet> sweep,
                                      std::span<const double> orders,
                                      std::size_t grid_oversample) {
  if (sweep.size() < 3) throw ConfigError("scaling sweep needs at least three lambda values");
  const ParamSet& ref = sweep.front();
  ScalingReport report;
  for (double s : orders) report.fits.push_back({"a0", s, 0, ref.gamma * (s - ref.beta), 0});
  for (double s : orders) report.fits.push_back({"u0", s, 0, s + 2.0 - ref.beta, 0});
  report.fits.push_back({"u0_C1", 1.0, 0, 4.0 - ref.beta, 0});
  report.values.assign(report.fits.size(), {});

  for (const ParamSet& p : sweep) {
    if (p.beta != ref.beta || p.gamma != ref.gamma) {
      throw ConfigError("scaling sweep must vary lambda only");
    }
    const Grid base = monitored_grid(p, default_box_half_width(p));
    const Grid grid(base.n() * grid_oversample, base.box_half_width());
    const InitialData data = make_initial_data(p, grid);
    const VectorField u0 = make_u0(p, grid);
    report.lambdas.push_back(p.lambda);
    const auto a_norms = sobolev_norms(data.state.a, orders, false);
    const auto ux_norms = sobolev_norms(u0.x, orders, false);
    const auto uy_norms = sobolev_norms(u0.y, orders, false);
    std::size_t f = 0;
    for (std::size_t q = 0; q < orders.size(); ++q) report.values[f++].push_back(a_norms[q]);
    for (std::size_t q = 0; q < orders.size(); ++q) {
      report.values[f++].push_back(std::hypot(ux_norms[q], uy_norms[q]));
    }
    report.values[f].push_back(c1_norm(u0));
  }
  for (std::size_t f = 0; f < report.fits.size(); ++f) {
    const FitResult r = log_log_fit(report.lambdas, report.values[f]);
    report.fits[f].slope = r.slope;
    report.fits[f].r2 = r.r2;
  }
  return report;
}

}  // namespace emhd
