#include "emhd/approx.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

#include "emhd/errors.hpp"
#include "emhd/initial_data.hpp"
#include "emhd/spectral.hpp"

namespace emhd {

double inflation_time(const ParamSet& p) { return std::pow(p.lambda, -p.zeta); }

ApproxSolution::ApproxSolution(const ParamSet& p, const Grid& grid, double scale)
    : params_(p), grid_(grid), scale_(scale) {
  p.validate();
  constexpr int kSamples = 4000;
  const double lo = profile_.g_support_lo(), hi = profile_.g_support_hi();
  for (int i = 0; i <= kSamples; ++i) {
    const double rho = lo + (hi - lo) * i / kSamples;
    max_abs_shear_ = std::max(max_abs_shear_, std::abs(profile_.drift_shear(rho)));
  }
}

double ApproxSolution::angular_velocity(double r) const {
  const double rho = params_.lambda * r;
  if (rho <= 0.0) return 0.0;
  return scale_ * std::pow(params_.lambda, 4.0 - params_.beta) * profile_.h_prime(rho) / rho;
}

double ApproxSolution::shear_wavenumber(double t) const {
  return static_cast<double>(params_.m) * t * scale_ *
         std::pow(params_.lambda, 5.0 - params_.beta) * max_abs_shear_;
}

bool ApproxSolution::resolved(double t) const {
  const double L = grid_.box_half_width();
  if (profile_.g_support_hi() / params_.lambda > 0.5 * L) return false;
  const double angular =
      8.0 * std::max(static_cast<double>(params_.m), 4.0 * params_.lambda * L / std::numbers::pi);
  if (static_cast<double>(grid_.n()) < angular) return false;
  return t <= resolution_limit();
}

// 2 pi / (k_shear(t) dx) >= 8, solved for t.
double ApproxSolution::resolution_limit() const {
  const double per_time = shear_wavenumber(1.0);
  if (per_time == 0.0) return std::numeric_limits<double>::infinity();
  return std::numbers::pi / (4.0 * grid_.dx() * per_time);
}

double ApproxSolution::resolution_horizon() const {
  return resolved(0.0) ? resolution_limit() : 0.0;
}

double ApproxSolution::value(double x, double y, double t) const {
  const double lambda = params_.lambda;
  const double rho = lambda * std::hypot(x, y);
  if (rho <= profile_.g_support_lo() || rho >= profile_.g_support_hi()) return 0.0;
  const double amp = scale_ * std::pow(lambda, 1.0 - params_.beta * params_.gamma);
  const double m = static_cast<double>(params_.m);
  return amp * profile_.g(rho) * std::cos(m * (std::atan2(y, x) - angular_velocity(rho / lambda) * t));
}

Field ApproxSolution::abar(double t) const {
  if (!(t >= 0.0)) throw ConfigError("abar: time must be non-negative");
  if (!resolved(t)) {
    throw ResolutionError(fmt::format(
        "abar: sheared phase under-resolved at t = {:.6g} (horizon {:.6g}, n = {})", t,
        resolution_horizon(), grid_.n()));
  }
  return Field::sample(grid_, [&](double x, double y) { return value(x, y, t); });
}

VectorField ubar_integrand(const ApproxSolution& sol, double tau) {
  const Field a = sol.abar(tau);
  return gradient_perp(poisson_bracket(a, laplacian(a)));
}

UbarResult ubar(const ApproxSolution& sol, double t, int quad_steps, double tolerance) {
  if (quad_steps < 8) throw ConfigError("ubar: quad_steps must be at least 8");
  if (quad_steps % 2 != 0) throw ConfigError("ubar: quad_steps must be even");
  if (!(t >= 0.0)) throw ConfigError("ubar: time must be non-negative");
  const Grid& grid = sol.grid();
  VectorField u0 = make_u0(sol.params(), grid, sol.scale());
  if (t == 0.0) return {std::move(u0), 0.0, quad_steps};

  // Fine rule: 2N panels; coarse rule: N panels on every other node.
  const int fine = 2 * quad_steps;
  const double h = t / fine;
  const std::size_t size = grid.spectral_size();
  Spectrum fine_x(size), fine_y(size), coarse_x(size), coarse_y(size);
  for (int i = 0; i <= fine; ++i) {
    const VectorField f = ubar_integrand(sol, h * i);
    const double w_fine = (i == 0 || i == fine) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    double w_coarse = 0.0;
    if (i % 2 == 0) {
      const int j = i / 2;
      w_coarse = (j == 0 || j == quad_steps) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    }
    const auto cx = f.x.coefficients(), cy = f.y.coefficients();
    for (std::size_t k = 0; k < size; ++k) {
      fine_x[k] += w_fine * cx[k];
      fine_y[k] += w_fine * cy[k];
      if (w_coarse != 0.0) {
        coarse_x[k] += w_coarse * cx[k];
        coarse_y[k] += w_coarse * cy[k];
      }
    }
  }
  const double fine_scale = h / 3.0, coarse_scale = 2.0 * h / 3.0;
  Spectrum ux(u0.x.coefficients().begin(), u0.x.coefficients().end());
  Spectrum uy(u0.y.coefficients().begin(), u0.y.coefficients().end());
  Spectrum diff_x(size), diff_y(size);
  for (std::size_t k = 0; k < size; ++k) {
    ux[k] -= fine_scale * fine_x[k];
    uy[k] -= fine_scale * fine_y[k];
    diff_x[k] = fine_scale * fine_x[k] - coarse_scale * coarse_x[k];
    diff_y[k] = fine_scale * fine_y[k] - coarse_scale * coarse_y[k];
  }
  VectorField u(Field::from_coefficients(grid, std::move(ux)),
                Field::from_coefficients(grid, std::move(uy)));
  const Field dx = Field::from_coefficients(grid, std::move(diff_x));
  const Field dy = Field::from_coefficients(grid, std::move(diff_y));
  const double norm = std::hypot(l2_spectral(u.x), l2_spectral(u.y));
  const double change = norm > 0.0 ? std::hypot(l2_spectral(dx), l2_spectral(dy)) / norm : 0.0;
  if (!(change < tolerance)) {
    throw NumericError(fmt::format(
        "ubar: quadrature not converged at t = {:.6g}: refinement change {:.3e} >= {:.1e}", t,
        change, tolerance));
  }
  return {std::move(u), change, fine};
}

std::vector<std::vector<NormSample>> abar_norm_scan(const ApproxSolution& sol,
                                                    const std::vector<double>& orders,
                                                    const std::vector<double>& times) {
  std::vector<std::vector<NormSample>> out(orders.size());
  for (double t : times) {
    const Field a = sol.abar(t);
    const auto norms = sobolev_norms(a, orders, true);
    for (std::size_t q = 0; q < orders.size(); ++q) out[q].push_back({t, norms[q]});
  }
  return out;
}

std::vector<NormSample> abar_norm_scan(const ApproxSolution& sol, double s,
                                       const std::vector<double>& times) {
  return abar_norm_scan(sol, std::vector<double>{s}, times).front();
}

std::vector<double> latest_decade(double t_end, int count) {
  if (count < 2 || !(t_end > 0.0)) throw ConfigError("latest_decade: need t_end > 0 and count >= 2");
  std::vector<double> times(count);
  for (int i = 0; i < count; ++i) {
    times[i] = t_end * std::pow(10.0, -1.0 + static_cast<double>(i) / (count - 1));
  }
  times.back() = t_end;
  return times;
}

FitResult fit_latest_decade(const std::vector<NormSample>& series) {
  double t_max = 0.0;
  for (const auto& s : series) t_max = std::max(t_max, s.t);
  std::vector<double> t, v;
  for (const auto& s : series) {
    if (s.t > 0.0 && s.t >= t_max / 10.0 * (1.0 - 1e-12)) {
      t.push_back(s.t);
      v.push_back(s.value);
    }
  }
  return fit_exponent(t, v);
}

}  // namespace emhd
