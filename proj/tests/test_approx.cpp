#include <doctest.h>

#include <cmath>
#include <numbers>

#include "emhd/approx.hpp"
#include "emhd/diagnostics.hpp"
#include "emhd/errors.hpp"
#include "emhd/initial_data.hpp"
#include "emhd/solver.hpp"
#include "emhd/spectral.hpp"

using namespace emhd;

namespace {

const ParamSet kP8 = ParamSet::make(8.0, 3.5, 1.2, 1.485);

double max_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.values().size(); ++k) m = std::max(m, std::abs(a.values()[k] - b.values()[k]));
  return m;
}

}  // namespace

TEST_CASE("inflation time") {
  CHECK(inflation_time(kP8) == doctest::Approx(std::pow(8.0, -1.485)).epsilon(1e-15));
}

TEST_CASE("abar(0) is a0") {
  const Grid g(512, default_box_half_width(kP8));
  const ApproxSolution sol(kP8, g);
  const InitialData d = make_initial_data(kP8, g);
  CHECK(max_diff(sol.abar(0.0), d.state.a) == 0.0);
}

TEST_CASE("abar rotates each circle rigidly with angular velocity d_r b0 / r") {
  const Grid g(512, default_box_half_width(kP8));
  const ApproxSolution sol(kP8, g);
  const double t = 0.3 * inflation_time(kP8);
  for (double rho : {2.2, 2.5, 2.8}) {
    const double r = rho / kP8.lambda;
    // h' = 1 on [2, 3].
    const double omega = std::pow(kP8.lambda, 4.0 - kP8.beta) / rho;
    CHECK(sol.angular_velocity(r) == doctest::Approx(omega).epsilon(1e-14));
    for (double th : {0.1, 1.3, 4.0}) {
      const double later = sol.value(r * std::cos(th), r * std::sin(th), t);
      const double th0 = th - omega * t;
      const double earlier = sol.value(r * std::cos(th0), r * std::sin(th0), 0.0);
      CHECK(later == doctest::Approx(earlier).epsilon(1e-9).scale(1e-6));
    }
  }
  CHECK(sol.value(0.0, 0.0, t) == 0.0);
  CHECK(sol.value(0.4, 0.0, t) == 0.0);
}

TEST_CASE("resolution horizon is the last resolved time") {
  const Grid g(512, default_box_half_width(kP8));
  const ApproxSolution sol(kP8, g);
  const double T = sol.resolution_horizon();
  CHECK(T > 0.0);
  CHECK(sol.resolved(T));
  CHECK_FALSE(sol.resolved(T * 1.0001));
  CHECK_NOTHROW(sol.abar(T));
  CHECK_THROWS_AS(sol.abar(T * 1.01), ResolutionError);
  CHECK_THROWS_AS(sol.abar(-1e-3), ConfigError);
  // Too coarse for the angular structure: nothing is resolved.
  const ApproxSolution coarse(kP8, Grid(64, default_box_half_width(kP8)));
  CHECK(coarse.resolution_horizon() == 0.0);
  CHECK_THROWS_AS(coarse.abar(0.0), ResolutionError);
}

TEST_CASE("shear wavenumber grows linearly in t") {
  const ApproxSolution sol(kP8, Grid(256, 1.0));
  CHECK(sol.shear_wavenumber(0.0) == 0.0);
  CHECK(sol.shear_wavenumber(2.0) == doctest::Approx(2.0 * sol.shear_wavenumber(1.0)));
  // max |d/drho(h'/rho)| on (2, 3) is 1/4 at rho = 2.
  const double expect = kP8.m * std::pow(kP8.lambda, 5.0 - kP8.beta) * 0.25;
  CHECK(sol.shear_wavenumber(1.0) == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("abar norm growth follows the sheared-phase estimate at late times") {
  const Grid g(1024, 6.0 / kP8.lambda);
  const ApproxSolution sol(kP8, g);
  const double T = sol.resolution_horizon();
  const auto times = latest_decade(T, 8);
  CHECK(times.front() == doctest::Approx(T / 10));
  CHECK(times.back() == doctest::Approx(T));
  const std::vector<double> orders{-1.0, 1.0};
  const auto scan = abar_norm_scan(sol, orders, times);
  const FitResult lo = fit_latest_decade(scan[0]);
  const FitResult hi = fit_latest_decade(scan[1]);
  CHECK(lo.slope < 0.0);
  CHECK(hi.slope > 0.0);
  const auto single = abar_norm_scan(sol, 1.0, times);
  for (std::size_t i = 0; i < times.size(); ++i) CHECK(single[i].value == scan[1][i].value);
}

TEST_CASE("fit_latest_decade keeps only the last decade") {
  std::vector<NormSample> s;
  for (int i = 0; i <= 30; ++i) {
    const double t = std::pow(10.0, -3.0 + 0.1 * i);
    s.push_back({t, t < 1e-1 ? 1.0 : 5.0 * t * t});
  }
  const FitResult f = fit_latest_decade(s);
  CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f.r2 == doctest::Approx(1.0));
}

TEST_CASE("ubar argument checks") {
  const ApproxSolution sol(kP8, Grid(512, 1.0));
  CHECK_THROWS_AS(ubar(sol, 1e-4, 7), ConfigError);
  CHECK_THROWS_AS(ubar(sol, 1e-4, 4), ConfigError);
  CHECK_THROWS_AS(ubar(sol, -1e-4, 8), ConfigError);
  const UbarResult zero = ubar(sol, 0.0, 8);
  const VectorField u0 = make_u0(kP8, sol.grid());
  CHECK(max_diff(zero.u.x, u0.x) == 0.0);
}

TEST_CASE("ubar - u0 matches the early velocity response of the full system") {
  const Grid g(512, default_box_half_width(kP8));
  const ApproxSolution sol(kP8, g);
  const InitialData d = make_initial_data(kP8, g);
  const double t = 0.01 * inflation_time(kP8);
  SolverConfig cfg;
  cfg.t_end = t;
  cfg.output_stride = 1000000;
  const Trajectory tr = run(d.state, cfg);
  REQUIRE(tr.status == RunStatus::completed);
  const VectorField u = gradient_perp(tr.final_state.b);
  const VectorField ref = reference_velocity(d.state, true);
  const UbarResult ub = ubar(sol, t, 8);
  CHECK(ub.refinement_change < 1e-4);
  const VectorField model = ub.u;
  const VectorField u0 = make_u0(kP8, g);
  const Field rx = u.x - ref.x, ry = u.y - ref.y;
  const Field mx = dealias(model.x - u0.x), my = dealias(model.y - u0.y);
  const double resp = std::hypot(l2_spectral(rx), l2_spectral(ry));
  const double err = std::hypot(l2_spectral(rx - mx), l2_spectral(ry - my));
  CHECK(resp > 0.0);
  CHECK(err / resp < 0.05);
}
