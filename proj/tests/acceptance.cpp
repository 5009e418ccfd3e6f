// Acceptance checks: one PASS/FAIL line per criterion; exits 1 if any fails.
#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "emhd/approx.hpp"
#include "emhd/diagnostics.hpp"
#include "emhd/initial_data.hpp"
#include "emhd/region.hpp"
#include "emhd/solver.hpp"
#include "emhd/spectral.hpp"

using namespace emhd;

namespace {

// Pinned tolerances.
constexpr double kEnergyDrift = 1e-6;
constexpr double kOracleError = 1e-4;
constexpr double kGrowthSlopeTol = 0.05;
constexpr double kDecaySlopeTol = 0.10;
constexpr double kScalingTol = 0.10;
constexpr double kVelocityFactor = 3.0;
constexpr double kRoundTrip = 1e-12;
constexpr double kParseval = 1e-10;
constexpr double kBracket = 1e-8;
constexpr double kRk4Order = 3.8;

constexpr double kBeta = 3.5, kGamma = 1.2, kZeta = 1.485;

struct Outcome {
  bool pass = false;
  std::string detail;
};

ParamSet params(double lambda) { return ParamSet::make(lambda, kBeta, kGamma, kZeta); }

Grid default_run_grid(const ParamSet& p) { return Grid(512, default_box_half_width(p)); }

Outcome energy_conservation() {
  const ParamSet p = params(8.0);
  const Grid g = default_run_grid(p);
  const InitialData d = make_initial_data(p, g);
  SolverConfig cfg;
  cfg.t_end = inflation_time(p);
  cfg.output_stride = 25;
  const Trajectory tr = run(d.state, cfg);
  const double horizon = std::min(cfg.t_end, tr.last_good_time);
  const double e0 = tr.records.front().energy;
  double drift = 0.0;
  for (const auto& r : tr.records) {
    if (r.t <= horizon) drift = std::max(drift, std::abs(r.energy - e0) / e0);
  }
  const bool ok = horizon > 0.0 && drift < kEnergyDrift &&
                  (tr.status == RunStatus::completed || tr.status == RunStatus::resolution);
  return {ok, fmt::format("max drift {:.3e} (< {:.0e}) up to t = {:.4e} = {:.3f} t_N, {} steps, ended by {}",
                          drift, kEnergyDrift, horizon, horizon / cfg.t_end, tr.steps,
                          to_string(tr.status))};
}

Outcome frozen_oracle() {
  const ParamSet p = params(4.0);
  const Grid g = default_run_grid(p);
  const InitialData d = make_initial_data(p, g);
  const auto sol = std::make_shared<const ApproxSolution>(p, g);
  SolverConfig cfg;
  cfg.t_end = inflation_time(p);
  cfg.output_stride = 20;
  if (!sol->resolved(cfg.t_end)) return {false, "carrier not resolved at t_N on this grid"};
  ProbeConfig pc;
  pc.orders = {0.0};
  pc.approx = sol;
  pc.u0 = reference_velocity(d.state, true);
  const Trajectory tr = run_frozen_velocity(d.state, cfg, standard_probe(pc));
  if (tr.status != RunStatus::completed) return {false, "frozen run ended by " + to_string(tr.status)};
  double err = 0.0;
  for (const auto& r : tr.records) err = std::max(err, r.at("A", 0.0, true) / r.at("abar", 0.0, true));
  return {err < kOracleError, fmt::format("max relative L2 error {:.3e} (< {:.0e}) over {} records to t_N = {:.4e}",
                                          err, kOracleError, tr.records.size(), cfg.t_end)};
}

struct CarrierScan {
  std::vector<double> orders;
  std::vector<FitResult> fits;
  double t_lo = 0.0, t_hi = 0.0;
};

const CarrierScan& carrier_scan() {
  static const CarrierScan scan = [] {
    const ParamSet p = params(16.0);
    // Only abar is sampled, so the box just has to hold supp g (radius 3/lambda).
    const ApproxSolution sol(p, Grid(8192, 6.0 / p.lambda));
    CarrierScan s;
    s.orders = {-1.0, 1.0, 2.0, kBeta};
    const double T = sol.resolution_horizon();
    const auto times = latest_decade(T, 12);
    const auto series = abar_norm_scan(sol, s.orders, times);
    for (const auto& sr : series) s.fits.push_back(fit_latest_decade(sr));
    s.t_lo = times.front();
    s.t_hi = times.back();
    return s;
  }();
  return scan;
}

Outcome growth_law() {
  const CarrierScan& s = carrier_scan();
  bool ok = true;
  std::string detail;
  for (std::size_t q = 1; q < s.orders.size(); ++q) {
    const double dev = std::abs(s.fits[q].slope - s.orders[q]) / s.orders[q];
    ok = ok && dev < kGrowthSlopeTol;
    detail += fmt::format("s={}: slope {:.4f} (dev {:.2f}%) ", s.orders[q], s.fits[q].slope, 100 * dev);
  }
  detail += fmt::format("over t in [{:.3e}, {:.3e}] at lambda=16, n=8192", s.t_lo, s.t_hi);
  return {ok, detail};
}

Outcome decay_law() {
  const CarrierScan& s = carrier_scan();
  const double dev = std::abs(s.fits[0].slope + 1.0);
  return {dev < kDecaySlopeTol,
          fmt::format("s=-1: slope {:.4f} (dev {:.2f}%, < {:.0f}%)", s.fits[0].slope, 100 * dev, 100 * kDecaySlopeTol)};
}

Outcome initial_scalings() {
  std::vector<ParamSet> sweep;
  for (double l : {8.0, 16.0, 32.0}) sweep.push_back(params(l));
  const std::vector<double> a_orders{0.0, 2.0, kBeta};
  const ScalingReport rep = verify_initial_scalings(sweep, a_orders);
  bool ok = true;
  std::string detail;
  for (const ScalingFit& f : rep.fits) {
    // u0 is checked at s in {0, 2} only.
    if (f.quantity == "u0" && f.s == kBeta) continue;
    const double dev = f.relative_deviation();
    ok = ok && dev < kScalingTol;
    detail += fmt::format("{}(s={}): {:.3f} vs {:.3f}{}; ", f.quantity, f.s, f.slope, f.predicted,
                          dev < kScalingTol ? "" : " [off]");
  }
  return {ok, detail};
}

Outcome inflation_mechanism() {
  std::vector<double> ratios;
  std::string detail;
  for (double l : {8.0, 16.0, 32.0}) {
    const ParamSet p = params(l);
    const ApproxSolution sol(p, default_run_grid(p));
    const double tn = inflation_time(p);
    if (!sol.resolved(tn)) return {false, fmt::format("carrier unresolved at t_N for lambda={}", l)};
    const double r = sobolev_norm(sol.abar(tn), kBeta, true) / sobolev_norm(sol.abar(0.0), kBeta, true);
    ratios.push_back(r);
    detail += fmt::format("lambda={}: {:.6f}; ", l, r);
  }
  const bool ok = ratios[0] < ratios[1] && ratios[1] < ratios[2];
  return {ok, detail + (ok ? "strictly increasing" : "not strictly increasing")};
}

Outcome perturbation_control() {
  const ParamSet p = params(16.0);
  const Grid g = default_run_grid(p);
  const InitialData d = make_initial_data(p, g);
  const auto sol = std::make_shared<const ApproxSolution>(p, g);
  SolverConfig cfg;
  cfg.t_end = 0.25 * inflation_time(p);
  cfg.output_stride = 10;
  ProbeConfig pc;
  pc.orders = {kBeta - 2.0, kBeta};
  pc.approx = sol;
  pc.u0 = reference_velocity(d.state, true);
  const double u0_norm = sobolev_norm(*pc.u0, kBeta - 2.0, false);
  const Trajectory tr = run(d.state, cfg, standard_probe(pc));
  const double window = std::min(cfg.t_end, tr.last_good_time);
  double worst_a = 0.0, worst_u = 0.0, t_a = 0.0, t_u = 0.0;
  std::size_t used = 0;
  for (const auto& r : tr.records) {
    if (r.t > window || !r.get({"A", kBeta, true})) continue;
    ++used;
    const double ra = r.at("A", kBeta, true) / r.at("abar", kBeta, true);
    const double ru = r.at("du", kBeta - 2.0, false) / u0_norm;
    if (ra > worst_a) worst_a = ra, t_a = r.t;
    if (ru > worst_u) worst_u = ru, t_u = r.t;
  }
  const bool ok = used > 1 && worst_a < 1.0 && worst_u < kVelocityFactor;
  return {ok, fmt::format("window t <= {:.4e} ({:.3f} t_N, ended by {}), {} records: max |A|/|abar| in dH^beta {:.3f} "
                          "at {:.3f} t_N; max |u-u0|/|u0| in H^(beta-2) {:.3e} at {:.3f} t_N",
                          window, window / inflation_time(p), to_string(tr.status), used, worst_a,
                          t_a / inflation_time(p), worst_u, t_u / inflation_time(p))};
}

Outcome parameter_region() {
  const auto q = [](const char* s) { return parse_rational(s); };
  const auto has = [](const RegionVerdict& v, const std::string& n) {
    return std::find(v.binding_constraints.begin(), v.binding_constraints.end(), n) != v.binding_constraints.end();
  };
  const RegionVerdict ok_v = admissible(q("3.5"), q("1.2"));
  const bool a = ok_v.admissible && ok_v.zeta_interval &&
                 ok_v.zeta_interval->first == Rational(2049, 1394) && ok_v.zeta_interval->second == Rational(3, 2);
  const RegionVerdict hi = admissible(q("3.5"), q("1.45"));
  const bool b = !hi.admissible && has(hi, "gamma_window_balance") && has(hi, "zeta_lb_combined_vs_zeta_ub");
  const RegionVerdict one = admissible(q("3.5"), q("1.0"));
  const bool c = !one.admissible && has(one, "gamma_gt_1");
  const ImplicationReport imp = check_combined_implication(100, 100);
  const bool d = imp.cells == 10000 && imp.violations == 0;
  std::string interval = ok_v.zeta_interval ? fmt::format("({}, {}) ~ ({:.6f}, {:.6f})",
                                                          fraction_string(ok_v.zeta_interval->first),
                                                          fraction_string(ok_v.zeta_interval->second),
                                                          to_double(ok_v.zeta_interval->first),
                                                          to_double(ok_v.zeta_interval->second))
                                            : "none";
  const auto names = [](const RegionVerdict& v) {
    std::string s;
    for (const auto& n : v.binding_constraints) s += (s.empty() ? "" : "+") + n;
    return s;
  };
  return {a && b && c && d,
          fmt::format("(3.5,1.2) zeta in {}; (3.5,1.45) binds {}; (3.5,1.0) binds {}; implication {} cells, {} violations",
                      interval, names(hi), names(one), imp.cells, imp.violations)};
}

Outcome numerics_hygiene() {
  const ParamSet p = params(8.0);
  const Grid g = default_run_grid(p);
  const InitialData d = make_initial_data(p, g);
  const Field& a = d.state.a;
  const Field& b = d.state.b;

  const auto back = inverse_transform(g, a.coefficients());
  double rt = 0.0;
  for (std::size_t k = 0; k < back.size(); ++k) rt = std::max(rt, std::abs(back[k] - a.values()[k]));
  rt /= a.max_abs();

  const double parseval = std::abs(a.l2_quadrature() - l2_spectral(a)) / l2_spectral(a);

  const Field ab = poisson_bracket(a, b);
  const double anti = (ab + poisson_bracket(b, a)).max_abs() / ab.max_abs();

  // Radial pair: b0 and g(lambda r), sampled on the doubled grid so the residual
  // reflects the bracket rather than the sampling of the bumps.
  const BumpProfile prof;
  const Grid fine(2 * g.n(), g.box_half_width());
  const Field b_fine = make_initial_data(p, fine).state.b;
  const Field radial = Field::sample(fine, [&](double x, double y) { return prof.g(p.lambda * std::hypot(x, y)); });
  double db = 0.0, dg = 0.0;
  for (int i = 0; i <= 40000; ++i) {
    const double rho = 1.0 + 3.0 * i / 40000.0;
    db = std::max(db, std::abs(prof.h_prime(rho)));
    dg = std::max(dg, std::abs(prof.g_prime(rho)));
  }
  const double scale = std::pow(p.lambda, 3.0 - p.beta) * db * p.lambda * dg;
  const double vanish = poisson_bracket(b_fine, radial).max_abs() / scale;

  // dt-halving study on lambda = 4 data.
  const ParamSet p4 = params(4.0);
  const Grid g4(128, default_box_half_width(p4));
  const InitialData d4 = make_initial_data(p4, g4);
  SolverConfig cfg;
  const State s0(dealias(d4.state.a), dealias(d4.state.b), 0.0);
  const double T = 8.0 * cfl_dt(s0, cfg);
  const auto integrate = [&](int steps) {
    State s = s0;
    for (int i = 0; i < steps; ++i) s = step_rk4(s, T / steps, cfg);
    return s;
  };
  const State ref = integrate(256);
  const auto err = [&](int steps) {
    const State s = integrate(steps);
    return std::hypot(l2_spectral(s.a - ref.a), l2_spectral(s.b - ref.b));
  };
  const double e1 = err(16), e2 = err(32), e3 = err(64);
  const double order = std::min(std::log2(e1 / e2), std::log2(e2 / e3));

  const bool ok = rt < kRoundTrip && parseval < kParseval && anti < kBracket && vanish < kBracket && order >= kRk4Order;
  return {ok, fmt::format("round trip {:.2e}; Parseval {:.2e}; antisymmetry {:.2e}; radial bracket {:.2e}; "
                          "RK4 order {:.3f} ({:.2f}, {:.2f})",
                          rt, parseval, anti, vanish, order, std::log2(e1 / e2), std::log2(e2 / e3))};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"energy_conservation", energy_conservation},
      {"frozen_oracle", frozen_oracle},
      {"carrier_growth_law", growth_law},
      {"carrier_negative_order_decay", decay_law},
      {"initial_data_scalings", initial_scalings},
      {"inflation_ratio_monotone", inflation_mechanism},
      {"perturbation_control", perturbation_control},
      {"parameter_region", parameter_region},
      {"numerics_hygiene", numerics_hygiene},
  };
  int failed = 0;
  for (const auto& [name, fn] : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    fmt::print("{} {}: {} [{:.1f}s]\n", o.pass ? "PASS" : "FAIL", name, o.detail, secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  fmt::print("{} of {} criteria passed\n", checks.size() - failed, checks.size());
  return failed == 0 ? 0 : 1;
}
