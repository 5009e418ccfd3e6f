#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "emhd/approx.hpp"
#include "emhd/record.hpp"
#include "emhd/solver.hpp"
#include "emhd/state.hpp"

namespace emhd {

/// Physical-space quadrature of a_x^2 + a_y^2 + b^2 over the box.
double energy(const State& state);
/// The same quantity from Fourier multipliers: ||a||_{dH^1}^2 + ||b||_{L^2}^2.
double energy_spectral(const State& state);

/// {-1, 0, 1, 2, beta-2, beta-1, beta}, duplicates removed, order kept.
std::vector<double> default_orders(double beta);

struct Perturbation {
  Field A;         // a - abar(t)
  VectorField du;  // grad^perp b - u0
  std::vector<std::pair<NormKey, double>> norms;
};

/// A = a - abar(t) (homogeneous norms) and u - u0 (inhomogeneous norms) at
/// `orders`. With `project_abar` the carrier is passed through the 2/3 rule
/// first, matching the data a dealiased run actually evolves.
Perturbation perturbation(const State& state, const ApproxSolution& sol, const VectorField& u0,
                          const std::vector<double>& orders, bool project_abar = true);

/// grad^perp b of the state a run starts from (dealiased when requested).
VectorField reference_velocity(const State& initial, bool dealias);

struct ProbeConfig {
  std::vector<double> orders;
  /// Enables abar, A and du columns.
  std::shared_ptr<const ApproxSolution> approx;
  std::optional<VectorField> u0;
  bool project_abar = true;
  /// Adds ubar columns (expensive: a Simpson quadrature per record).
  int ubar_steps = 0;
};

/// Energy, a and b norms at every order (homogeneous; negative orders only for
/// a, whose mean vanishes), plus the perturbation fragment when configured.
Probe standard_probe(ProbeConfig config);

struct InflationReport {
  std::vector<double> times;
  /// (||a||_{dH^beta} + ||b||_{dH^{beta-1}}) / same at the first record.
  std::vector<double> ratios;
  double max_ratio = 0.0;
  double t_max = 0.0;
  /// "t_end" when the run completed, otherwise the abort status.
  std::string ended_by;
  double t_final = 0.0;
};

/// Needs a_dH{beta} and b_dH{beta-1} columns. Throws ConfigError on an empty series.
InflationReport inflation_report(const std::vector<DiagnosticsRecord>& records, const ParamSet& p);

/// CSV with header t,energy,resolution_fraction,realized_dt,status,<norm columns>.
/// Norm columns follow first appearance across records; missing cells are empty.
void write_csv(std::ostream& os, const std::vector<DiagnosticsRecord>& records);
std::vector<DiagnosticsRecord> read_csv(std::istream& is);

}  // namespace emhd
