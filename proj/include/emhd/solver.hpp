#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "emhd/record.hpp"
#include "emhd/state.hpp"

namespace emhd {

struct SolverConfig {
  double dt_safety = 0.5;   // fraction of the CFL bound actually used, in (0, 1]
  double nu = 0.0;          // hyperviscosity coefficient
  int hyper_order = 4;      // p in -nu (-Lap)^p
  bool dealias = true;
  double t_end = 0.0;       // absolute end time
  int output_stride = 1;    // probe every this many steps
  /// Abort when the top-band energy fraction exceeds this.
  double resolution_threshold = 1e-6;
  std::size_t max_steps = 20'000'000;

  /// Throws ConfigError.
  void validate() const;
};

/// Stability constants of cfl_dt.
inline constexpr double kAdvectiveCfl = 1.0;
inline constexpr double kHallCfl = 1.0;

/// Largest retained |k|: sqrt(2) times the per-axis cutoff (n/3 with
/// dealiasing, n/2 without) in units of pi/L.
double retained_k_max(const Grid& grid, bool dealias);

/// Tendencies (-{b, a}, -{a, Lap a}) with optional -nu (-Lap)^p damping.
std::pair<Field, Field> rhs(const State& state, const SolverConfig& cfg);

/// min(C_adv / (|grad^perp b|_inf k_max), C_hall / (|grad a|_inf k_max^2)); t_end when
/// both fields are constant. The Hall bound follows the whistler frequency
/// |grad a| k^2 of the linearized system.
double cfl_dt(const State& state, const SolverConfig& cfg);

/// One classical RK4 step of size dt.
State step_rk4(const State& state, double dt, const SolverConfig& cfg);
/// RK4 step of the frozen-velocity transport a_t = -{b, a}, b held fixed.
State step_rk4_frozen(const State& state, double dt, const SolverConfig& cfg);

/// Share of the energy carried by modes whose max(|kx|, |ky|) index lies in the
/// top eighth of the retained band: the larger of the shares of |k|^2 |a_k|^2 and
/// |b_k|^2 (a alone in frozen-velocity runs).
double resolution_fraction(const State& state, bool dealias);

enum class RunStatus { completed, numeric, cfl, resolution };
std::string to_string(RunStatus status);

struct StepInfo {
  std::size_t step = 0;
  double realized_dt = 0.0;
  double resolution_fraction = 0.0;
};

/// Builds the record for a snapshot; the solver fills status afterwards.
using Probe = std::function<DiagnosticsRecord(const State&, const StepInfo&)>;

/// t, energy, resolution fraction and dt only.
DiagnosticsRecord basic_probe(const State& state, const StepInfo& info);

struct Trajectory {
  std::vector<DiagnosticsRecord> records;
  State final_state;
  RunStatus status = RunStatus::completed;
  double last_good_time = 0.0;
  std::size_t steps = 0;
  std::string message;
};

/// Full nonlinear run from `initial` to cfg.t_end.
Trajectory run(const State& initial, const SolverConfig& cfg, const Probe& probe = basic_probe);

/// Linear transport of a by the fixed velocity grad^perp b of `initial`.
Trajectory run_frozen_velocity(const State& initial, const SolverConfig& cfg,
                               const Probe& probe = basic_probe);

}  // namespace emhd
