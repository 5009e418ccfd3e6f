#include "emhd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

#include "emhd/diagnostics.hpp"
#include "emhd/errors.hpp"
#include "emhd/spectral.hpp"
#include "fft.hpp"

namespace emhd {

using detail::AlignedReal;
using detail::AlignedSpectrum;

void SolverConfig::validate() const {
  if (!(dt_safety > 0.0 && dt_safety <= 1.0)) throw ConfigError("dt_safety must lie in (0, 1]");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw ConfigError("nu must be a finite value >= 0");
  if (hyper_order < 2) throw ConfigError("hyper_order must be >= 2");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("t_end must be finite and >= 0");
  if (output_stride < 1) throw ConfigError("output_stride must be >= 1");
  if (!(resolution_threshold > 0.0)) throw ConfigError("resolution_threshold must be > 0");
}

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::completed: return "completed";
    case RunStatus::numeric: return "numeric";
    case RunStatus::cfl: return "cfl";
    case RunStatus::resolution: return "resolution";
  }
  return "unknown";
}

namespace {

long band_cutoff(const Grid& grid, bool dealias) {
  return dealias ? grid.dealias_cutoff_index() : static_cast<long>(grid.n() / 2);
}

// Spectral kernel shared by all steppers. Works on raw coefficient arrays so a
// stage costs eight transforms (six without the Hall term).
class Kernel {
 public:
  Kernel(const Grid& grid, const SolverConfig& cfg)
      : grid_(grid), cfg_(cfg), n_(grid.n()), cols_(grid.spectral_cols()),
        kx_(n_), ky_(cols_), k2_(grid.spectral_size()), scratch_(grid.spectral_size()),
        scratch2_(grid.spectral_size()), lap_(grid.spectral_size()), fx_(grid.size()), fy_(grid.size()), gx_(grid.size()),
        gy_(grid.size()), product_(grid.size()) {
    for (std::size_t i = 0; i < n_; ++i) kx_[i] = grid.is_nyquist_row(i) ? 0.0 : grid.kx(i);
    for (std::size_t j = 0; j < cols_; ++j) ky_[j] = grid.is_nyquist_col(j) ? 0.0 : grid.ky(j);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        k2_[i * cols_ + j] = grid.kx(i) * grid.kx(i) + grid.ky(j) * grid.ky(j);
      }
    }
    if (cfg.nu > 0.0) {
      damping_.resize(k2_.size());
      for (std::size_t k = 0; k < k2_.size(); ++k) {
        damping_[k] = cfg.nu * std::pow(k2_[k], cfg.hyper_order);
      }
    }
  }

  struct Maxima {
    double grad_a = 0.0;
    double grad_b = 0.0;
  };

  // da = -{b, a}; db = -{a, Lap a} unless frozen. Returns sup |grad a|, |grad b|.
  Maxima evaluate(const AlignedSpectrum& a, const AlignedSpectrum& b, AlignedSpectrum& da,
                  AlignedSpectrum& db, bool frozen) {
    Maxima mx;
    gradient(a, fx_, fy_);
    gradient(b, gx_, gy_);
    for (std::size_t k = 0; k < product_.size(); ++k) {
      product_[k] = -gy_[k] * fx_[k] + gx_[k] * fy_[k];
      mx.grad_a = std::max(mx.grad_a, fx_[k] * fx_[k] + fy_[k] * fy_[k]);
      mx.grad_b = std::max(mx.grad_b, gx_[k] * gx_[k] + gy_[k] * gy_[k]);
    }
    mx.grad_a = std::sqrt(mx.grad_a);
    mx.grad_b = std::sqrt(mx.grad_b);
    transform_product(da);
    if (frozen) {
      std::fill(db.begin(), db.end(), Complex{});
    } else {
      // Reuse g buffers for grad Lap a.
      for (std::size_t k = 0; k < lap_.size(); ++k) lap_[k] = -k2_[k] * a[k];
      gradient(lap_, gx_, gy_);
      for (std::size_t k = 0; k < product_.size(); ++k) {
        product_[k] = -fy_[k] * gx_[k] + fx_[k] * gy_[k];
      }
      transform_product(db);
    }
    if (cfg_.nu > 0.0) {
      damp(a, da);
      if (!frozen) damp(b, db);
    }
    return mx;
  }

  void dealias(AlignedSpectrum& c) const {
    if (cfg_.dealias) dealias_in_place(grid_, c);
  }

 private:
  // (i kx c, i ky c) to physical space; complex products written out to keep
  // them inline.
  void gradient(const AlignedSpectrum& c, AlignedReal& dx, AlignedReal& dy) {
    for (std::size_t i = 0; i < n_; ++i) {
      const double kx = kx_[i];
      const Complex* in = c.data() + i * cols_;
      Complex* ox = scratch_.data() + i * cols_;
      Complex* oy = scratch2_.data() + i * cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        const double re = in[j].real(), im = in[j].imag();
        ox[j] = Complex(-im * kx, re * kx);
        oy[j] = Complex(-im * ky_[j], re * ky_[j]);
      }
    }
    detail::fft_c2r_aligned(n_, scratch_.data(), dx.data());
    detail::fft_c2r_aligned(n_, scratch2_.data(), dy.data());
  }

  // out = -P F[product].
  void transform_product(AlignedSpectrum& out) {
    detail::fft_r2c_aligned(n_, product_.data(), out.data());
    const double scale = -1.0 / static_cast<double>(grid_.size());
    for (Complex& c : out) c = Complex(c.real() * scale, c.imag() * scale);
    dealias(out);
  }

  void damp(const AlignedSpectrum& c, AlignedSpectrum& out) const {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= damping_[k] * c[k];
  }

  const Grid& grid_;
  const SolverConfig& cfg_;
  std::size_t n_, cols_;
  std::vector<double> kx_, ky_;  // odd-derivative wavenumbers (Nyquist zeroed)
  std::vector<double> k2_, damping_;
  AlignedSpectrum scratch_, scratch2_, lap_;
  AlignedReal fx_, fy_, gx_, gy_, product_;
};

AlignedSpectrum copy_coefficients(const Field& f) {
  return AlignedSpectrum(f.coefficients().begin(), f.coefficients().end());
}

bool finite(const AlignedSpectrum& c) {
  return std::all_of(c.begin(), c.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double cfl_from_maxima(const Grid& grid, const SolverConfig& cfg, double grad_a, double grad_b,
                       bool frozen) {
  const double k = retained_k_max(grid, cfg.dealias);
  double dt = std::numeric_limits<double>::infinity();
  if (grad_b > 0.0) dt = std::min(dt, kAdvectiveCfl / (grad_b * k));
  if (!frozen && grad_a > 0.0) dt = std::min(dt, kHallCfl / (grad_a * k * k));
  return dt;
}

double fraction_from_spectra(const Grid& grid, const AlignedSpectrum& a, const AlignedSpectrum& b,
                             bool dealias, bool include_b) {
  const long cutoff = band_cutoff(grid, dealias);
  const long top = cutoff - cutoff / 8;
  double total_a = 0.0, upper_a = 0.0, total_b = 0.0, upper_b = 0.0;
  for (std::size_t i = 0; i < grid.n(); ++i) {
    const long ix = std::labs(grid.kx_index(i));
    for (std::size_t j = 0; j < grid.spectral_cols(); ++j) {
      const std::size_t k = grid.spectral_index(i, j);
      const double k2 = grid.kx(i) * grid.kx(i) + grid.ky(j) * grid.ky(j);
      const double ea = grid.column_weight(j) * k2 * std::norm(a[k]);
      const double eb = grid.column_weight(j) * std::norm(b[k]);
      total_a += ea;
      total_b += eb;
      if (std::max(ix, grid.ky_index(j)) > top) {
        upper_a += ea;
        upper_b += eb;
      }
    }
  }
  const double fa = total_a > 0.0 ? upper_a / total_a : 0.0;
  const double fb = total_b > 0.0 ? upper_b / total_b : 0.0;
  return include_b ? std::max(fa, fb) : fa;
}

struct Stepper {
  Stepper(const Grid& grid, const SolverConfig& cfg, bool frozen)
      : kernel(grid, cfg), frozen(frozen), size(grid.spectral_size()),
        k1a(size), k1b(size), k2a(size), k2b(size), k3a(size), k3b(size), k4a(size),
        k4b(size), sa(size), sb(size) {}

  // First stage; returns the maxima for the CFL bound.
  Kernel::Maxima start(const AlignedSpectrum& a, const AlignedSpectrum& b) {
    return kernel.evaluate(a, b, k1a, k1b, frozen);
  }

  // Completes the step from the k1 computed by start().
  void finish(AlignedSpectrum& a, AlignedSpectrum& b, double dt) {
    stage(a, b, k1a, k1b, 0.5 * dt, k2a, k2b);
    stage(a, b, k2a, k2b, 0.5 * dt, k3a, k3b);
    stage(a, b, k3a, k3b, dt, k4a, k4b);
    const double w = dt / 6.0;
    for (std::size_t k = 0; k < size; ++k) {
      a[k] += w * (k1a[k] + 2.0 * k2a[k] + 2.0 * k3a[k] + k4a[k]);
      if (!frozen) b[k] += w * (k1b[k] + 2.0 * k2b[k] + 2.0 * k3b[k] + k4b[k]);
    }
  }

  void stage(const AlignedSpectrum& a, const AlignedSpectrum& b, const AlignedSpectrum& ka,
             const AlignedSpectrum& kb, double h, AlignedSpectrum& outa, AlignedSpectrum& outb) {
    for (std::size_t k = 0; k < size; ++k) {
      sa[k] = a[k] + h * ka[k];
      sb[k] = frozen ? b[k] : b[k] + h * kb[k];
    }
    kernel.evaluate(sa, sb, outa, outb, frozen);
  }

  Kernel kernel;
  bool frozen;
  std::size_t size;
  AlignedSpectrum k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b, sa, sb;
};

State make_state(const Grid& grid, const AlignedSpectrum& a, const AlignedSpectrum& b, double t) {
  return State(Field::from_coefficients(grid, Spectrum(a.begin(), a.end())),
               Field::from_coefficients(grid, Spectrum(b.begin(), b.end())), t);
}

State step_impl(const State& state, double dt, const SolverConfig& cfg, bool frozen) {
  if (!state.finite()) throw NumericError("step: state contains NaN or Inf");
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw ConfigError("step: dt must be finite and >= 0");
  const Grid& grid = state.grid();
  AlignedSpectrum a = copy_coefficients(state.a), b = copy_coefficients(state.b);
  Stepper stepper(grid, cfg, frozen);
  stepper.kernel.dealias(a);
  stepper.kernel.dealias(b);
  stepper.start(a, b);
  stepper.finish(a, b, dt);
  if (!finite(a) || !finite(b)) throw NumericError("step: NaN or Inf produced");
  return make_state(grid, a, b, state.t + dt);
}

Trajectory run_impl(const State& initial, const SolverConfig& cfg, const Probe& probe,
                    bool frozen) {
  cfg.validate();
  if (!initial.finite()) throw NumericError("run: initial state contains NaN or Inf");
  if (cfg.t_end < initial.t) throw ConfigError("run: t_end precedes the initial time");
  const Grid& grid = initial.grid();
  Stepper stepper(grid, cfg, frozen);
  AlignedSpectrum a = copy_coefficients(initial.a), b = copy_coefficients(initial.b);
  stepper.kernel.dealias(a);
  stepper.kernel.dealias(b);

  Trajectory traj{{}, make_state(grid, a, b, initial.t), RunStatus::completed, initial.t, 0, {}};
  double t = initial.t;
  double fraction = fraction_from_spectra(grid, a, b, cfg.dealias, !frozen);
  double last_dt = 0.0;
  std::size_t last_recorded = 0;
  traj.records.push_back(probe(traj.final_state, {0, 0.0, fraction}));

  auto finish = [&](RunStatus status, std::string message) {
    traj.status = status;
    traj.message = std::move(message);
    if (last_recorded != traj.steps || traj.records.empty()) {
      traj.records.push_back(probe(traj.final_state, {traj.steps, last_dt, fraction}));
    }
    traj.records.back().status = to_string(status);
    return traj;
  };

  if (fraction > cfg.resolution_threshold) {
    return finish(RunStatus::resolution,
                  fmt::format("initial state under-resolved: top-band fraction {:.3e}", fraction));
  }
  const double span = cfg.t_end - initial.t;
  while (t < cfg.t_end) {
    if (traj.steps >= cfg.max_steps) {
      traj.final_state = make_state(grid, a, b, t);
      return finish(RunStatus::cfl, fmt::format("step budget {} exhausted at t = {:.6g}",
                                                cfg.max_steps, t));
    }
    const auto mx = stepper.start(a, b);
    const double bound = cfl_from_maxima(grid, cfg, mx.grad_a, mx.grad_b, frozen);
    double dt = std::min(cfg.dt_safety * bound, cfg.t_end - t);
    if (!std::isfinite(mx.grad_a) || !std::isfinite(mx.grad_b)) {
      traj.final_state = make_state(grid, a, b, t);
      return finish(RunStatus::numeric, fmt::format("NaN in gradients at t = {:.6g}", t));
    }
    if (cfg.dt_safety * bound < 1e-12 * span) {
      traj.final_state = make_state(grid, a, b, t);
      return finish(RunStatus::cfl,
                    fmt::format("CFL collapse at t = {:.6g}: dt bound {:.3e}", t, bound));
    }
    AlignedSpectrum a_prev = a, b_prev = b;
    stepper.finish(a, b, dt);
    if (!finite(a) || !finite(b)) {
      a.swap(a_prev);
      b.swap(b_prev);
      traj.final_state = make_state(grid, a, b, t);
      return finish(RunStatus::numeric, fmt::format("NaN or Inf produced after t = {:.6g}", t));
    }
    // Land exactly on t_end.
    t = (cfg.t_end - t <= dt) ? cfg.t_end : t + dt;
    ++traj.steps;
    last_dt = dt;
    fraction = fraction_from_spectra(grid, a, b, cfg.dealias, !frozen);
    if (fraction > cfg.resolution_threshold) {
      traj.final_state = make_state(grid, a, b, t);
      return finish(RunStatus::resolution,
                    fmt::format("top-band fraction {:.3e} exceeds {:.1e} at t = {:.6g}",
                                fraction, cfg.resolution_threshold, t));
    }
    traj.last_good_time = t;
    if (t >= cfg.t_end) {
      traj.final_state = make_state(grid, a, b, t);
    } else if (traj.steps % static_cast<std::size_t>(cfg.output_stride) == 0) {
      traj.final_state = make_state(grid, a, b, t);
      traj.records.push_back(probe(traj.final_state, {traj.steps, dt, fraction}));
      last_recorded = traj.steps;
    }
  }
  return finish(RunStatus::completed, "reached t_end");
}

}  // namespace

double retained_k_max(const Grid& grid, bool dealias) {
  return std::sqrt(2.0) * static_cast<double>(band_cutoff(grid, dealias)) * grid.k0();
}

std::pair<Field, Field> rhs(const State& state, const SolverConfig& cfg) {
  if (!state.finite()) throw NumericError("rhs: state contains NaN or Inf");
  const Grid& grid = state.grid();
  Kernel kernel(grid, cfg);
  AlignedSpectrum da(grid.spectral_size()), db(grid.spectral_size());
  kernel.evaluate(copy_coefficients(state.a), copy_coefficients(state.b), da, db, false);
  if (!finite(da) || !finite(db)) throw NumericError("rhs: NaN or Inf in products");
  return {Field::from_coefficients(grid, Spectrum(da.begin(), da.end())),
          Field::from_coefficients(grid, Spectrum(db.begin(), db.end()))};
}

double cfl_dt(const State& state, const SolverConfig& cfg) {
  if (!state.finite()) throw NumericError("cfl_dt: state contains NaN or Inf");
  const VectorField ga = gradient(state.a), gb = gradient(state.b);
  double grad_a = 0.0, grad_b = 0.0;
  for (std::size_t k = 0; k < state.grid().size(); ++k) {
    grad_a = std::max(grad_a, std::hypot(ga.x.values()[k], ga.y.values()[k]));
    grad_b = std::max(grad_b, std::hypot(gb.x.values()[k], gb.y.values()[k]));
  }
  const double dt = cfl_from_maxima(state.grid(), cfg, grad_a, grad_b, false);
  return std::isfinite(dt) ? dt : cfg.t_end;
}

State step_rk4(const State& state, double dt, const SolverConfig& cfg) {
  return step_impl(state, dt, cfg, false);
}

State step_rk4_frozen(const State& state, double dt, const SolverConfig& cfg) {
  return step_impl(state, dt, cfg, true);
}

double resolution_fraction(const State& state, bool dealias) {
  return fraction_from_spectra(state.grid(), copy_coefficients(state.a),
                               copy_coefficients(state.b), dealias, true);
}

DiagnosticsRecord basic_probe(const State& state, const StepInfo& info) {
  DiagnosticsRecord r;
  r.t = state.t;
  r.energy = energy(state);
  r.resolution_fraction = info.resolution_fraction;
  r.realized_dt = info.realized_dt;
  return r;
}

Trajectory run(const State& initial, const SolverConfig& cfg, const Probe& probe) {
  return run_impl(initial, cfg, probe, false);
}

Trajectory run_frozen_velocity(const State& initial, const SolverConfig& cfg, const Probe& probe) {
  return run_impl(initial, cfg, probe, true);
}

}  // namespace emhd
