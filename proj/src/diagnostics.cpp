#include "emhd/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fmt/format.h>
#include <istream>
#include <ostream>
#include <sstream>

#include "emhd/errors.hpp"
#include "emhd/spectral.hpp"

namespace emhd {

double energy(const State& state) {
  const VectorField g = gradient(state.a);
  const auto ax = g.x.values(), ay = g.y.values(), b = state.b.values();
  double sum = 0.0;
  for (std::size_t k = 0; k < ax.size(); ++k) sum += ax[k] * ax[k] + ay[k] * ay[k] + b[k] * b[k];
  const double dx = state.grid().dx();
  return sum * dx * dx;
}

double energy_spectral(const State& state) {
  const double a1 = sobolev_norm(state.a, 1.0, true);
  const double b0 = sobolev_norm(state.b, 0.0, true);
  return a1 * a1 + b0 * b0;
}

std::vector<double> default_orders(double beta) {
  std::vector<double> out;
  for (double s : {-1.0, 0.0, 1.0, 2.0, beta - 2.0, beta - 1.0, beta}) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

VectorField reference_velocity(const State& initial, bool dealias_b) {
  return gradient_perp(dealias_b ? dealias(initial.b) : initial.b);
}

Perturbation perturbation(const State& state, const ApproxSolution& sol, const VectorField& u0,
                          const std::vector<double>& orders, bool project_abar) {
  if (!(state.grid() == sol.grid()) || !(state.grid() == u0.grid())) {
    throw GridMismatch("perturbation: state, carrier and u0 grids differ");
  }
  Field abar = sol.abar(state.t);
  if (project_abar) abar = dealias(abar);
  Field A = state.a - abar;
  const VectorField u = gradient_perp(state.b);
  VectorField du(u.x - u0.x, u.y - u0.y);
  Perturbation out{std::move(A), std::move(du), {}};
  const auto nA = sobolev_norms(out.A, orders, true);
  const auto nux = sobolev_norms(out.du.x, orders, false);
  const auto nuy = sobolev_norms(out.du.y, orders, false);
  for (std::size_t q = 0; q < orders.size(); ++q) {
    out.norms.emplace_back(NormKey{"A", orders[q], true}, nA[q]);
  }
  for (std::size_t q = 0; q < orders.size(); ++q) {
    out.norms.emplace_back(NormKey{"du", orders[q], false}, std::hypot(nux[q], nuy[q]));
  }
  return out;
}

Probe standard_probe(ProbeConfig config) {
  if (config.orders.empty()) throw ConfigError("probe needs at least one norm order");
  if (config.approx && !config.u0) throw ConfigError("probe with a carrier needs u0");
  auto cfg = std::make_shared<const ProbeConfig>(std::move(config));
  return [cfg](const State& state, const StepInfo& info) {
    DiagnosticsRecord r = basic_probe(state, info);
    const auto& orders = cfg->orders;
    const auto na = sobolev_norms(state.a, orders, true);
    for (std::size_t q = 0; q < orders.size(); ++q) r.set({"a", orders[q], true}, na[q]);
    std::vector<double> nonneg;
    for (double s : orders) {
      if (s >= 0.0) nonneg.push_back(s);
    }
    const auto nb = sobolev_norms(state.b, nonneg, true);
    for (std::size_t q = 0; q < nonneg.size(); ++q) r.set({"b", nonneg[q], true}, nb[q]);
    // Past the carrier's horizon the row keeps only the state norms.
    if (cfg->approx && cfg->approx->resolved(state.t)) {
      Field abar = cfg->approx->abar(state.t);
      if (cfg->project_abar) abar = dealias(abar);
      const auto nbar = sobolev_norms(abar, orders, true);
      for (std::size_t q = 0; q < orders.size(); ++q) r.set({"abar", orders[q], true}, nbar[q]);
      const auto pert = perturbation(state, *cfg->approx, *cfg->u0, orders, cfg->project_abar);
      for (const auto& [k, v] : pert.norms) r.set(k, v);
      if (cfg->ubar_steps > 0) {
        const auto ub = ubar(*cfg->approx, state.t, cfg->ubar_steps);
        for (double s : orders) r.set({"ubar", s, false}, sobolev_norm(ub.u, s, false));
      }
    }
    return r;
  };
}

InflationReport inflation_report(const std::vector<DiagnosticsRecord>& records, const ParamSet& p) {
  if (records.empty()) throw ConfigError("inflation_report: empty trajectory");
  InflationReport rep;
  auto total = [&](const DiagnosticsRecord& r) {
    return r.at("a", p.beta, true) + r.at("b", p.beta - 1.0, true);
  };
  const double base = total(records.front());
  if (!(base > 0.0)) throw NumericError("inflation_report: zero initial norm");
  for (const auto& r : records) {
    const double ratio = total(r) / base;
    rep.times.push_back(r.t);
    rep.ratios.push_back(ratio);
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.t_max = r.t;
    }
  }
  const auto& last = records.back();
  rep.ended_by = (last.status == "completed" || last.status == "ok") ? "t_end" : last.status;
  rep.t_final = last.t;
  return rep;
}

namespace {

constexpr const char* kFixedColumns[] = {"t", "energy", "resolution_fraction", "realized_dt",
                                         "status"};

std::string render(double v) { return fmt::format("{:.17g}", v); }

double parse_double(const std::string& cell) {
  if (cell.empty()) return std::nan("");
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) throw NumericError("csv: bad number '" + cell + "'");
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<DiagnosticsRecord>& records) {
  std::vector<NormKey> keys;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.norms) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
  }
  os << "t,energy,resolution_fraction,realized_dt,status";
  for (const auto& k : keys) os << ',' << k.column();
  os << '\n';
  for (const auto& r : records) {
    os << render(r.t) << ',' << render(r.energy) << ',' << render(r.resolution_fraction) << ','
       << render(r.realized_dt) << ',' << r.status;
    for (const auto& k : keys) {
      os << ',';
      if (auto v = r.get(k)) os << render(*v);
    }
    os << '\n';
  }
}

std::vector<DiagnosticsRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw NumericError("csv: missing header");
  const auto header = split(line);
  if (header.size() < 5) throw NumericError("csv: header too short");
  for (std::size_t c = 0; c < 5; ++c) {
    if (header[c] != kFixedColumns[c]) throw NumericError("csv: unexpected column " + header[c]);
  }
  std::vector<NormKey> keys;
  for (std::size_t c = 5; c < header.size(); ++c) {
    auto key = NormKey::parse(header[c]);
    if (!key) throw NumericError("csv: unrecognized column " + header[c]);
    keys.push_back(*key);
  }
  std::vector<DiagnosticsRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) throw NumericError("csv: ragged row");
    DiagnosticsRecord r;
    r.t = parse_double(cells[0]);
    r.energy = parse_double(cells[1]);
    r.resolution_fraction = parse_double(cells[2]);
    r.realized_dt = parse_double(cells[3]);
    r.status = cells[4];
    for (std::size_t c = 0; c < keys.size(); ++c) {
      if (!cells[5 + c].empty()) r.set(keys[c], parse_double(cells[5 + c]));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace emhd
