#include "emhd/app.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "emhd/approx.hpp"
#include "emhd/checkpoint.hpp"
#include "emhd/diagnostics.hpp"
#include "emhd/errors.hpp"
#include "emhd/initial_data.hpp"
#include "emhd/region.hpp"
#include "emhd/spectral.hpp"

namespace emhd {

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      {"lambda", "8", "frequency parameter"},
      {"beta", "3.5", "regularity index, 3 < beta < 4"},
      {"gamma", "1.2", "oscillation exponent, > 1"},
      {"zeta", "1.485", "inflation-time exponent, t_N = lambda^-zeta"},
      {"normalize", "false", "rescale a0, b0 so ||a0||_{H^beta} + ||b0||_{H^{beta-1}} = 1"},
      {"n", "0", "grid points per dimension (0: smallest resolved power of two)"},
      {"box_half_width", "0", "L of the box [-L, L)^2 (0: 8/lambda times box_safety)"},
      {"box_safety", "1", "multiplier on the default box half-width"},
      {"dt_safety", "0.5", "fraction of the CFL bound used per step"},
      {"nu", "0", "hyperviscosity coefficient"},
      {"hyper_order", "4", "hyperviscosity order p"},
      {"dealias", "true", "apply the 2/3 rule"},
      {"t_end", "", "absolute end time (empty: t_end_factor * t_N)"},
      {"t_end_factor", "1", "end time as a multiple of t_N"},
      {"output_stride", "10", "steps between trajectory records"},
      {"resolution_threshold", "1e-6", "top-band energy fraction that aborts a run"},
      {"max_steps", "20000000", "step budget"},
      {"orders", "", "Sobolev orders (empty: -1,0,1,2,beta-2,beta-1,beta)"},
      {"project_abar", "true", "compare runs against the 2/3-projected carrier"},
      {"ubar_steps", "0", "Simpson panels for ubar columns (0: off)"},
      {"initial", "", "checkpoint to start run/frozen-run from"},
      {"scan_points", "20", "samples per approx-scan"},
      {"scan_t_end", "", "last approx-scan time (empty: resolution horizon)"},
      {"scan_decades", "1", "decades covered by the approx-scan"},
      {"betas", "3.1,3.5,3.9", "region beta grid (exact decimals or p/q)"},
      {"gammas", "1.01,1.1,1.2,1.3,1.4,1.45,1.5,2", "region gamma grid"},
      {"implication_grid", "100", "side of the dense implication check (0: skip)"},
      {"lambdas", "8,16,32", "sweep lambda values"},
      {"sweep_kind", "frozen-run", "frozen-run, run or approx"},
      {"out", "out", "output directory"},
  };
  return keys;
}

ExperimentConfig::ExperimentConfig() {
  for (const auto& k : config_keys()) values_[k.name] = k.default_value;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void ExperimentConfig::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("{}:{}: expected key = value", path.string(), lineno));
    }
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key '" + key + "'");
  it->second = value;
}

const std::string& ExperimentConfig::raw(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key '" + key + "'");
  return it->second;
}

double ExperimentConfig::number(const std::string& key) const {
  const std::string& text = raw(key);
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw ConfigError(fmt::format("config key '{}' needs a finite number, got '{}'", key, text));
  }
  return v;
}

long ExperimentConfig::integer(const std::string& key) const {
  const std::string& text = raw(key);
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ConfigError(fmt::format("config key '{}' needs an integer, got '{}'", key, text));
  }
  return v;
}

bool ExperimentConfig::flag(const std::string& key) const {
  const std::string& v = raw(key);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(fmt::format("config key '{}' needs true/false, got '{}'", key, v));
}

std::vector<std::string> ExperimentConfig::list(const std::string& key) const {
  std::vector<std::string> out;
  std::stringstream ss(raw(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> ExperimentConfig::numbers(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : list(key)) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size() || !std::isfinite(v)) {
      throw ConfigError(fmt::format("config key '{}': bad number '{}'", key, item));
    }
    out.push_back(v);
  }
  return out;
}

std::string ExperimentConfig::echo() const {
  std::string out;
  for (const auto& k : config_keys()) out += fmt::format("{} = {}\n", k.name, values_.at(k.name));
  return out;
}

ParamSet ExperimentConfig::params() const { return params_for_lambda(number("lambda")); }

ParamSet ExperimentConfig::params_for_lambda(double lambda) const {
  return ParamSet::make(lambda, number("beta"), number("gamma"), number("zeta"));
}

SolverConfig ExperimentConfig::solver(double t_end) const {
  SolverConfig cfg;
  cfg.dt_safety = number("dt_safety");
  cfg.nu = number("nu");
  cfg.hyper_order = static_cast<int>(integer("hyper_order"));
  cfg.dealias = flag("dealias");
  cfg.t_end = t_end;
  cfg.output_stride = static_cast<int>(integer("output_stride"));
  cfg.resolution_threshold = number("resolution_threshold");
  const long steps = integer("max_steps");
  if (steps < 1) throw ConfigError("max_steps must be >= 1");
  cfg.max_steps = static_cast<std::size_t>(steps);
  cfg.validate();
  return cfg;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return fmt::format("{:016x}", h);
}

void write_run_metadata(const std::filesystem::path& out_dir, const std::string& subcommand,
                        const ExperimentConfig& config, const std::vector<std::string>& outputs) {
  std::filesystem::create_directories(out_dir);
  const std::string echoed = config.echo();
  std::ofstream(out_dir / "config.txt") << echoed;
  nlohmann::ordered_json manifest;
  manifest["version"] = kVersion;
  manifest["subcommand"] = subcommand;
  manifest["parameter_hash"] = fnv1a_hex(echoed);
  manifest["config"] = "config.txt";
  manifest["outputs"] = outputs;
  std::ofstream(out_dir / "manifest.json") << manifest.dump(2) << '\n';
}

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::filesystem::path out_dir(const ExperimentConfig& c) {
  const std::filesystem::path dir = c.raw("out");
  if (dir.empty()) throw ConfigError("out must name a directory");
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<double> orders_for(const ExperimentConfig& c, const ParamSet& p) {
  auto orders = c.numbers("orders");
  return orders.empty() ? default_orders(p.beta) : orders;
}

Grid grid_for(const ExperimentConfig& c, const ParamSet& p) {
  double L = c.number("box_half_width");
  if (L == 0.0) L = default_box_half_width(p, c.number("box_safety"));
  const long n = c.integer("n");
  if (n < 0) throw ConfigError("n must be >= 0");
  if (n == 0) {
    return monitored_grid(p, L, c.number("resolution_threshold"), c.flag("dealias"));
  }
  return Grid(static_cast<std::size_t>(n), L);
}

double t_end_for(const ExperimentConfig& c, const ParamSet& p) {
  if (!c.raw("t_end").empty()) return c.number("t_end");
  return c.number("t_end_factor") * inflation_time(p);
}

int exit_for(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return kExitOk;
    case RunStatus::resolution: return kExitResolution;
    case RunStatus::numeric:
    case RunStatus::cfl: return kExitNumeric;
  }
  return kExitNumeric;
}

struct RunOutcome {
  ParamSet params;
  Grid grid;
  double t_end = 0.0;
  Trajectory traj;
  double scale = 1.0;
  double energy_drift = 0.0;
  std::optional<InflationReport> inflation;
  double carrier_ratio = std::nan("");
};

RunOutcome execute_run(const ExperimentConfig& c, const ParamSet& p, bool frozen) {
  const double t_end = t_end_for(c, p);
  const SolverConfig cfg = c.solver(t_end);
  std::optional<State> initial;
  double scale = 1.0;
  Grid grid(16, 1.0);
  if (!c.raw("initial").empty()) {
    initial.emplace(load_checkpoint(c.raw("initial")));
    grid = initial->grid();
  } else {
    grid = grid_for(c, p);
    auto data = make_initial_data(p, grid, c.flag("normalize"));
    scale = data.scale;
    initial.emplace(std::move(data.state));
  }
  ProbeConfig probe;
  probe.orders = orders_for(c, p);
  probe.approx = std::make_shared<ApproxSolution>(p, grid, scale);
  probe.u0 = reference_velocity(*initial, cfg.dealias);
  probe.project_abar = c.flag("project_abar");
  probe.ubar_steps = static_cast<int>(c.integer("ubar_steps"));
  auto traj = frozen ? run_frozen_velocity(*initial, cfg, standard_probe(probe))
                     : run(*initial, cfg, standard_probe(probe));
  RunOutcome out{p, grid, t_end, std::move(traj), scale, 0.0, std::nullopt, std::nan("")};
  const double e0 = out.traj.records.front().energy;
  for (const auto& r : out.traj.records) {
    if (e0 > 0.0) out.energy_drift = std::max(out.energy_drift, std::abs(r.energy / e0 - 1.0));
  }
  const bool has_beta = std::find(probe.orders.begin(), probe.orders.end(), p.beta) != probe.orders.end() &&
                        std::find(probe.orders.begin(), probe.orders.end(), p.beta - 1.0) != probe.orders.end();
  if (has_beta) {
    out.inflation = inflation_report(out.traj.records, p);
    const auto& first = out.traj.records.front();
    const auto& last = out.traj.records.back();
    const auto a0 = first.get({"abar", p.beta, true});
    const auto a1 = last.get({"abar", p.beta, true});
    if (a0 && a1 && *a0 > 0.0) out.carrier_ratio = *a1 / *a0;
  }
  return out;
}

nlohmann::ordered_json summary_json(const RunOutcome& o) {
  nlohmann::ordered_json j;
  j["lambda"] = o.params.lambda;
  j["m"] = o.params.m;
  j["gamma_eff"] = o.params.gamma_eff();
  j["n"] = o.grid.n();
  j["box_half_width"] = o.grid.box_half_width();
  j["t_N"] = inflation_time(o.params);
  j["t_end"] = o.t_end;
  j["scale"] = o.scale;
  j["status"] = to_string(o.traj.status);
  j["message"] = o.traj.message;
  j["steps"] = o.traj.steps;
  j["last_good_time"] = o.traj.last_good_time;
  j["energy_max_relative_drift"] = o.energy_drift;
  if (o.inflation) {
    j["inflation_ratio_final"] = o.inflation->ratios.back();
    j["inflation_ratio_max"] = o.inflation->max_ratio;
    j["inflation_t_max"] = o.inflation->t_max;
    j["ended_by"] = o.inflation->ended_by;
  }
  if (std::isfinite(o.carrier_ratio)) j["carrier_ratio"] = o.carrier_ratio;
  return j;
}

int run_like(const ExperimentConfig& c, bool frozen, const std::string& name) {
  const ParamSet p = c.params();
  const auto dir = out_dir(c);
  const RunOutcome o = execute_run(c, p, frozen);
  {
    std::ofstream csv(dir / "trajectory.csv");
    write_csv(csv, o.traj.records);
  }
  save_checkpoint(dir / "final.ckpt", o.traj.final_state);
  std::ofstream(dir / "summary.json") << summary_json(o).dump(2) << '\n';
  write_run_metadata(dir, name, c, {"trajectory.csv", "final.ckpt", "summary.json"});
  std::cout << fmt::format("{}: status {} at t = {:.6g} after {} steps ({})\n", name,
                           to_string(o.traj.status), o.traj.final_state.t, o.traj.steps,
                           o.traj.message);
  return exit_for(o.traj.status);
}

}  // namespace

int cmd_init_data(const ExperimentConfig& c) {
  const ParamSet p = c.params();
  const auto dir = out_dir(c);
  const Grid grid = grid_for(c, p);
  const InitialData data = make_initial_data(p, grid, c.flag("normalize"));
  const VectorField u0 = make_u0(p, grid, data.scale);
  const auto orders = orders_for(c, p);
  save_checkpoint(dir / "initial.ckpt", data.state);

  std::ofstream csv(dir / "norms.csv");
  csv << "lambda,beta,gamma,gamma_eff,m,n,box_half_width,scale,quantity,s,homogeneous,value\n";
  const std::string prefix =
      fmt::format("{},{},{},{},{},{},{},{}", num(p.lambda), num(p.beta), num(p.gamma),
                  num(p.gamma_eff()), p.m, grid.n(), num(grid.box_half_width()), num(data.scale));
  auto row = [&](const std::string& q, double s, bool hom, double v) {
    csv << prefix << ',' << q << ',' << num(s) << ',' << (hom ? 1 : 0) << ',' << num(v) << '\n';
  };
  const auto a_h = sobolev_norms(data.state.a, orders, false);
  const auto a_dh = sobolev_norms(data.state.a, orders, true);
  for (std::size_t q = 0; q < orders.size(); ++q) {
    row("a0", orders[q], false, a_h[q]);
    row("a0", orders[q], true, a_dh[q]);
  }
  for (double s : orders) row("b0", s, false, sobolev_norm(data.state.b, s, false));
  for (double s : orders) row("u0", s, false, sobolev_norm(u0, s, false));
  row("u0_C1", 1.0, false, c1_norm(u0));
  row("energy", 0.0, false, energy(data.state));
  csv.close();
  write_run_metadata(dir, "init-data", c, {"initial.ckpt", "norms.csv"});
  std::cout << fmt::format("init-data: lambda {} m {} n {} L {:.6g} scale {:.6g}\n", p.lambda, p.m,
                           grid.n(), grid.box_half_width(), data.scale);
  return kExitOk;
}

int cmd_run(const ExperimentConfig& c) { return run_like(c, false, "run"); }
int cmd_frozen_run(const ExperimentConfig& c) { return run_like(c, true, "frozen-run"); }

int cmd_approx_scan(const ExperimentConfig& c) {
  const ParamSet p = c.params();
  const auto dir = out_dir(c);
  const Grid grid = grid_for(c, p);
  const ApproxSolution sol(p, grid);
  const double t_end =
      c.raw("scan_t_end").empty() ? sol.resolution_horizon() : c.number("scan_t_end");
  if (!(t_end > 0.0)) throw ResolutionError("approx-scan: no resolved time window on this grid");
  const long points = c.integer("scan_points");
  const double decades = c.number("scan_decades");
  if (points < 5) throw ConfigError("scan_points must be >= 5");
  if (!(decades > 0.0)) throw ConfigError("scan_decades must be > 0");
  std::vector<double> times(static_cast<std::size_t>(points));
  for (long i = 0; i < points; ++i) {
    times[i] = t_end * std::pow(10.0, -decades * (1.0 - static_cast<double>(i) / (points - 1)));
  }
  times.back() = t_end;
  const auto orders = orders_for(c, p);
  const auto series = abar_norm_scan(sol, orders, times);

  std::ofstream csv(dir / "scan.csv");
  csv << "t,t_N";
  for (double s : orders) csv << ',' << NormKey{"abar", s, true}.column();
  csv << '\n';
  for (std::size_t i = 0; i < times.size(); ++i) {
    csv << num(times[i]) << ',' << num(inflation_time(p));
    for (std::size_t q = 0; q < orders.size(); ++q) csv << ',' << num(series[q][i].value);
    csv << '\n';
  }
  csv.close();
  std::ofstream fits(dir / "fits.csv");
  fits << "s,slope,intercept,r2,predicted,t_lo,t_hi\n";
  for (std::size_t q = 0; q < orders.size(); ++q) {
    const FitResult f = fit_latest_decade(series[q]);
    fits << num(orders[q]) << ',' << num(f.slope) << ',' << num(f.intercept) << ',' << num(f.r2)
         << ',' << num(orders[q]) << ',' << num(t_end / 10.0) << ',' << num(t_end) << '\n';
    std::cout << fmt::format("approx-scan: s = {:g} slope {:.4f} (r2 {:.5f})\n", orders[q],
                             f.slope, f.r2);
  }
  fits.close();
  write_run_metadata(dir, "approx-scan", c, {"scan.csv", "fits.csv"});
  return kExitOk;
}

int cmd_region(const ExperimentConfig& c) {
  const auto dir = out_dir(c);
  std::vector<Rational> betas, gammas;
  for (const auto& b : c.list("betas")) betas.push_back(parse_rational(b));
  for (const auto& g : c.list("gammas")) gammas.push_back(parse_rational(g));
  const auto rows = region_sweep(betas, gammas);
  std::ofstream csv(dir / "region.csv");
  write_region_csv(csv, rows);
  csv.close();
  std::vector<std::string> outputs{"region.csv"};
  const long side = c.integer("implication_grid");
  if (side < 0) throw ConfigError("implication_grid must be >= 0");
  if (side > 0) {
    const auto rep = check_combined_implication(static_cast<int>(side), static_cast<int>(side));
    nlohmann::ordered_json j;
    j["cells"] = rep.cells;
    j["violations"] = rep.violations;
    auto& ce = j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& [b, g] : rep.counterexamples) {
      ce.push_back({fraction_string(b), fraction_string(g)});
    }
    std::ofstream(dir / "implication.json") << j.dump(2) << '\n';
    outputs.push_back("implication.json");
    std::cout << fmt::format("region: implication check {} cells, {} violations\n", rep.cells,
                             rep.violations);
  }
  std::size_t admissible_count = 0;
  for (const auto& r : rows) admissible_count += r.verdict.admissible ? 1 : 0;
  std::cout << fmt::format("region: {} of {} cells admissible\n", admissible_count, rows.size());
  write_run_metadata(dir, "region", c, outputs);
  return kExitOk;
}

int worker_count() {
  const char* env = std::getenv("EMHD_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 256) throw ConfigError("EMHD_WORKERS must be in [1, 256]");
  return static_cast<int>(v);
}

int cmd_sweep(const ExperimentConfig& c) {
  const auto dir = out_dir(c);
  const auto lambdas = c.numbers("lambdas");
  const std::string kind = c.raw("sweep_kind");
  if (kind != "frozen-run" && kind != "run" && kind != "approx") {
    throw ConfigError("sweep_kind must be frozen-run, run or approx");
  }
  if (!c.raw("initial").empty()) throw ConfigError("sweep does not take an initial checkpoint");
  std::vector<ParamSet> params;
  for (double l : lambdas) params.push_back(c.params_for_lambda(l));

  struct Row {
    std::optional<RunOutcome> run;
    double carrier_ratio = std::nan("");
    Grid grid{16, 1.0};
    std::string error;
    int code = kExitOk;
  };
  std::vector<Row> rows(params.size());
  auto work = [&](std::size_t i) {
    const ParamSet& p = params[i];
    try {
      if (kind == "approx") {
        rows[i].grid = grid_for(c, p);
        const ApproxSolution sol(p, rows[i].grid);
        const double t = t_end_for(c, p);
        const double s = p.beta;
        rows[i].carrier_ratio =
            sobolev_norm(sol.abar(t), s, true) / sobolev_norm(sol.abar(0.0), s, true);
      } else {
        rows[i].run = execute_run(c, p, kind == "frozen-run");
        rows[i].grid = rows[i].run->grid;
        rows[i].carrier_ratio = rows[i].run->carrier_ratio;
        rows[i].code = exit_for(rows[i].run->traj.status);
        const auto sub = dir / fmt::format("lambda_{}", num(p.lambda));
        std::filesystem::create_directories(sub);
        std::ofstream csv(sub / "trajectory.csv");
        write_csv(csv, rows[i].run->traj.records);
      }
    } catch (const ResolutionError& e) {
      rows[i].error = e.what();
      rows[i].code = kExitResolution;
    } catch (const NumericError& e) {
      rows[i].error = e.what();
      rows[i].code = kExitNumeric;
    }
  };
  const int workers = std::min<int>(worker_count(), static_cast<int>(std::max<std::size_t>(1, params.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < params.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < params.size(); i = next++) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::ofstream csv(dir / "sweep.csv");
  csv << "lambda,m,gamma_eff,n,box_half_width,t_N,t_end,status,steps,energy_drift,"
         "inflation_ratio,inflation_ratio_max,carrier_ratio,message\n";
  int code = kExitOk;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const ParamSet& p = params[i];
    const Row& r = rows[i];
    if (r.code != kExitOk && code == kExitOk) code = r.code;
    std::string status = r.error.empty() ? "completed" : "error";
    std::string steps, drift, ratio, ratio_max, message = r.error;
    if (r.run) {
      status = to_string(r.run->traj.status);
      steps = std::to_string(r.run->traj.steps);
      drift = num(r.run->energy_drift);
      if (r.run->inflation) {
        ratio = num(r.run->inflation->ratios.back());
        ratio_max = num(r.run->inflation->max_ratio);
      }
      message = r.run->traj.message;
    }
    for (char& ch : message) {
      if (ch == ',') ch = ';';
    }
    csv << num(p.lambda) << ',' << p.m << ',' << num(p.gamma_eff()) << ',' << r.grid.n() << ','
        << num(r.grid.box_half_width()) << ',' << num(inflation_time(p)) << ','
        << num(t_end_for(c, p)) << ',' << status << ',' << steps << ',' << drift << ',' << ratio
        << ',' << ratio_max << ',' << (std::isfinite(r.carrier_ratio) ? num(r.carrier_ratio) : "")
        << ',' << message << '\n';
  }
  csv.close();
  write_run_metadata(dir, "sweep", c, {"sweep.csv"});
  std::cout << fmt::format("sweep: {} runs ({} workers)\n", params.size(), workers);
  return code;
}

int run_command(const std::string& subcommand, const ExperimentConfig& config) {
  try {
    if (subcommand == "init-data") return cmd_init_data(config);
    if (subcommand == "run") return cmd_run(config);
    if (subcommand == "frozen-run") return cmd_frozen_run(config);
    if (subcommand == "approx-scan") return cmd_approx_scan(config);
    if (subcommand == "region") return cmd_region(config);
    if (subcommand == "sweep") return cmd_sweep(config);
    throw ConfigError("unknown subcommand '" + subcommand + "'");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const GridMismatch& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ResolutionError& e) {
    std::cerr << "resolution abort: " << e.what() << '\n';
    return kExitResolution;
  } catch (const NumericError& e) {
    std::cerr << "numeric abort: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace emhd
