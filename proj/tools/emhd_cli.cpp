#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "emhd/app.hpp"
#include "emhd/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral 2.5D electron MHD simulator and norm-inflation checks"};
  app.set_version_flag("--version", std::string(emhd::kVersion));
  app.require_subcommand(1);

  const char* names[] = {"init-data", "run", "frozen-run", "approx-scan", "region", "sweep"};
  const char* help[] = {"build initial data, write checkpoint and norm report",
                        "full nonlinear run",
                        "frozen-velocity transport run",
                        "norm scans of the closed-form carrier with slope fits",
                        "exact-arithmetic admissible-region table",
                        "multi-lambda aggregate"};
  std::string config_file;
  std::map<std::string, std::string> overrides;
  std::map<std::string, CLI::App*> subs;
  for (int i = 0; i < 6; ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("-c,--config", config_file, "key = value configuration file");
    for (const auto& key : emhd::config_keys()) {
      sub->add_option_function<std::string>(
          std::string("--") + key.name,
          [&overrides, name = std::string(key.name)](const std::string& v) { overrides[name] = v; },
          key.help);
    }
    subs[names[i]] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : emhd::kExitConfig;
  }

  std::string chosen;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) chosen = name;
  }
  emhd::ExperimentConfig config;
  try {
    if (!config_file.empty()) config.load_file(config_file);
    for (const auto& [k, v] : overrides) config.set(k, v);
  } catch (const emhd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return emhd::kExitConfig;
  }
  return emhd::run_command(chosen, config);
}
