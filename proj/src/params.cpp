#include "emhd/params.hpp"

#include <cmath>
#include <fmt/format.h>

#include "emhd/errors.hpp"

namespace emhd {

ParamSet ParamSet::make(double lambda, double beta, double gamma, double zeta) {
  ParamSet p;
  p.lambda = lambda;
  p.beta = beta;
  p.gamma = gamma;
  p.zeta = zeta;
  p.m = (std::isfinite(lambda) && std::isfinite(gamma) && lambda > 0.0)
            ? static_cast<int>(std::lround(std::pow(lambda, gamma)))
            : 0;
  p.validate();
  return p;
}

void ParamSet::validate() const {
  if (!(std::isfinite(lambda) && lambda >= 4.0)) {
    throw ConfigError(fmt::format("constraint lambda >= 4 violated (lambda = {})", lambda));
  }
  if (!(beta > 3.0 && beta < 4.0)) {
    throw ConfigError(fmt::format("constraint beta in (3,4) violated (beta = {})", beta));
  }
  if (!(gamma > 1.0)) {
    throw ConfigError(fmt::format("constraint gamma > 1 violated (gamma = {})", gamma));
  }
  if (!(zeta > 0.0 && zeta < 5.0 - beta)) {
    throw ConfigError(
        fmt::format("constraint zeta in (0, 5-beta) violated (zeta = {}, beta = {})", zeta, beta));
  }
  if (m != std::lround(std::pow(lambda, gamma))) {
    throw ConfigError(fmt::format("constraint m = round(lambda^gamma) violated (m = {})", m));
  }
  if (m < 2) throw ConfigError(fmt::format("constraint m >= 2 violated (m = {})", m));
}

double ParamSet::gamma_eff() const { return std::log(static_cast<double>(m)) / std::log(lambda); }

}  // namespace emhd
