#pragma once

namespace emhd {

/// Construction parameters of the initial data.
struct ParamSet {
  double lambda = 8.0;  // frequency parameter
  double beta = 3.5;    // regularity index
  double gamma = 1.2;   // oscillation exponent
  double zeta = 1.485;  // inflation-time exponent, t_N = lambda^-zeta
  int m = 12;           // realized azimuthal wavenumber, round(lambda^gamma)

  /// Builds a ParamSet with m = round(lambda^gamma) and validates it.
  static ParamSet make(double lambda, double beta, double gamma, double zeta);

  /// Throws ConfigError naming the first violated constraint.
  void validate() const;
  /// ln m / ln lambda.
  double gamma_eff() const;
};

}  // namespace emhd
