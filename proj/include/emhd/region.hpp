#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace emhd {

using Rational = boost::multiprecision::cpp_rational;

/// Exact parse of "3.5", "-0.125", "1e-3", "2.5E2" or "7/2". Throws ConfigError.
Rational parse_rational(const std::string& text);
/// "p/q" in lowest terms ("p" when q = 1).
std::string fraction_string(const Rational& r);
double to_double(const Rational& r);

struct ConstraintCheck {
  std::string name;
  bool satisfied = false;
};

/// beta_range: 3 < beta < 4; gamma_gt_1: gamma > 1; zeta_range: 0 < zeta < 5 - beta.
std::vector<ConstraintCheck> base_constraints(const Rational& beta, const Rational& gamma,
                                              const Rational& zeta);

/// zeta >= ((5 - beta)(4 + beta) + (4 - beta) gamma) / (5 + beta)   (non-strict).
Rational zeta_lb_baru(const Rational& beta, const Rational& gamma);
/// zeta > (10 gamma (4 - beta) + 36 (5 - beta)) / 41   (strict).
Rational zeta_lb_perturb(const Rational& beta, const Rational& gamma);
/// zeta > 10/41 gamma (4 - beta) + max(36/41, (4 + beta)/(5 + beta)) (5 - beta)   (strict).
Rational zeta_lb_combined(const Rational& beta, const Rational& gamma);

struct GammaWindows {
  Rational baru;      // (5 - beta) / (4 - beta)
  Rational perturb;   // (5 - beta) / (2 (4 - beta))
  Rational balance;   // 41 (5 - beta) / (10 (5 + beta)(4 - beta))
  Rational combined;  // min(perturb, balance)
};
/// Requires 3 < beta < 4 (ConfigError otherwise).
GammaWindows gamma_windows(const Rational& beta);

struct RegionVerdict {
  bool admissible = false;
  /// Present exactly when admissible; the upper end 5 - beta is excluded.
  std::optional<std::pair<Rational, Rational>> zeta_interval;
  /// Whether the lower endpoint itself is allowed (only when the non-strict
  /// bound is the largest one).
  bool lower_inclusive = false;
  /// Names of violated constraints, or of the active lower bound when admissible.
  std::vector<std::string> binding_constraints;
  /// Every evaluated bound by name.
  std::vector<std::pair<std::string, Rational>> values;

  std::optional<Rational> value(const std::string& name) const;
};

RegionVerdict admissible(const Rational& beta, const Rational& gamma);

/// Whether a given zeta satisfies base constraints and both lower bounds individually.
bool zeta_passes_all(const Rational& beta, const Rational& gamma, const Rational& zeta);

struct RegionRow {
  Rational beta, gamma;
  RegionVerdict verdict;
};

std::vector<RegionRow> region_sweep(const std::vector<Rational>& betas,
                                    const std::vector<Rational>& gammas);
/// Header: beta,gamma,beta_frac,gamma_frac,admissible,zeta_lo,zeta_lo_frac,zeta_hi,
/// zeta_hi_frac,lower_inclusive,binding. Endpoints are filled whenever beta is in range.
void write_region_csv(std::ostream& os, const std::vector<RegionRow>& rows);

struct ImplicationReport {
  std::size_t cells = 0;
  std::size_t violations = 0;
  std::vector<std::pair<Rational, Rational>> counterexamples;
};

/// Checks on an nb x ng grid of rational (beta, gamma) in (3, 4) x (1, 3) that the
/// combined lower bound dominates both individual ones.
ImplicationReport check_combined_implication(int nb, int ng);

}  // namespace emhd
