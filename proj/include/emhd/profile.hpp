#pragma once

#include <vector>

namespace emhd {

/// Radial profiles g and h of the initial data, in the scaled variable rho = lambda r.
///
/// g is a unit-height mollifier supported in (2, 3). h' = chi - c phi, where
/// chi is a smooth plateau (1 on [2, 3], supported in (1.05, 3.95)) and phi a
/// bump on (3, 3.95) weighted so that h(rho) = int_1^rho h' vanishes
/// for rho >= 3.95.
class BumpProfile {
 public:
  BumpProfile();

  double g(double rho) const;
  double g_prime(double rho) const;
  double h(double rho) const;
  double h_prime(double rho) const;
  double h_second(double rho) const;
  /// d/drho (h'(rho) / rho): the radial shear of the angular drift.
  double drift_shear(double rho) const;

  double g_support_lo() const { return 2.0; }
  double g_support_hi() const { return 3.0; }
  double h_support_lo() const { return 1.05; }
  double h_support_hi() const { return 3.95; }
  /// Weight c of the compensating lobe.
  double lobe_weight() const { return lobe_weight_; }

 private:
  double ramp_integral(double x) const;  // int_0^x smoothstep
  double lobe_integral(double y) const;  // int_{-1}^y unit bump

  double lobe_weight_ = 0.0;
  std::vector<double> ramp_table_;
  std::vector<double> lobe_table_;
};

}  // namespace emhd
