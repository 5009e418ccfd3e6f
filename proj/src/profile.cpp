#include "emhd/profile.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

namespace emhd {
namespace {

constexpr std::size_t kTableCells = 4096;

// exp(-1/x) for x > 0.
double kernel(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
double kernel_prime(double x) { return x > 0.0 ? std::exp(-1.0 / x) / (x * x) : 0.0; }

// Smoothstep 0 -> 1 on [0, 1].
double smoothstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = kernel(x);
  const double b = kernel(1.0 - x);
  return a / (a + b);
}

double smoothstep_prime(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double a = kernel(x);
  const double b = kernel(1.0 - x);
  const double da = kernel_prime(x);
  const double db = -kernel_prime(1.0 - x);
  return (da * b - a * db) / ((a + b) * (a + b));
}

// Unit-height bump exp(c - c/(1 - y^2)) on (-1, 1).
template <int C>
double unit_bump(double y) {
  const double q = 1.0 - y * y;
  return q > 0.0 ? std::exp(C - C / q) : 0.0;
}

template <int C>
double unit_bump_prime(double y) {
  const double q = 1.0 - y * y;
  return q > 0.0 ? unit_bump<C>(y) * (-2.0 * C * y) / (q * q) : 0.0;
}

// Cumulative integral of f over [lo, hi] on a uniform table.
template <class F>
std::vector<double> cumulative(F f, double lo, double hi) {
  std::vector<double> table(kTableCells + 1, 0.0);
  const double w = (hi - lo) / kTableCells;
  for (std::size_t c = 0; c < kTableCells; ++c) {
    const double a = lo + w * static_cast<double>(c);
    table[c + 1] = table[c] + boost::math::quadrature::gauss<double, 10>::integrate(f, a, a + w);
  }
  return table;
}

// Cubic Hermite interpolation of the tabulated antiderivative, using the
// exact integrand as the node derivative.
template <class F>
double interpolate(const std::vector<double>& table, F f, double lo, double hi, double x) {
  if (x <= lo) return 0.0;
  if (x >= hi) return table.back();
  const double w = (hi - lo) / kTableCells;
  const double u = (x - lo) / w;
  std::size_t c = static_cast<std::size_t>(u);
  if (c >= kTableCells) c = kTableCells - 1;
  const double t = u - static_cast<double>(c);
  const double x0 = lo + w * static_cast<double>(c);
  const double p0 = table[c], p1 = table[c + 1];
  const double m0 = f(x0) * w, m1 = f(x0 + w) * w;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * p0 + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * p1 +
         (t3 - t2) * m1;
}

// g uses sharpness 8, the lobe sharpness 3; both keep the spectra of a0 and
// u0 below 1e-7 (relative energy) past 0.58 of the Nyquist wavenumber on the
// default grid at n = 512.
constexpr int kGSharpness = 8;
constexpr int kLobeSharpness = 3;
constexpr double kRiseLo = 1.05;
constexpr double kFallHi = 3.95;
constexpr double kRampWidth = 2.0 - kRiseLo;  // equals kFallHi - 3
constexpr double kLobeCenter = 0.5 * (3.0 + kFallHi);
constexpr double kLobeHalfWidth = 0.5 * (kFallHi - 3.0);

double plateau(double rho) {
  if (rho <= kRiseLo || rho >= kFallHi) return 0.0;
  if (rho < 2.0) return smoothstep((rho - kRiseLo) / kRampWidth);
  if (rho <= 3.0) return 1.0;
  return smoothstep((kFallHi - rho) / kRampWidth);
}

double plateau_prime(double rho) {
  if (rho <= kRiseLo || rho >= kFallHi) return 0.0;
  if (rho < 2.0) return smoothstep_prime((rho - kRiseLo) / kRampWidth) / kRampWidth;
  if (rho <= 3.0) return 0.0;
  return -smoothstep_prime((kFallHi - rho) / kRampWidth) / kRampWidth;
}

double lobe(double rho) { return unit_bump<kLobeSharpness>((rho - kLobeCenter) / kLobeHalfWidth); }
double lobe_prime(double rho) {
  return unit_bump_prime<kLobeSharpness>((rho - kLobeCenter) / kLobeHalfWidth) / kLobeHalfWidth;
}

}  // namespace

BumpProfile::BumpProfile() {
  ramp_table_ = cumulative(smoothstep, 0.0, 1.0);
  lobe_table_ = cumulative(unit_bump<kLobeSharpness>, -1.0, 1.0);
  // int chi = 1 (plateau) + 2 * ramp width * int_0^1 smoothstep.
  const double plateau_mass = 1.0 + 2.0 * kRampWidth * ramp_table_.back();
  lobe_weight_ = plateau_mass / (kLobeHalfWidth * lobe_table_.back());
}

double BumpProfile::ramp_integral(double x) const {
  return interpolate(ramp_table_, smoothstep, 0.0, 1.0, x);
}

double BumpProfile::lobe_integral(double y) const {
  return interpolate(lobe_table_, unit_bump<kLobeSharpness>, -1.0, 1.0, y);
}

double BumpProfile::g(double rho) const { return unit_bump<kGSharpness>(2.0 * (rho - 2.5)); }
double BumpProfile::g_prime(double rho) const {
  return 2.0 * unit_bump_prime<kGSharpness>(2.0 * (rho - 2.5));
}

double BumpProfile::h_prime(double rho) const {
  return plateau(rho) - lobe_weight_ * lobe(rho);
}

double BumpProfile::h_second(double rho) const {
  return plateau_prime(rho) - lobe_weight_ * lobe_prime(rho);
}

double BumpProfile::h(double rho) const {
  if (rho <= kRiseLo || rho >= kFallHi) return 0.0;
  double chi_mass;
  if (rho < 2.0) {
    chi_mass = kRampWidth * ramp_integral((rho - kRiseLo) / kRampWidth);
  } else if (rho <= 3.0) {
    chi_mass = kRampWidth * ramp_table_.back() + (rho - 2.0);
  } else {
    const double half = kRampWidth * ramp_table_.back();
    const double tail = kRampWidth * ramp_integral((kFallHi - rho) / kRampWidth);
    chi_mass = half + 1.0 + (half - tail);
  }
  const double lobe_mass =
      rho <= kLobeCenter - kLobeHalfWidth
          ? 0.0
          : kLobeHalfWidth * lobe_integral((rho - kLobeCenter) / kLobeHalfWidth);
  return chi_mass - lobe_weight_ * lobe_mass;
}

double BumpProfile::drift_shear(double rho) const {
  return (h_second(rho) * rho - h_prime(rho)) / (rho * rho);
}

}  // namespace emhd
