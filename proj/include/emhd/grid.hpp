#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

namespace emhd {

/// Periodic square box [-L, L)^2 sampled with n points per dimension.
///
/// Physical samples are stored row-major with x as the slow index. Spectral
/// coefficients use the real-to-complex half layout: n rows in kx and
/// n/2 + 1 columns in ky >= 0.
class Grid {
 public:
  Grid(std::size_t n, double box_half_width);

  std::size_t n() const { return n_; }
  double box_half_width() const { return half_width_; }
  double dx() const { return 2.0 * half_width_ / static_cast<double>(n_); }
  double box_area() const { return 4.0 * half_width_ * half_width_; }
  /// Wavenumber spacing pi / L.
  double k0() const { return std::numbers::pi / half_width_; }
  /// Largest resolved wavenumber along one axis (Nyquist), pi n / (2L).
  double k_nyquist() const { return k0() * static_cast<double>(n_ / 2); }

  std::size_t size() const { return n_ * n_; }
  std::size_t spectral_cols() const { return n_ / 2 + 1; }
  std::size_t spectral_size() const { return n_ * spectral_cols(); }

  double x(std::size_t i) const { return -half_width_ + dx() * static_cast<double>(i); }
  double y(std::size_t j) const { return x(j); }
  std::size_t index(std::size_t i, std::size_t j) const { return i * n_ + j; }
  std::size_t spectral_index(std::size_t i, std::size_t j) const {
    return i * spectral_cols() + j;
  }

  /// Signed integer wavenumber index of spectral row i.
  long kx_index(std::size_t i) const {
    return i <= n_ / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n_);
  }
  long ky_index(std::size_t j) const { return static_cast<long>(j); }
  double kx(std::size_t i) const { return k0() * static_cast<double>(kx_index(i)); }
  double ky(std::size_t j) const { return k0() * static_cast<double>(ky_index(j)); }
  bool is_nyquist_row(std::size_t i) const { return i == n_ / 2; }
  bool is_nyquist_col(std::size_t j) const { return j == n_ / 2; }
  /// Multiplicity of column j in the half spectrum (conjugate partner not stored).
  double column_weight(std::size_t j) const {
    return (j == 0 || j == n_ / 2) ? 1.0 : 2.0;
  }

  /// Largest retained integer index under the square 2/3 rule.
  long dealias_cutoff_index() const { return static_cast<long>(n_) / 3; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.half_width_ == b.half_width_;
  }

 private:
  std::size_t n_;
  double half_width_;
};

}  // namespace emhd
