#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "emhd/grid.hpp"

namespace emhd {

using Complex = std::complex<double>;
/// Half-spectrum coefficients in Grid's real-to-complex layout.
using Spectrum = std::vector<Complex>;

/// Real scalar field on a periodic grid with its Fourier coefficients.
///
/// Coefficients are normalized so that f(x) = sum_k c_k exp(i k (x + L)),
/// i.e. c_0 is the box mean. A Field built by any factory is synchronized;
/// writing through values_mut() drops the coefficients until sync().
class Field {
 public:
  explicit Field(const Grid& grid);  // zero field

  static Field from_values(const Grid& grid, std::vector<double> values);
  static Field from_coefficients(const Grid& grid, Spectrum coefficients);
  /// Samples f(x, y) at every grid point.
  static Field sample(const Grid& grid, const std::function<double(double, double)>& f);
  /// Rebuilds a field from stored samples and coefficients without transforming
  /// (used by checkpoint restore; the pair must come from one synchronized field).
  static Field restore(const Grid& grid, std::vector<double> values, Spectrum coefficients);

  const Grid& grid() const { return grid_; }
  bool synchronized() const { return synchronized_; }

  std::span<const double> values() const { return values_; }
  /// Throws NumericError when the field is not synchronized.
  std::span<const Complex> coefficients() const;

  /// Mutable access to the samples; the field becomes unsynchronized.
  std::span<double> values_mut();
  /// Recomputes the coefficients from the current samples.
  void sync();

  double max_abs() const;
  double mean() const;
  /// Riemann-sum L2 norm over the box (spectrally exact for periodic data).
  double l2_quadrature() const;
  bool all_finite() const;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(double factor);

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(Field a, double s) { return a *= s; }
  friend Field operator*(double s, Field a) { return a *= s; }

 private:
  Field(const Grid& grid, std::vector<double> values, Spectrum coefficients);

  Grid grid_;
  std::vector<double> values_;
  Spectrum coefficients_;
  bool synchronized_ = true;
};

/// Two-component field sharing one grid.
struct VectorField {
  Field x;
  Field y;

  VectorField(Field x_component, Field y_component);
  const Grid& grid() const { return x.grid(); }
};

}  // namespace emhd
