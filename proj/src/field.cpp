#include "emhd/field.hpp"

#include <algorithm>
#include <cmath>

#include "emhd/errors.hpp"
#include "emhd/spectral.hpp"

namespace emhd {

Field::Field(const Grid& grid)
    : grid_(grid), values_(grid.size(), 0.0), coefficients_(grid.spectral_size()) {}

Field::Field(const Grid& grid, std::vector<double> values, Spectrum coefficients)
    : grid_(grid), values_(std::move(values)), coefficients_(std::move(coefficients)) {}

Field Field::from_values(const Grid& grid, std::vector<double> values) {
  if (values.size() != grid.size()) throw GridMismatch("value count does not match grid");
  auto coefficients = forward_transform(grid, values);
  return Field(grid, std::move(values), std::move(coefficients));
}

Field Field::from_coefficients(const Grid& grid, Spectrum coefficients) {
  if (coefficients.size() != grid.spectral_size()) {
    throw GridMismatch("coefficient count does not match grid");
  }
  auto values = inverse_transform(grid, coefficients);
  return Field(grid, std::move(values), std::move(coefficients));
}

Field Field::restore(const Grid& grid, std::vector<double> values, Spectrum coefficients) {
  if (values.size() != grid.size() || coefficients.size() != grid.spectral_size()) {
    throw GridMismatch("restored arrays do not match grid");
  }
  return Field(grid, std::move(values), std::move(coefficients));
}

Field Field::sample(const Grid& grid, const std::function<double(double, double)>& f) {
  std::vector<double> values(grid.size());
  const std::size_t n = grid.n();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.x(i);
    for (std::size_t j = 0; j < n; ++j) values[grid.index(i, j)] = f(x, grid.y(j));
  }
  return from_values(grid, std::move(values));
}

std::span<const Complex> Field::coefficients() const {
  if (!synchronized_) throw NumericError("field coefficients are out of date; call sync()");
  return coefficients_;
}

std::span<double> Field::values_mut() {
  synchronized_ = false;
  return values_;
}

void Field::sync() {
  coefficients_ = forward_transform(grid_, values_);
  synchronized_ = true;
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double Field::mean() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

double Field::l2_quadrature() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s * grid_.dx() * grid_.dx());
}

bool Field::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

Field& Field::operator+=(const Field& other) {
  if (!(grid_ == other.grid_)) throw GridMismatch("field grids differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  if (synchronized_ && other.synchronized_) {
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  } else {
    synchronized_ = false;
  }
  return *this;
}

Field& Field::operator-=(const Field& other) {
  if (!(grid_ == other.grid_)) throw GridMismatch("field grids differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  if (synchronized_ && other.synchronized_) {
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  } else {
    synchronized_ = false;
  }
  return *this;
}

Field& Field::operator*=(double factor) {
  for (double& v : values_) v *= factor;
  for (Complex& c : coefficients_) c *= factor;
  return *this;
}

VectorField::VectorField(Field x_component, Field y_component)
    : x(std::move(x_component)), y(std::move(y_component)) {
  if (!(x.grid() == y.grid())) throw GridMismatch("vector components live on different grids");
}

}  // namespace emhd
