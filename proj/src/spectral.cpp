#include "emhd/spectral.hpp"

#include <cmath>
#include <string>

#include "emhd/errors.hpp"
#include "fft.hpp"

namespace emhd {
namespace {

void require_ready(const Field& f) {
  if (!f.synchronized()) throw NumericError("field is not synchronized");
  if (!f.all_finite()) throw NumericError("field contains NaN or Inf");
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw GridMismatch("operands live on different grids");
}

Complex i_pow(int order) {
  switch (order % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

Spectrum forward_transform(const Grid& grid, std::span<const double> values) {
  if (values.size() != grid.size()) throw GridMismatch("value count does not match grid");
  Spectrum out(grid.spectral_size());
  detail::fft_r2c(grid.n(), values.data(), out.data());
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (Complex& c : out) c *= scale;
  return out;
}

std::vector<double> inverse_transform(const Grid& grid, std::span<const Complex> coefficients) {
  if (coefficients.size() != grid.spectral_size()) {
    throw GridMismatch("coefficient count does not match grid");
  }
  Spectrum scratch(coefficients.begin(), coefficients.end());
  std::vector<double> out(grid.size());
  detail::fft_c2r(grid.n(), scratch.data(), out.data());
  return out;
}

Spectrum spectral_derivative(const Grid& grid, std::span<const Complex> coefficients,
                             int order_x, int order_y) {
  const std::size_t n = grid.n();
  const std::size_t cols = grid.spectral_cols();
  Spectrum out(coefficients.begin(), coefficients.end());
  if (order_x == 0 && order_y == 0) return out;

  const Complex phase = i_pow(order_x + order_y);
  std::vector<double> ky_pow(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    ky_pow[j] = (order_y % 2 == 1 && grid.is_nyquist_col(j)) ? 0.0
                                                                : std::pow(grid.ky(j), order_y);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double kx_pow = (order_x % 2 == 1 && grid.is_nyquist_row(i))
                              ? 0.0
                              : std::pow(grid.kx(i), order_x);
    Complex* row = out.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) row[j] *= phase * (kx_pow * ky_pow[j]);
  }
  return out;
}

Field derivative(const Field& f, int order_x, int order_y) {
  if (order_x < 0 || order_y < 0 || order_x + order_y > 4) {
    throw ConfigError("derivative order must be non-negative with total <= 4");
  }
  require_ready(f);
  return Field::from_coefficients(
      f.grid(), spectral_derivative(f.grid(), f.coefficients(), order_x, order_y));
}

Field laplacian(const Field& f) {
  require_ready(f);
  auto xx = spectral_derivative(f.grid(), f.coefficients(), 2, 0);
  const auto yy = spectral_derivative(f.grid(), f.coefficients(), 0, 2);
  for (std::size_t k = 0; k < xx.size(); ++k) xx[k] += yy[k];
  return Field::from_coefficients(f.grid(), std::move(xx));
}

VectorField gradient_perp(const Field& f) {
  require_ready(f);
  auto dy = spectral_derivative(f.grid(), f.coefficients(), 0, 1);
  for (Complex& c : dy) c = -c;
  return {Field::from_coefficients(f.grid(), std::move(dy)), derivative(f, 1, 0)};
}

VectorField gradient(const Field& f) { return {derivative(f, 1, 0), derivative(f, 0, 1)}; }

Field divergence(const VectorField& v) {
  require_ready(v.x);
  require_ready(v.y);
  const Grid& grid = v.grid();
  auto dx = spectral_derivative(grid, v.x.coefficients(), 1, 0);
  const auto dy = spectral_derivative(grid, v.y.coefficients(), 0, 1);
  for (std::size_t k = 0; k < dx.size(); ++k) dx[k] += dy[k];
  return Field::from_coefficients(grid, std::move(dx));
}

Field poisson_bracket(const Field& f, const Field& g) {
  require_same_grid(f.grid(), g.grid());
  require_ready(f);
  require_ready(g);
  const Grid& grid = f.grid();
  const auto fx = inverse_transform(grid, spectral_derivative(grid, f.coefficients(), 1, 0));
  const auto fy = inverse_transform(grid, spectral_derivative(grid, f.coefficients(), 0, 1));
  const auto gx = inverse_transform(grid, spectral_derivative(grid, g.coefficients(), 1, 0));
  const auto gy = inverse_transform(grid, spectral_derivative(grid, g.coefficients(), 0, 1));
  std::vector<double> product(grid.size());
  for (std::size_t k = 0; k < product.size(); ++k) product[k] = -fy[k] * gx[k] + fx[k] * gy[k];
  auto coefficients = forward_transform(grid, product);
  dealias_in_place(grid, coefficients);
  return Field::from_coefficients(grid, std::move(coefficients));
}

void dealias_in_place(const Grid& grid, std::span<Complex> coefficients) {
  const long cutoff = grid.dealias_cutoff_index();
  const std::size_t n = grid.n();
  const std::size_t cols = grid.spectral_cols();
  for (std::size_t i = 0; i < n; ++i) {
    const bool row_out = std::labs(grid.kx_index(i)) > cutoff;
    Complex* row = coefficients.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (row_out || grid.ky_index(j) > cutoff) row[j] = 0.0;
    }
  }
}

Field dealias(const Field& f) {
  if (!f.synchronized()) throw NumericError("field is not synchronized");
  Spectrum c(f.coefficients().begin(), f.coefficients().end());
  dealias_in_place(f.grid(), c);
  return Field::from_coefficients(f.grid(), std::move(c));
}

double mean_mode_l2(const Field& f) {
  return std::abs(f.coefficients()[0]) * std::sqrt(f.grid().box_area());
}

double l2_spectral(const Field& f) {
  const double zero[] = {0.0};
  return sobolev_norms(f, zero, false)[0];
}

std::vector<double> sobolev_norms(const Field& f, std::span<const double> orders,
                                  bool homogeneous) {
  if (!f.synchronized()) throw NumericError("field is not synchronized");
  const Grid& grid = f.grid();
  const auto coeffs = f.coefficients();
  const std::size_t n = grid.n();
  const std::size_t cols = grid.spectral_cols();

  bool any_negative = false;
  for (double s : orders) any_negative |= (s < 0.0);
  if (homogeneous && any_negative) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        total += grid.column_weight(j) * std::norm(coeffs[grid.spectral_index(i, j)]);
      }
    }
    const double l2 = std::sqrt(total * grid.box_area());
    if (mean_mode_l2(f) >= 1e-10 * l2 && l2 > 0.0) {
      throw NumericError("negative-order homogeneous norm needs a zero-mean field");
    }
  }

  std::vector<double> sums(orders.size(), 0.0);
  std::vector<double> ky2(cols);
  for (std::size_t j = 0; j < cols; ++j) ky2[j] = grid.ky(j) * grid.ky(j);
  for (std::size_t i = 0; i < n; ++i) {
    const double kx2 = grid.kx(i) * grid.kx(i);
    const Complex* row = coeffs.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) {
      const double power = std::norm(row[j]);
      if (power == 0.0) continue;
      const double k2 = kx2 + ky2[j];
      const double weighted = grid.column_weight(j) * power;
      if (homogeneous && k2 == 0.0) {
        // |k|^0 = 1 keeps the mean in the s = 0 norm; other orders drop it.
        for (std::size_t q = 0; q < orders.size(); ++q) {
          if (orders[q] == 0.0) sums[q] += weighted;
        }
        continue;
      }
      const double base = homogeneous ? k2 : 1.0 + k2;
      for (std::size_t q = 0; q < orders.size(); ++q) {
        const double s = orders[q];
        sums[q] += weighted * (s == 0.0 ? 1.0 : std::pow(base, s));
      }
    }
  }
  for (double& v : sums) v = std::sqrt(v * grid.box_area());
  return sums;
}

double sobolev_norm(const Field& f, double s, bool homogeneous) {
  const double order[] = {s};
  return sobolev_norms(f, order, homogeneous)[0];
}

double sobolev_norm(const VectorField& v, double s, bool homogeneous) {
  return std::hypot(sobolev_norm(v.x, s, homogeneous), sobolev_norm(v.y, s, homogeneous));
}

}  // namespace emhd
