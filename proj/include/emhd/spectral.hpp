#pragma once

#include <span>
#include <vector>

#include "emhd/field.hpp"

namespace emhd {

// Transforms with the Field normalization (forward divides by n^2).
Spectrum forward_transform(const Grid& grid, std::span<const double> values);
std::vector<double> inverse_transform(const Grid& grid, std::span<const Complex> coefficients);

/// Multiplies coefficients by (i kx)^order_x (i ky)^order_y. Odd orders
/// annihilate the corresponding Nyquist row/column.
Spectrum spectral_derivative(const Grid& grid, std::span<const Complex> coefficients,
                             int order_x, int order_y);

/// Spectral partial derivative, order_x + order_y <= 4.
Field derivative(const Field& f, int order_x, int order_y);
Field laplacian(const Field& f);
/// (-d_y f, d_x f).
VectorField gradient_perp(const Field& f);
VectorField gradient(const Field& f);
Field divergence(const VectorField& v);

/// Dealiased grad^perp f . grad g.
Field poisson_bracket(const Field& f, const Field& g);

/// Zeroes every mode with max(|kx|, |ky|) above 2/3 of the Nyquist index.
Field dealias(const Field& f);
void dealias_in_place(const Grid& grid, std::span<Complex> coefficients);

/// Sobolev norm from Fourier multipliers: weight |k|^s (homogeneous, zero
/// mode excluded) or (1 + |k|^2)^{s/2}.
double sobolev_norm(const Field& f, double s, bool homogeneous);
/// Same as sobolev_norm for several orders in one pass over the spectrum.
std::vector<double> sobolev_norms(const Field& f, std::span<const double> orders,
                                  bool homogeneous);
/// Component-wise sum of squares.
double sobolev_norm(const VectorField& v, double s, bool homogeneous);

/// Coefficient-space L2 norm (Parseval).
double l2_spectral(const Field& f);
/// Zero-mode magnitude in L2 units, |c_0| * |box|^{1/2}.
double mean_mode_l2(const Field& f);

}  // namespace emhd
