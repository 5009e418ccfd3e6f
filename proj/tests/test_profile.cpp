#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "emhd/profile.hpp"

using namespace emhd;
using boost::math::quadrature::gauss_kronrod;

namespace {

double integrate(const auto& f, double a, double b) {
  return gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

}  // namespace

TEST_CASE("g is the sharpness-8 unit bump on (2, 3)") {
  const BumpProfile p;
  CHECK(p.g(2.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.g(2.0) == 0.0);
  CHECK(p.g(3.0) == 0.0);
  CHECK(p.g(1.5) == 0.0);
  CHECK(p.g(3.7) == 0.0);
  for (double rho : {2.1, 2.3, 2.77, 2.95}) {
    const double y = 2.0 * (rho - 2.5);
    CHECK(p.g(rho) == doctest::Approx(std::exp(8.0 - 8.0 / (1.0 - y * y))).epsilon(1e-14));
  }
}

TEST_CASE("h' integrates to zero over its support") {
  const BumpProfile p;
  const auto hp = [&](double r) { return p.h_prime(r); };
  // Split at the kinks of the piecewise definition.
  const double total = integrate(hp, 1.0, 2.0) + integrate(hp, 2.0, 3.0) + integrate(hp, 3.0, 4.0);
  CHECK(std::abs(total) < 1e-10);
}

TEST_CASE("h is the antiderivative of h' and vanishes outside (1.05, 3.95)") {
  const BumpProfile p;
  const auto hp = [&](double r) { return p.h_prime(r); };
  for (double rho : {1.3, 1.9, 2.0, 2.4, 3.0, 3.2, 3.5, 3.8}) {
    double ref = 0.0;
    double lo = p.h_support_lo();
    for (double knot : {2.0, 3.0}) {
      if (rho > knot && lo < knot) {
        ref += integrate(hp, lo, knot);
        lo = knot;
      }
    }
    ref += integrate(hp, lo, rho);
    CHECK(p.h(rho) == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
  }
  CHECK(p.h(1.0) == 0.0);
  CHECK(p.h(3.95) == 0.0);
  CHECK(p.h(4.2) == 0.0);
}

TEST_CASE("h' equals 1 on [2, 3] so b0 rotates g's support rigidly per radius") {
  const BumpProfile p;
  for (double rho : {2.0, 2.25, 2.5, 2.99, 3.0}) CHECK(p.h_prime(rho) == 1.0);
  for (double rho : {2.0, 2.5, 3.0}) {
    CHECK(p.drift_shear(rho) == doctest::Approx(-1.0 / (rho * rho)).epsilon(1e-12));
  }
}

TEST_CASE("profile derivatives agree with central differences") {
  const BumpProfile p;
  const double e = 1e-6;
  for (double rho : {1.2, 1.7, 2.2, 2.6, 2.9, 3.3, 3.6, 3.9}) {
    CHECK(p.g_prime(rho) == doctest::Approx((p.g(rho + e) - p.g(rho - e)) / (2 * e)).epsilon(1e-6).scale(1.0));
    CHECK(p.h_prime(rho) == doctest::Approx((p.h(rho + e) - p.h(rho - e)) / (2 * e)).epsilon(1e-6).scale(1.0));
    CHECK(p.h_second(rho) ==
          doctest::Approx((p.h_prime(rho + e) - p.h_prime(rho - e)) / (2 * e)).epsilon(1e-5).scale(1.0));
    const auto w = [&](double r) { return p.h_prime(r) / r; };
    CHECK(p.drift_shear(rho) == doctest::Approx((w(rho + e) - w(rho - e)) / (2 * e)).epsilon(1e-5).scale(1.0));
  }
}
