#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "stadium/errors.hpp"
#include "stadium/special_functions.hpp"

using namespace stadium::special;
using stadium::DomainError;
using std::numbers::pi;

namespace {

double si_oracle(double x) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate([](double s) { return s == 0.0 ? 1.0 : std::sin(s) / s; }, 0.0, x);
}

// Ci(x) = gamma + log x + int_0^x (cos s - 1)/s ds.
double ci_oracle(double x) {
  auto f = [](double s) { return s < 1e-8 ? -0.5 * s : (std::cos(s) - 1.0) / s; };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, x, 12, 1e-14);
  return std::numbers::egamma + std::log(x) + integral;
}

double cl2_oracle(double x) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return -ts.integrate([](double s) { return std::log(2.0 * std::sin(0.5 * s)); }, 0.0, x);
}

// K(k) = int_0^{pi/2} (1 - k^2 sin^2 theta)^{-1/2}; the radicand stays in the
// right half-plane for |k| < 1, so the principal root is the right branch.
std::complex<double> k_oracle(std::complex<double> k) {
  using C = std::complex<double>;
  auto re = [k](double th) { return std::real(1.0 / std::sqrt(C(1.0) - k * k * std::sin(th) * std::sin(th))); };
  auto im = [k](double th) { return std::imag(1.0 / std::sqrt(C(1.0) - k * k * std::sin(th) * std::sin(th))); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  return {GK::integrate(re, 0.0, pi / 2, 12, 1e-14), GK::integrate(im, 0.0, pi / 2, 12, 1e-14)};
}

}  // namespace

TEST_CASE("Chebyshev polynomials against trigonometric forms") {
  for (double th = 0.05; th < pi; th += 0.17) {
    const double t = std::cos(th);
    for (int n = 0; n <= 40; ++n) {
      CHECK(chebyshev_T(n, t) == doctest::Approx(std::cos(n * th)).epsilon(1e-12).scale(1.0));
      CHECK(chebyshev_U(n, t) ==
            doctest::Approx(std::sin((n + 1) * th) / std::sin(th)).epsilon(1e-11).scale(n + 1.0));
    }
  }
  CHECK(chebyshev_U(5, 1.0) == 6.0);
  CHECK(chebyshev_U(5, -1.0) == -6.0);
  CHECK(chebyshev_T(7, -1.0) == -1.0);
  CHECK_THROWS_AS(chebyshev_T(-1, 0.0), DomainError);
  CHECK_THROWS_AS(chebyshev_T(2, 1.5), DomainError);
}

TEST_CASE("Si and Ci reference values") {
  CHECK(std::abs(sin_integral(pi) - 1.8519370519824662) < 1e-14);
  CHECK(std::abs(cos_integral(1.0) - 0.3374039229009681) < 1e-14);
  CHECK(sin_integral(0.0) == 0.0);
  CHECK(std::abs(sin_integral(1e6) - pi / 2) < 2e-6);
}

TEST_CASE("Si and Ci against quadrature on a grid spanning both branches") {
  for (double x : {1e-6, 1e-3, 0.1, 0.5, 1.0, 2.0, 3.9, 4.0, 4.1, 7.5, 12.0, 30.0, 100.0, 804.2}) {
    CAPTURE(x);
    CHECK(std::abs(sin_integral(x) - si_oracle(x)) < 1e-13);
    CHECK(std::abs(cos_integral(x) - ci_oracle(x)) < 1e-12);
  }
}

TEST_CASE("Si and Ci derivatives by central differences") {
  for (double x : {0.3, 2.0, 3.99, 4.01, 9.0, 50.0}) {
    CAPTURE(x);
    const double h = 1e-5;
    const double dsi = (sin_integral(x + h) - sin_integral(x - h)) / (2 * h);
    const double dci = (cos_integral(x + h) - cos_integral(x - h)) / (2 * h);
    CHECK(std::abs(dsi - std::sin(x) / x) < 1e-8);
    CHECK(std::abs(dci - std::cos(x) / x) < 1e-8);
  }
}

TEST_CASE("Si and Ci reject out-of-range arguments") {
  CHECK_THROWS_AS(sin_integral(-1.0), DomainError);
  CHECK_THROWS_AS(cos_integral(0.0), DomainError);
  CHECK_THROWS_AS(cos_integral(-2.0), DomainError);
}

TEST_CASE("Clausen function") {
  const double catalan = 0.915965594177219015054603514932;
  CHECK(std::abs(clausen_cl2(pi / 2) - catalan) < 1e-15);
  CHECK(std::abs(clausen_cl2(pi)) < 1e-15);
  CHECK(std::abs(clausen_cl2(0.0)) < 1e-300);
  CHECK(std::abs(clausen_cl2(2 * pi)) < 1e-14);
  for (double x = 0.01; x < 2 * pi; x += 0.173) {
    const bool away_from_zero = x > 0.1 && x < 2 * pi - 0.1;
    CAPTURE(x);
    CHECK(std::abs(clausen_cl2(x) - cl2_oracle(x)) < 1e-13);
    CHECK(std::abs(clausen_cl2(2 * pi - x) + clausen_cl2(x)) < 1e-14);
    const double h = 1e-5;
    const double d = (clausen_cl2(x + h) - clausen_cl2(x - h)) / (2 * h);
    // The central difference carries an h^2/x^2 error near the endpoints.
    if (away_from_zero) CHECK(std::abs(d + std::log(2.0 * std::sin(0.5 * x))) < 1e-8);
  }
  // Duplication: Cl2(2x) = 2 Cl2(x) - 2 Cl2(pi - x).
  for (double x = 0.05; x < pi / 2; x += 0.11) {
    CHECK(std::abs(clausen_cl2(2 * x) - 2 * clausen_cl2(x) + 2 * clausen_cl2(pi - x)) < 1e-14);
  }
  CHECK_THROWS_AS(clausen_cl2(-0.1), DomainError);
  CHECK_THROWS_AS(clausen_cl2(7.0), DomainError);
}

TEST_CASE("complete elliptic integral") {
  const auto ki = elliptic_K_complex({0.0, 1.0});
  CHECK(std::abs(ki.real() - 1.3110287771461) < 1e-12);
  CHECK(std::abs(ki.imag()) < 1e-15);
  CHECK(std::abs(elliptic_K_complex(0.0) - std::complex<double>(pi / 2)) < 1e-15);

  for (double k : {0.1, 0.5, 0.9, 0.99, 0.999999}) {
    CHECK(std::abs(elliptic_K_complex(k).real() - boost::math::ellint_1(k)) < 1e-13 * boost::math::ellint_1(k));
    CHECK(std::abs(elliptic_K_complex(-k).real() - boost::math::ellint_1(k)) < 1e-13 * boost::math::ellint_1(k));
  }

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> r(0.0, 0.95);
  std::uniform_real_distribution<double> a(-pi, pi);
  for (int i = 0; i < 50; ++i) {
    const auto k = std::polar(r(rng), a(rng));
    CAPTURE(k);
    CHECK(std::abs(elliptic_K_complex(k) - k_oracle(k)) < 1e-12);
  }

  // K(k) through k' agrees with the direct route.
  const std::complex<double> k(0.3, 0.4);
  CHECK(std::abs(elliptic_K_from_complementary(std::sqrt(1.0 - k * k)) - elliptic_K_complex(k)) < 1e-15);

  CHECK_THROWS_AS(elliptic_K_complex(1.0), DomainError);
  CHECK_THROWS_AS(elliptic_K_complex(-1.0), DomainError);
  CHECK_THROWS_AS(elliptic_K_complex({1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(elliptic_K_from_complementary(0.0), DomainError);
}
