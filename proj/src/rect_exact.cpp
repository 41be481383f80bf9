#include "stadium/rect_exact.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "stadium/errors.hpp"
#include "stadium/special_functions.hpp"

namespace stadium {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogFloor = -700.0;  // p = e^-700 ~ 1e-304

// g as a function of s = log p, for p <= 1/2.
double residual_log(double s, double L) {
  const double p = std::exp(s);
  // k'^2 = 1 - e^{2 i p pi} = 2 sin(p pi) e^{i (p pi - pi/2)}.
  const double modulus = std::sqrt(2.0 * std::sin(p * kPi));
  const std::complex<double> k_prime = std::polar(modulus, 0.5 * p * kPi - 0.25 * kPi);
  const auto K = special::elliptic_K_from_complementary(k_prime);
  return 0.5 * p * kPi + std::arg(K) - std::atan(1.0 / L);
}

double solve_long_side(double L, double tol) {
  auto g = [L](double s) { return residual_log(s, L); };
  double lo = kLogFloor;
  double hi = std::log(0.5 + 1e-6);
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (g_lo > 0.0) return 0.0;  // root below the representable range
  if (!(g_hi >= 0.0)) {
    throw SolverError("rectangle measure: g(p) does not change sign on the bracket");
  }
  std::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      g, lo, hi, g_lo, g_hi, boost::math::tools::eps_tolerance<double>(52), iterations);
  const double s = 0.5 * (a + b);
  if (std::abs(g(s)) > tol) {
    throw SolverError("rectangle measure: root did not meet tolerance");
  }
  return std::exp(s);
}

}  // namespace

double rect_residual(double p, double L) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0, 1)");
  if (p <= 0.5) return residual_log(std::log(p), L);
  // g_L(p) = -g_{1/L}(1 - p) by the quarter-turn symmetry of the rectangle.
  return -residual_log(std::log1p(-p), 1.0 / L);
}

double rect_end_measure(const RectMeasureQuery& query) {
  const double L = query.L;
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("L must be finite and positive");
  if (!(query.tol > 0.0)) throw DomainError("root tolerance must be positive");
  if (L >= 1.0) return solve_long_side(L, query.tol);
  return 1.0 - solve_long_side(1.0 / L, query.tol);
}

}  // namespace stadium
