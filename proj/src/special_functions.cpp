#include "stadium/special_functions.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <algorithm>
#include <cmath>
#include <utility>
#include <numbers>

#include "stadium/errors.hpp"

namespace stadium::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-17;

void check_chebyshev_args(int n, double t) {
  if (n < 0) throw DomainError("Chebyshev degree must be non-negative");
  if (!(std::abs(t) <= 1.0)) throw DomainError("Chebyshev argument must lie in [-1, 1]");
}

// Power series for Si and Ci; accurate to ~1e-15 for x <= kSeriesLimit.
constexpr double kSeriesLimit = 4.0;

double si_series(double x) {
  const double x2 = x * x;
  double term = x;  // x^(2k+1) / (2k+1)!
  double sum = x;
  for (int k = 1; k < 60; ++k) {
    term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double add = term / (2.0 * k + 1.0);
    sum += add;
    if (std::abs(add) < kEps * std::abs(sum)) break;
  }
  return sum;
}

double ci_series(double x) {
  const double x2 = x * x;
  double term = 1.0;  // x^(2k) / (2k)!
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
    const double add = term / (2.0 * k);
    sum += add;
    if (std::abs(add) < kEps * std::max(1.0, std::abs(sum))) break;
  }
  return std::numbers::egamma + std::log(x) + sum;
}

// E1(ix) by the modified Lentz continued fraction; returns (Ci, Si).
std::pair<double, double> cisi_continued_fraction(double x) {
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 1000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) break;
  }
  h *= C(std::cos(x), -std::sin(x));
  return {-h.real(), kPi / 2 + h.imag()};
}

}  // namespace

double chebyshev_T(int n, double t) {
  check_chebyshev_args(n, t);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_U(int n, double t) {
  check_chebyshev_args(n, t);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * t;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double sin_integral(double x) {
  if (!(x >= 0.0)) throw DomainError("sin_integral requires x >= 0");
  if (x == 0.0) return 0.0;
  if (x <= kSeriesLimit) return si_series(x);
  return cisi_continued_fraction(x).second;
}

double cos_integral(double x) {
  if (!(x > 0.0)) throw DomainError("cos_integral requires x > 0");
  if (x <= kSeriesLimit) return ci_series(x);
  return cisi_continued_fraction(x).first;
}

double clausen_cl2(double x) {
  if (!(x >= 0.0 && x <= 2.0 * kPi)) throw DomainError("clausen_cl2 requires x in [0, 2 pi]");
  if (x > kPi) return -clausen_cl2(2.0 * kPi - x);
  if (x == 0.0) return 0.0;
  // Cl2(x) = x - x log x + sum_k |B_2k| x^(2k+1) / (2k (2k+1) (2k)!), |x| < 2 pi.
  const double x2 = x * x;
  double power = x;       // x^(2k+1)
  double factorial = 1.0;  // (2k)!
  double sum = x - x * std::log(x);
  for (int k = 1; k < 60; ++k) {
    power *= x2;
    factorial *= (2.0 * k - 1.0) * (2.0 * k);
    const double b2k = std::abs(boost::math::bernoulli_b2n<double>(k));
    const double add = b2k * power / (2.0 * k * (2.0 * k + 1.0) * factorial);
    sum += add;
    if (add < kEps * std::abs(sum) || add < 1e-300) break;
  }
  return sum;
}

std::complex<double> elliptic_K_complex(std::complex<double> k) {
  using C = std::complex<double>;
  if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) {
    throw DomainError("elliptic modulus must be finite");
  }
  if (std::abs(k) > 1.0 + 1e-15) throw DomainError("elliptic modulus must satisfy |k| <= 1");
  if (k == C(1.0, 0.0) || k == C(-1.0, 0.0)) throw DomainError("K(k) diverges at k = +-1");

  // (1 - k)(1 + k) avoids cancellation as k -> +-1.
  return elliptic_K_from_complementary(std::sqrt((C(1.0, 0.0) - k) * (C(1.0, 0.0) + k)));
}

std::complex<double> elliptic_K_from_complementary(std::complex<double> k_prime) {
  using C = std::complex<double>;
  if (k_prime == C(0.0, 0.0)) throw DomainError("K(k) diverges at k' = 0");
  if (!std::isfinite(k_prime.real()) || !std::isfinite(k_prime.imag())) {
    throw DomainError("complementary modulus must be finite");
  }
  C a(1.0, 0.0);
  C b = k_prime;
  for (int iter = 0; iter < 100; ++iter) {
    if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
    const C a_next = 0.5 * (a + b);
    C b_next = std::sqrt(a * b);
    // Stay on the branch with Re(b'/a') >= 0.
    if ((b_next / a_next).real() < 0.0) b_next = -b_next;
    a = a_next;
    b = b_next;
  }
  return kPi / (2.0 * a);
}

}  // namespace stadium::special
