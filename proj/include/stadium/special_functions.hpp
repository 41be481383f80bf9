#pragma once

#include <complex>

namespace stadium::special {

/// T_n(t) by the three-term recurrence. Throws DomainError for n < 0 or |t| > 1.
double chebyshev_T(int n, double t);

/// U_n(t) by the three-term recurrence; equals (n+1)(+-1)^n at t = +-1.
double chebyshev_U(int n, double t);

/// Si(x) = int_0^x sin(s)/s ds for x >= 0.
double sin_integral(double x);

/// Ci(x) = -int_x^inf cos(s)/s ds for x > 0.
double cos_integral(double x);

/// Clausen function Cl2(x) = -int_0^x log(2 sin(s/2)) ds on [0, 2 pi].
double clausen_cl2(double x);

/// Complete elliptic integral of the first kind in the modulus convention,
///   K(k) = int_0^1 dt / sqrt((1 - t^2)(1 - k^2 t^2)),
/// for complex |k| <= 1, k != +-1, via the complex arithmetic-geometric mean.
std::complex<double> elliptic_K_complex(std::complex<double> k);

/// K expressed through the complementary modulus k' = sqrt(1 - k^2) (principal
/// root), K = pi / (2 AGM(1, k')). Lets callers near k -> 1 supply k' without
/// cancellation. Throws DomainError for k' = 0.
std::complex<double> elliptic_K_from_complementary(std::complex<double> k_prime);

}  // namespace stadium::special
