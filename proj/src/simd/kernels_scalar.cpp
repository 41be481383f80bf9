#include <algorithm>

#include "stadium/simd/kernels.hpp"

namespace stadium::simd::scalar {

void chebyshev_moments(std::span<const double> x, std::span<const double> weights,
                       std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  const std::size_t nmax = out.size();
  if (nmax == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i];
    const double w = weights[i];
    double prev = 1.0;
    double cur = t;
    out[0] += w;
    if (nmax > 1) out[1] += w * t;
    for (std::size_t n = 2; n < nmax; ++n) {
      const double next = 2.0 * t * cur - prev;
      prev = cur;
      cur = next;
      out[n] += w * cur;
    }
  }
}

void chebyshev_series(std::span<const double> coeffs, std::span<const double> x,
                      std::span<double> out) {
  const std::size_t count = coeffs.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (count == 0) {
      out[i] = 0.0;
      continue;
    }
    const double t = x[i];
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t n = count; n-- > 1;) {
      const double b0 = coeffs[n] + 2.0 * t * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    out[i] = coeffs[0] + t * b1 - b2;
  }
}

}  // namespace stadium::simd::scalar
