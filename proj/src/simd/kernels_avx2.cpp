// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <vector>

#include "stadium/simd/kernels.hpp"

namespace stadium::simd::avx2 {

namespace {

constexpr std::size_t kLanes = 4;
// Nodes per block: four registers keep the recurrence latency hidden.
constexpr std::size_t kBlock = 4 * kLanes;

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void chebyshev_moments(std::span<const double> x, std::span<const double> weights,
                       std::span<double> out) {
  const std::size_t nmax = out.size();
  std::fill(out.begin(), out.end(), 0.0);
  if (nmax == 0 || x.empty()) return;

  // One 4-lane partial sum per degree.
  std::vector<double> acc(nmax * kLanes, 0.0);
  std::array<double, kBlock> xb{};
  std::array<double, kBlock> wb{};

  for (std::size_t start = 0; start < x.size(); start += kBlock) {
    const std::size_t len = std::min(kBlock, x.size() - start);
    std::copy_n(x.begin() + start, len, xb.begin());
    std::copy_n(weights.begin() + start, len, wb.begin());
    std::fill(xb.begin() + len, xb.end(), 0.0);
    std::fill(wb.begin() + len, wb.end(), 0.0);

    __m256d t[4], w[4], two_t[4], prev[4], cur[4];
    for (int r = 0; r < 4; ++r) {
      t[r] = _mm256_loadu_pd(xb.data() + r * kLanes);
      w[r] = _mm256_loadu_pd(wb.data() + r * kLanes);
      two_t[r] = _mm256_add_pd(t[r], t[r]);
      prev[r] = _mm256_set1_pd(1.0);
      cur[r] = t[r];
    }

    __m256d s = _mm256_add_pd(_mm256_add_pd(w[0], w[1]), _mm256_add_pd(w[2], w[3]));
    _mm256_storeu_pd(acc.data(), _mm256_add_pd(_mm256_loadu_pd(acc.data()), s));
    if (nmax > 1) {
      s = _mm256_mul_pd(w[0], cur[0]);
      s = _mm256_fmadd_pd(w[1], cur[1], s);
      s = _mm256_fmadd_pd(w[2], cur[2], s);
      s = _mm256_fmadd_pd(w[3], cur[3], s);
      double* a1 = acc.data() + kLanes;
      _mm256_storeu_pd(a1, _mm256_add_pd(_mm256_loadu_pd(a1), s));
    }
    for (std::size_t n = 2; n < nmax; ++n) {
      for (int r = 0; r < 4; ++r) {
        const __m256d next = _mm256_fmsub_pd(two_t[r], cur[r], prev[r]);
        prev[r] = cur[r];
        cur[r] = next;
      }
      s = _mm256_mul_pd(w[0], cur[0]);
      s = _mm256_fmadd_pd(w[1], cur[1], s);
      s = _mm256_fmadd_pd(w[2], cur[2], s);
      s = _mm256_fmadd_pd(w[3], cur[3], s);
      double* an = acc.data() + n * kLanes;
      _mm256_storeu_pd(an, _mm256_add_pd(_mm256_loadu_pd(an), s));
    }
  }

  for (std::size_t n = 0; n < nmax; ++n) {
    out[n] = horizontal_sum(_mm256_loadu_pd(acc.data() + n * kLanes));
  }
}

void chebyshev_series(std::span<const double> coeffs, std::span<const double> x,
                      std::span<double> out) {
  const std::size_t count = coeffs.size();
  if (count == 0) {
    std::fill(out.begin(), out.begin() + x.size(), 0.0);
    return;
  }
  std::array<double, kLanes> xb{};
  std::array<double, kLanes> ob{};
  for (std::size_t start = 0; start < x.size(); start += kLanes) {
    const std::size_t len = std::min(kLanes, x.size() - start);
    std::copy_n(x.begin() + start, len, xb.begin());
    std::fill(xb.begin() + len, xb.end(), 0.0);

    const __m256d t = _mm256_loadu_pd(xb.data());
    const __m256d two_t = _mm256_add_pd(t, t);
    __m256d b1 = _mm256_setzero_pd();
    __m256d b2 = _mm256_setzero_pd();
    for (std::size_t n = count; n-- > 1;) {
      const __m256d b0 =
          _mm256_add_pd(_mm256_set1_pd(coeffs[n]), _mm256_fmsub_pd(two_t, b1, b2));
      b2 = b1;
      b1 = b0;
    }
    const __m256d result =
        _mm256_add_pd(_mm256_set1_pd(coeffs[0]), _mm256_fmsub_pd(t, b1, b2));
    _mm256_storeu_pd(ob.data(), result);
    std::copy_n(ob.begin(), len, out.begin() + start);
  }
}

}  // namespace stadium::simd::avx2
