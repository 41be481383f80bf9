#pragma once

// Data-parallel inner loops of the solver. Each kernel has a portable scalar
// reference and, on x86-64, an AVX2+FMA variant chosen at runtime. The two are
// required to agree to rounding (see tests/test_simd_kernels.cpp).

#include <span>

namespace stadium::simd {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa) noexcept;

/// Widest instruction set this CPU and build support.
Isa best_available_isa() noexcept;

/// Instruction set the dispatching entry points currently use. Defaults to
/// best_available_isa(); the STADIUM_SIMD environment variable ("scalar") or
/// set_active_isa() can force the reference path.
Isa active_isa() noexcept;
void set_active_isa(Isa isa);

/// out[n] = sum_i weights[i] * T_n(x[i]) for n = 0 .. out.size()-1.
/// x and weights must have equal length; x in [-1, 1].
void chebyshev_moments(std::span<const double> x, std::span<const double> weights,
                       std::span<double> out);

/// out[i] = sum_n coeffs[n] * T_n(x[i]) (Clenshaw).
void chebyshev_series(std::span<const double> coeffs, std::span<const double> x,
                      std::span<double> out);

namespace scalar {
void chebyshev_moments(std::span<const double> x, std::span<const double> weights,
                       std::span<double> out);
void chebyshev_series(std::span<const double> coeffs, std::span<const double> x,
                      std::span<double> out);
}  // namespace scalar

#if defined(STADIUM_HAVE_AVX2)
namespace avx2 {
void chebyshev_moments(std::span<const double> x, std::span<const double> weights,
                       std::span<double> out);
void chebyshev_series(std::span<const double> coeffs, std::span<const double> x,
                      std::span<double> out);
}  // namespace avx2
#endif

}  // namespace stadium::simd
