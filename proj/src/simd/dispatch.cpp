#include <atomic>
#include <cstdlib>
#include <string_view>

#include "stadium/errors.hpp"
#include "stadium/simd/kernels.hpp"

namespace stadium::simd {

namespace {

Isa detect() noexcept {
#if defined(STADIUM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa initial_isa() noexcept {
  const Isa best = detect();
  if (const char* env = std::getenv("STADIUM_SIMD")) {
    if (std::string_view(env) == "scalar") return Isa::Scalar;
  }
  return best;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

void check_lengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("kernel inputs must have equal length");
}

}  // namespace

const char* to_string(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

Isa best_available_isa() noexcept {
  static const Isa best = detect();
  return best;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && best_available_isa() != Isa::Avx2) {
    throw DomainError("AVX2 kernels are not available on this CPU/build");
  }
  active().store(isa, std::memory_order_relaxed);
}

void chebyshev_moments(std::span<const double> x, std::span<const double> weights,
                       std::span<double> out) {
  check_lengths(x, weights);
#if defined(STADIUM_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::chebyshev_moments(x, weights, out);
#endif
  scalar::chebyshev_moments(x, weights, out);
}

void chebyshev_series(std::span<const double> coeffs, std::span<const double> x,
                      std::span<double> out) {
  check_lengths(x, out);
#if defined(STADIUM_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::chebyshev_series(coeffs, x, out);
#endif
  scalar::chebyshev_series(coeffs, x, out);
}

}  // namespace stadium::simd
