#pragma once

#include <cstdint>

#include "stadium/geometry.hpp"

namespace stadium {

/// Walk-on-circles estimate of the harmonic measure of the domes (|Re z| > L).
struct McConfig {
  std::int64_t trials = 1'000'000;
  /// Absorption threshold: a walk stops once its boundary distance is <= h.
  double h = 1e-3;
  std::uint64_t seed = 0;
  Complex start{0.0, 0.0};
  /// Worker threads; results do not depend on this.
  int threads = 1;
  std::int64_t max_steps_per_trial = 1'000'000;

  void validate(const DomainGeometry& geometry) const;
};

struct McResult {
  std::int64_t hits_domes = 0;
  /// Dome hits with Re z > 0; hits_domes - hits_dome_right landed on x < 0.
  std::int64_t hits_dome_right = 0;
  std::int64_t trials = 0;
  double p_hat = 0.0;
  /// sqrt(p_hat (1 - p_hat) / trials).
  double std_error = 0.0;
  std::int64_t total_steps = 0;
  McConfig config;
};

/// SplitMix64 stream keyed by (seed, trial): each trial draws from its own
/// substream, so results are independent of scheduling.
class TrialRng {
 public:
  using result_type = std::uint64_t;

  TrialRng(std::uint64_t seed, std::uint64_t trial) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Finalizer of SplitMix64 (a bijective 64-bit mixer).
std::uint64_t mix64(std::uint64_t x) noexcept;

McResult run_monte_carlo(const DomainGeometry& geometry, const McConfig& config);

}  // namespace stadium
