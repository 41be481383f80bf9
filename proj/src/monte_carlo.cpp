#include "stadium/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>
#include <vector>

#include "stadium/errors.hpp"

namespace stadium {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct Tally {
  std::int64_t domes = 0;
  std::int64_t dome_right = 0;
  std::int64_t steps = 0;
};

// Runs trials [first, last) and accumulates into tally.
void run_range(const DomainGeometry& geom, const McConfig& cfg, std::int64_t first,
               std::int64_t last, Tally& tally) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (std::int64_t trial = first; trial < last; ++trial) {
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(trial));
    Complex p = cfg.start;
    double r = geom.signed_distance(p);
    std::int64_t steps = 0;
    while (r > cfg.h) {
      if (++steps > cfg.max_steps_per_trial) {
        throw ConvergenceError("walk exceeded the per-trial step cap", static_cast<double>(trial),
                               r);
      }
      const double phi = kTwoPi * rng.uniform();
      p += r * Complex(std::cos(phi), std::sin(phi));
      r = geom.signed_distance(p);
    }
    tally.steps += steps;
    if (geom.classify_hit(p) == HitSide::Dome) {
      ++tally.domes;
      if (p.real() > 0.0) ++tally.dome_right;
    }
  }
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) noexcept
    : state_(mix64(seed ^ mix64(trial + kGolden))) {}

TrialRng::result_type TrialRng::operator()() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

void McConfig::validate(const DomainGeometry& geometry) const {
  if (trials < 1) throw DomainError("trial count N must be at least 1");
  if (!(h > 0.0 && h < 0.1)) throw DomainError("absorption threshold h must lie in (0, 0.1)");
  if (threads < 1) throw DomainError("thread count must be positive");
  if (max_steps_per_trial < 1) throw DomainError("step cap must be positive");
  geometry.inscribed_radius(start);  // throws unless strictly interior
}

McResult run_monte_carlo(const DomainGeometry& geometry, const McConfig& config) {
  config.validate(geometry);

  const int workers = static_cast<int>(std::min<std::int64_t>(config.threads, config.trials));
  std::vector<Tally> tallies(workers);
  if (workers == 1) {
    run_range(geometry, config, 0, config.trials, tallies[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) {
        const std::int64_t first = config.trials * w / workers;
        const std::int64_t last = config.trials * (w + 1) / workers;
        pool.emplace_back([&, w, first, last] {
          try {
            run_range(geometry, config, first, last, tallies[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  McResult result;
  result.config = config;
  result.trials = config.trials;
  for (const auto& t : tallies) {
    result.hits_domes += t.domes;
    result.hits_dome_right += t.dome_right;
    result.total_steps += t.steps;
  }
  result.p_hat = static_cast<double>(result.hits_domes) / static_cast<double>(result.trials);
  result.std_error = std::sqrt(result.p_hat * (1.0 - result.p_hat) / static_cast<double>(result.trials));
  return result;
}

}  // namespace stadium
