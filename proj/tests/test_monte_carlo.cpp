#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "stadium/errors.hpp"
#include "stadium/monte_carlo.hpp"

using namespace stadium;

namespace {

McConfig config(std::int64_t n, double h, std::uint64_t seed, int threads = 1) {
  McConfig c;
  c.trials = n;
  c.h = h;
  c.seed = seed;
  c.threads = threads;
  return c;
}

}  // namespace

TEST_CASE("SplitMix64 reference outputs") {
  // Published SplitMix64 stream for state 1234567.
  std::uint64_t state = 1234567;
  auto next = [&state] {
    state += 0x9E3779B97F4A7C15ULL;
    return mix64(state);
  };
  CHECK(next() == 6457827717110365317ULL);
  CHECK(next() == 3203168211198807973ULL);
  CHECK(next() == 9817491932198370423ULL);
}

TEST_CASE("per-trial streams are distinct and uniform draws lie in [0, 1)") {
  TrialRng a(1, 0);
  TrialRng b(1, 1);
  TrialRng c(2, 0);
  const auto x = a();
  CHECK(x != b());
  CHECK(x != c());
  TrialRng u(9, 9);
  double mean = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double v = u.uniform();
    REQUIRE(v >= 0.0);
    REQUIRE(v < 1.0);
    mean += v;
  }
  CHECK(mean / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("small run stays within bounds") {
  const auto r = run_monte_carlo(DomainGeometry::stadium(1.0), config(100, 1e-2, 5));
  CHECK(r.hits_domes >= 0);
  CHECK(r.hits_domes <= 100);
  CHECK(r.p_hat >= 0.0);
  CHECK(r.p_hat <= 1.0);
  CHECK(r.p_hat == static_cast<double>(r.hits_domes) / 100.0);
  CHECK(r.std_error == doctest::Approx(std::sqrt(r.p_hat * (1 - r.p_hat) / 100.0)));
  CHECK(r.total_steps > 100);
}

TEST_CASE("identical inputs give identical results regardless of thread count") {
  const auto g = DomainGeometry::stadium(1.0);
  const auto a = run_monte_carlo(g, config(20000, 1e-3, 77));
  const auto b = run_monte_carlo(g, config(20000, 1e-3, 77));
  const auto c = run_monte_carlo(g, config(20000, 1e-3, 77, 3));
  CHECK(a.hits_domes == b.hits_domes);
  CHECK(a.total_steps == b.total_steps);
  CHECK(a.hits_domes == c.hits_domes);
  CHECK(a.hits_dome_right == c.hits_dome_right);
  CHECK(a.total_steps == c.total_steps);
  const auto d = run_monte_carlo(g, config(20000, 1e-3, 78));
  CHECK(a.total_steps != d.total_steps);
}

TEST_CASE("square gives one half") {
  const auto r = run_monte_carlo(DomainGeometry::rectangle(1.0), config(1'000'000, 1e-3, 2024));
  MESSAGE("square p_hat = " << r.p_hat);
  CHECK(std::abs(r.p_hat - 0.5) <= 2e-3);
}

TEST_CASE("spread over seeds matches the binomial standard error") {
  const auto g = DomainGeometry::stadium(1.0);
  std::vector<double> p;
  for (std::uint64_t seed = 100; seed < 120; ++seed) p.push_back(run_monte_carlo(g, config(100000, 1e-3, seed)).p_hat);
  const double mean = std::accumulate(p.begin(), p.end(), 0.0) / p.size();
  double var = 0.0;
  for (double v : p) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / (p.size() - 1));
  const double expected = std::sqrt(0.281829 * (1 - 0.281829) / 100000);
  MESSAGE("seed spread " << sd << " vs binomial " << expected << ", mean " << mean);
  CHECK(sd > expected / 2);
  CHECK(sd < expected * 2);
  CHECK(std::abs(mean - 0.281829) < 4 * expected / std::sqrt(20.0) + 1e-3);
}

TEST_CASE("left and right dome hits balance") {
  const auto r = run_monte_carlo(DomainGeometry::stadium(1.0), config(400000, 1e-3, 31));
  const double right = static_cast<double>(r.hits_dome_right);
  const double left = static_cast<double>(r.hits_domes - r.hits_dome_right);
  CHECK(std::abs(right - left) <= 4.0 * std::sqrt(static_cast<double>(r.hits_domes)));
}

TEST_CASE("configuration validation") {
  const auto g = DomainGeometry::stadium(1.0);
  CHECK_THROWS_AS(run_monte_carlo(g, config(0, 1e-3, 1)), DomainError);
  CHECK_THROWS_AS(run_monte_carlo(g, config(10, 0.0, 1)), DomainError);
  CHECK_THROWS_AS(run_monte_carlo(g, config(10, 0.1, 1)), DomainError);
  CHECK_THROWS_AS(run_monte_carlo(g, config(10, 1e-3, 1, 0)), DomainError);
  auto outside = config(10, 1e-3, 1);
  outside.start = {3.0, 0.0};
  CHECK_THROWS_AS(run_monte_carlo(g, outside), DomainError);
  auto capped = config(10, 1e-3, 1);
  capped.max_steps_per_trial = 1;
  CHECK_THROWS_AS(run_monte_carlo(g, capped), ConvergenceError);
}
