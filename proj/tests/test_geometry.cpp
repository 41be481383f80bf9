#include <doctest.h>

#include <cmath>
#include <random>

#include "stadium/errors.hpp"
#include "stadium/geometry.hpp"

using namespace stadium;

namespace {

// Distance to the boundary by dense sampling of the four arcs, refined with a
// golden-section search around the best sample.
double brute_force_distance(const DomainGeometry& g, Complex p) {
  double best = 1e300;
  for (int k = 0; k < 4; ++k) {
    const ArcId arc(k);
    auto dist = [&](double t) { return std::abs(p - g.arc_point(arc, t)); };
    constexpr int kSamples = 2000;
    int arg_best = 0;
    double d_best = 1e300;
    for (int i = 0; i <= kSamples; ++i) {
      const double d = dist(-1.0 + 2.0 * i / kSamples);
      if (d < d_best) {
        d_best = d;
        arg_best = i;
      }
    }
    double a = -1.0 + 2.0 * std::max(arg_best - 1, 0) / kSamples;
    double b = -1.0 + 2.0 * std::min(arg_best + 1, kSamples) / kSamples;
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 200; ++it) {
      const double c = b - r * (b - a);
      const double d = a + r * (b - a);
      if (dist(c) < dist(d)) {
        b = d;
      } else {
        a = c;
      }
    }
    best = std::min({best, d_best, dist(0.5 * (a + b))});
  }
  return best;
}

}  // namespace

TEST_CASE("arc endpoints meet at the corners") {
  for (double L : {0.3, 1.0, 2.5}) {
    for (Shape s : {Shape::Stadium, Shape::Rectangle}) {
      const DomainGeometry g(s, L);
      for (int k = 0; k < 4; ++k) {
        const Complex end = g.arc_point(ArcId(k), 1.0);
        const Complex next = g.arc_point(ArcId(k).next(), -1.0);
        CHECK(std::abs(end - next) < 1e-15);
      }
      CHECK(std::abs(g.arc_point(ArcId(0), -1.0) - Complex(-L, -1.0)) < 1e-15);
    }
  }
}

TEST_CASE("stadium arc examples") {
  const auto g = DomainGeometry::stadium(1.0);
  CHECK(std::abs(g.arc_point(ArcId(0), 0.0) - Complex(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(g.arc_point(ArcId(1), 0.0) - Complex(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(g.arc_point(ArcId(2), 0.5) - Complex(-0.5, 1.0)) < 1e-15);
  CHECK(std::abs(g.arc_point(ArcId(3), 0.0) - Complex(-2.0, 0.0)) < 1e-15);
  // Dome points sit at unit distance from the dome centre.
  for (double t : {-0.9, -0.3, 0.2, 0.7}) {
    CHECK(std::abs(std::abs(g.arc_point(ArcId(1), t) - 1.0) - 1.0) < 1e-15);
    CHECK(std::abs(std::abs(g.arc_point(ArcId(3), t) + 1.0) - 1.0) < 1e-15);
  }
}

TEST_CASE("arc_point_angle agrees with arc_point at t = cos(theta)") {
  for (Shape s : {Shape::Stadium, Shape::Rectangle}) {
    const DomainGeometry g(s, 0.7);
    for (int k = 0; k < 4; ++k) {
      for (double th = 0.0; th <= 3.14159; th += 0.1) {
        CHECK(std::abs(g.arc_point_angle(ArcId(k), th) - g.arc_point(ArcId(k), std::cos(th))) < 1e-14);
      }
    }
  }
}

TEST_CASE("arc symmetries") {
  const auto g = DomainGeometry::stadium(1.3);
  for (double t = -1.0; t <= 1.0; t += 0.125) {
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(g.arc_point(ArcId(k).opposite(), t) + g.arc_point(ArcId(k), t)) < 1e-15);
    }
    // z -> -conj(z) maps arc 0 to itself reversed and arc 1 to arc 3.
    CHECK(std::abs(-std::conj(g.arc_point(ArcId(0), t)) - g.arc_point(ArcId(0), -t)) < 1e-15);
    CHECK(std::abs(-std::conj(g.arc_point(ArcId(1), t)) - g.arc_point(ArcId(3), -t)) < 1e-15);
  }
}

TEST_CASE("signed distance matches a brute-force boundary search") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> ux(-3.2, 3.2);
  std::uniform_real_distribution<double> uy(-1.2, 1.2);
  for (Shape s : {Shape::Stadium, Shape::Rectangle}) {
    const DomainGeometry g(s, 1.0);
    int inside = 0;
    while (inside < 100) {
      const Complex p(ux(rng), uy(rng));
      const double d = g.signed_distance(p);
      if (d <= 0.0) continue;
      ++inside;
      CHECK(std::abs(d - brute_force_distance(g, p)) < 1e-10);
      CHECK(g.inscribed_radius(p) == d);
    }
  }
}

TEST_CASE("inscribed radius examples and rejection") {
  const auto g = DomainGeometry::stadium(1.0);
  CHECK(g.inscribed_radius({0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.inscribed_radius({1.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g.inscribed_radius({0.0, 0.75}) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(g.inscribed_radius({2.0, 0.0}), DomainError);
  CHECK_THROWS_AS(g.inscribed_radius({0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(g.inscribed_radius({5.0, 0.0}), DomainError);
  CHECK_THROWS_AS(g.inscribed_radius({std::nan(""), 0.0}), DomainError);
  CHECK(g.signed_distance({3.0, 0.0}) == doctest::Approx(-1.0));
}

TEST_CASE("hit classification") {
  const auto g = DomainGeometry::stadium(1.0);
  CHECK(g.classify_hit({1.5, 0.8}) == HitSide::Dome);
  CHECK(g.classify_hit({-1.9, 0.1}) == HitSide::Dome);
  CHECK(g.classify_hit({0.3, -0.999}) == HitSide::Side);
  CHECK(g.classify_hit({1.0, 1.0}) == HitSide::Side);
  CHECK(g.classify_hit({1.0, 0.999}) == HitSide::Side);
  CHECK(g.classify_hit({1.999, 0.0}) == HitSide::Dome);
  const auto r = DomainGeometry::rectangle(2.0);
  CHECK(r.classify_hit({1.9995, 0.3}) == HitSide::Dome);
  CHECK(r.classify_hit({0.5, -0.9995}) == HitSide::Side);
  CHECK(r.classify_hit({1.5, 0.5}) == HitSide::Side);  // exact tie
}

TEST_CASE("inward normals") {
  const auto g = DomainGeometry::stadium(1.0);
  CHECK(std::abs(g.inward_normal(ArcId(0), 0.2) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(g.inward_normal(ArcId(1), 0.0) - Complex(-1.0, 0.0)) < 1e-15);
  // The stadium boundary is C1 at its corners.
  CHECK(std::abs(g.inward_normal(ArcId(0), 1.0) - Complex(0.0, 1.0)) < 1e-15);
  const auto r = DomainGeometry::rectangle(1.0);
  const Complex corner = r.inward_normal(ArcId(0), -1.0);
  CHECK(std::abs(corner - Complex(1.0, 1.0) / std::sqrt(2.0)) < 1e-15);
  CHECK_THROWS_AS(g.inward_normal(ArcId(0), 1.5), DomainError);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(ArcId(4), DomainError);
  CHECK_THROWS_AS(ArcId(-1), DomainError);
  CHECK_THROWS_AS(DomainGeometry::stadium(0.0), DomainError);
  CHECK_THROWS_AS(DomainGeometry::stadium(-1.0), DomainError);
  CHECK_THROWS_AS(DomainGeometry::stadium(INFINITY), DomainError);
  CHECK_THROWS_AS(DomainGeometry::stadium(1.0).arc_point(ArcId(0), 1.0000001), DomainError);
  CHECK(parse_shape("rect") == Shape::Rectangle);
  CHECK(parse_shape("rectangle") == Shape::Rectangle);
  CHECK(parse_shape("stadium") == Shape::Stadium);
  CHECK_THROWS_AS(parse_shape("disk"), DomainError);
  CHECK(std::string(to_string(Shape::Rectangle)) == "rect");
}
