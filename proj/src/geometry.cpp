#include "stadium/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "stadium/errors.hpp"

namespace stadium {

namespace {

void require_finite(Complex p) {
  if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
    throw DomainError("point has non-finite components");
  }
}

}  // namespace

ArcId::ArcId(int index) : index_(index) {
  if (index < 0 || index > 3) {
    throw DomainError("arc index must be in {0,1,2,3}, got " + std::to_string(index));
  }
}

DomainGeometry::DomainGeometry(Shape shape, double half_length)
    : shape_(shape), half_length_(half_length) {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw DomainError("half-length L must be finite and positive");
  }
}

Complex DomainGeometry::arc_point(ArcId k, double t) const {
  if (!(std::abs(t) <= 1.0)) {
    throw DomainError("arc parameter t must lie in [-1, 1]");
  }
  const double L = half_length_;
  // zeta_2 = -zeta_0 and zeta_3 = -zeta_1.
  const double sign = k.index() < 2 ? 1.0 : -1.0;
  if (k.index() % 2 == 0) {
    return sign * Complex(L * t, -1.0);
  }
  const double bulge = shape_ == Shape::Stadium ? std::sqrt((1.0 - t) * (1.0 + t)) : 0.0;
  return sign * Complex(L + bulge, t);
}

Complex DomainGeometry::arc_point_angle(ArcId k, double theta) const noexcept {
  const double L = half_length_;
  const double sign = k.index() < 2 ? 1.0 : -1.0;
  const double c = std::cos(theta);
  if (k.index() % 2 == 0) {
    return sign * Complex(L * c, -1.0);
  }
  const double bulge = shape_ == Shape::Stadium ? std::sin(theta) : 0.0;
  return sign * Complex(L + bulge, c);
}

double DomainGeometry::signed_distance(Complex p) const noexcept {
  const double L = half_length_;
  const double ax = std::abs(p.real());
  const double ay = std::abs(p.imag());
  if (shape_ == Shape::Stadium) {
    // Points within unit distance of the segment [-L, L] x {0}.
    const double dx = std::max(ax - L, 0.0);
    return 1.0 - std::hypot(dx, ay);
  }
  return std::min(L - ax, 1.0 - ay);
}

double DomainGeometry::inscribed_radius(Complex p) const {
  require_finite(p);
  const double d = signed_distance(p);
  if (!(d > 0.0)) {
    throw DomainError("point is not strictly inside the domain");
  }
  return d;
}

HitSide DomainGeometry::classify_hit(Complex p) const noexcept {
  if (shape_ == Shape::Rectangle) {
    // Interior points never have |Re p| > L here; compare the two distances.
    const double to_end = half_length_ - std::abs(p.real());
    const double to_side = 1.0 - std::abs(p.imag());
    return to_end < to_side ? HitSide::Dome : HitSide::Side;
  }
  return std::abs(p.real()) > half_length_ ? HitSide::Dome : HitSide::Side;
}

Complex DomainGeometry::inward_normal(ArcId k, double t) const {
  if (!(std::abs(t) <= 1.0)) {
    throw DomainError("arc parameter t must lie in [-1, 1]");
  }
  auto smooth_normal = [this](int arc, double s) {
    const double sign = arc < 2 ? 1.0 : -1.0;
    if (arc % 2 == 0) {
      return sign * Complex(0.0, 1.0);
    }
    if (shape_ == Shape::Rectangle) {
      return sign * Complex(-1.0, 0.0);
    }
    return sign * Complex(-std::sqrt((1.0 - s) * (1.0 + s)), -s);
  };
  Complex n = smooth_normal(k.index(), t);
  if (t == 1.0) {
    n += smooth_normal(k.next().index(), -1.0);
  } else if (t == -1.0) {
    n += smooth_normal((k.index() + 3) % 4, 1.0);
  }
  return n / std::abs(n);
}

const char* to_string(Shape shape) noexcept {
  return shape == Shape::Stadium ? "stadium" : "rect";
}

Shape parse_shape(const std::string& name) {
  if (name == "stadium") return Shape::Stadium;
  if (name == "rect" || name == "rectangle") return Shape::Rectangle;
  throw DomainError("unknown shape '" + name + "' (expected stadium or rect)");
}

}  // namespace stadium
