#pragma once

#include <array>
#include <complex>
#include <string>

namespace stadium {

using Complex = std::complex<double>;

enum class Shape { Stadium, Rectangle };

/// Nearest boundary component of a point close to the boundary.
enum class HitSide { Dome, Side };

/// Index of one of the four boundary arcs, counter-clockwise from the bottom
/// edge: 0 bottom, 1 right, 2 top, 3 left.
class ArcId {
 public:
  constexpr ArcId() = default;
  explicit ArcId(int index);

  constexpr int index() const noexcept { return index_; }
  /// Arc reached by z -> -z.
  constexpr ArcId opposite() const noexcept { return ArcId(Unchecked{}, (index_ + 2) % 4); }
  constexpr ArcId next() const noexcept { return ArcId(Unchecked{}, (index_ + 1) % 4); }

  friend constexpr bool operator==(ArcId, ArcId) = default;

  static constexpr std::array<int, 4> kAll{0, 1, 2, 3};

 private:
  struct Unchecked {};
  constexpr ArcId(Unchecked, int index) : index_(index) {}
  int index_ = 0;
};

/// A stadium (two straight sides of length 2L capped by unit semicircles) or a
/// 2L x 2 rectangle, both centred at the origin. Each is described by four
/// analytic arcs zeta_k(t), t in [-1, 1], ordered counter-clockwise.
class DomainGeometry {
 public:
  DomainGeometry(Shape shape, double half_length);

  static DomainGeometry stadium(double half_length) { return {Shape::Stadium, half_length}; }
  static DomainGeometry rectangle(double half_length) { return {Shape::Rectangle, half_length}; }

  Shape shape() const noexcept { return shape_; }
  double half_length() const noexcept { return half_length_; }

  /// zeta_k(t). Throws DomainError for |t| > 1.
  Complex arc_point(ArcId k, double t) const;

  /// zeta_k(cos theta) for theta in [0, pi]. No range check; used by the
  /// quadrature paths where the Chebyshev substitution is already applied.
  Complex arc_point_angle(ArcId k, double theta) const noexcept;

  /// Distance from an interior point to the boundary. Throws DomainError for
  /// points on or outside the boundary.
  double inscribed_radius(Complex p) const;

  /// Signed distance to the boundary: positive inside, zero on it, negative
  /// outside. Never throws for finite input.
  double signed_distance(Complex p) const noexcept;

  bool contains(Complex p) const noexcept { return signed_distance(p) > 0.0; }

  /// Nearest boundary component of a point near the boundary. Stadium: Dome if
  /// |Re p| > L, Side otherwise. Rectangle: Dome (a vertical end) if that end
  /// is strictly closer than the horizontal sides. Ties go to Side.
  HitSide classify_hit(Complex p) const noexcept;

  /// Unit inward normal at zeta_k(t); at the corners t = +-1 the bisector of
  /// the two adjacent arcs' normals.
  Complex inward_normal(ArcId k, double t) const;

  friend bool operator==(const DomainGeometry&, const DomainGeometry&) = default;

 private:
  Shape shape_;
  double half_length_;
};

const char* to_string(Shape shape) noexcept;
Shape parse_shape(const std::string& name);

}  // namespace stadium
