#pragma once

namespace stadium {

struct RectMeasureQuery {
  /// Ratio of the rectangle's horizontal to vertical side lengths.
  double L = 1.0;
  /// Required |g(p)| at the returned root.
  double tol = 1e-12;
};

/// Harmonic measure, seen from the centre, of the two short (vertical) ends
/// of a 2L x 2 rectangle: the root p in (0, 1) of
///   g(p) = p pi / 2 + arg K(e^{i p pi}) - acot(L).
/// For L > 1 the root is sought in log p, so long rectangles resolve down to
/// p ~ 1e-300; below that the result underflows to 0. L < 1 uses
/// p(L) = 1 - p(1/L).
double rect_end_measure(const RectMeasureQuery& query);

/// g(p) above, evaluated through the complementary modulus so it stays
/// accurate as p -> 0.
double rect_residual(double p, double L);

}  // namespace stadium
