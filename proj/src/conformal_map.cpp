#include "stadium/conformal_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stadium/errors.hpp"
#include "stadium/quadrature.hpp"
#include "stadium/simd/kernels.hpp"

namespace stadium {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Absolute agreement required between node-doubled estimates of P(z).
constexpr double kPotentialTol = 1e-11;
constexpr std::size_t kMaxPotentialNodes = std::size_t{1} << 18;

// sum_{j=0}^{count-1} a_j U_j(t) by Clenshaw.
double chebyshev_U_series(std::span<const double> a, double t) {
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) {
    const double b0 = a[j] + 2.0 * t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

struct PotentialEstimate {
  Complex value;
  bool steps_ok;
};

// One quadrature pass over all four arcs with the given panels (in theta,
// ascending). Arcs are walked with t increasing, i.e. theta decreasing.
PotentialEstimate potential_pass(const SourceDensitySolution& sol, Complex z,
                                 const std::array<std::vector<quadrature::Panel>, 4>& panels) {
  const DomainGeometry& geom = sol.geometry;
  double prev_arg = std::arg(z - geom.arc_point(ArcId(0), -1.0));
  bool steps_ok = true;
  Complex total(0.0, 0.0);

  std::vector<double> theta;
  std::vector<double> weights;
  std::vector<double> x;
  std::vector<double> density;
  for (int k = 0; k < 4; ++k) {
    theta.clear();
    weights.clear();
    for (const auto& p : panels[k]) quadrature::append_gauss_legendre(p.a, p.b, theta, weights);
    x.resize(theta.size());
    density.resize(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) x[i] = std::cos(theta[i]);
    simd::chebyshev_series(sol.phi[k], x, density);

    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = theta.size(); i-- > 0;) {
      const Complex d = z - geom.arc_point_angle(ArcId(k), theta[i]);
      const double step = std::remainder(std::arg(d) - prev_arg, kTwoPi);
      if (std::abs(step) > kPi / 2) steps_ok = false;
      prev_arg += step;
      const double wd = weights[i] * density[i];
      re += wd * std::log(std::abs(d));
      im += wd * prev_arg;
    }
    total += Complex(re, im);
  }
  return {total, steps_ok};
}

}  // namespace

BoundaryAngleTable::BoundaryAngleTable(const SourceDensitySolution& solution, double rotation)
    : phi_(solution.phi) {
  double cursor = rotation;
  for (int k = 0; k < 4; ++k) {
    start_[k] = cursor;
    span_[k] = 2.0 * kPi * kPi * phi_[k].at(0);
    cursor += span_[k];
  }
}

double BoundaryAngleTable::angle(ArcId k, double t) const {
  if (!(std::abs(t) <= 1.0)) throw DomainError("arc parameter t must lie in [-1, 1]");
  const auto& phi = phi_[k.index()];
  std::vector<double> a(phi.size() > 1 ? phi.size() - 1 : 0);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = phi[j + 1] / static_cast<double>(j + 1);
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  return start_[k.index()] + kTwoPi * phi[0] * (kPi - std::acos(t)) -
         kTwoPi * s * chebyshev_U_series(a, t);
}

double BoundaryAngleTable::total_span() const noexcept {
  return span_[0] + span_[1] + span_[2] + span_[3];
}

const char* to_string(MeasureMethod method) noexcept {
  switch (method) {
    case MeasureMethod::Symm:
      return "symm";
    case MeasureMethod::RectExact:
      return "rect_exact";
    case MeasureMethod::MonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

namespace {

double rotation_constant(const SourceDensitySolution& sol, const DiskMap& map) {
  const ArcId first(0);
  const Complex corner = sol.geometry.arc_point(first, -1.0);
  // Twice the guard keeps the probe admissible for right-angled corners too.
  const Complex probe = corner + 2.0 * kBoundaryGuard * sol.geometry.inward_normal(first, -1.0);
  return std::arg(map.map_point(probe));
}

}  // namespace

DiskMap::DiskMap(SourceDensitySolution solution)
    : solution_(std::move(solution)), angles_(solution_, 0.0) {
  for (const auto& row : solution_.phi) {
    if (row.empty()) throw DomainError("solution has an empty coefficient row");
  }
  branch_offset_ = raw_potential(Complex(0.0, 0.0)).imag();
  angles_ = BoundaryAngleTable(solution_, rotation_constant(solution_, *this));
}

Complex DiskMap::potential(Complex z) const {
  return raw_potential(z) - Complex(0.0, branch_offset_);
}

Complex DiskMap::raw_potential(Complex z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("point has non-finite components");
  }
  const double dist = geometry().signed_distance(z);
  if (!(dist >= kBoundaryGuard * (1.0 - 1e-6))) {
    throw DomainError("point is not at least 1e-6 inside the boundary");
  }

  const double width = std::min(kPi / 8, 20.0 / (solution_.nu + 1));
  std::array<std::vector<quadrature::Panel>, 4> panels;
  for (int k = 0; k < 4; ++k) {
    const ArcId arc(k);
    const DomainGeometry& geom = geometry();
    panels[k] = quadrature::refine_near(
        [&geom, arc](double theta) { return geom.arc_point_angle(arc, theta); }, z,
        quadrature::uniform_panels(0.0, kPi, width));
  }

  PotentialEstimate coarse = potential_pass(solution_, z, panels);
  for (;;) {
    std::size_t nodes = 0;
    for (auto& p : panels) {
      p = quadrature::bisect_all(p);
      nodes += quadrature::node_count(p);
    }
    if (nodes > kMaxPotentialNodes) {
      throw ConvergenceError("potential quadrature did not converge", coarse.value.real(),
                             std::nan(""));
    }
    const PotentialEstimate fine = potential_pass(solution_, z, panels);
    if (coarse.steps_ok && fine.steps_ok && std::abs(fine.value - coarse.value) < kPotentialTol) {
      return fine.value;
    }
    coarse = fine;
  }
}

Complex DiskMap::map_point(Complex z) const { return z * std::exp(-potential(z)); }

double measure_from_spans(const BoundaryAngleTable& table, std::span<const ArcId> arcs) {
  if (arcs.empty()) throw DomainError("harmonic measure needs a nonempty arc set");
  std::array<bool, 4> chosen{};
  for (ArcId k : arcs) chosen[k.index()] = true;
  // Sets holding arc 0 are measured through their complement: m + fl(1 - m)
  // rounds to exactly 1, so complementary sets sum to 1 without error.
  const bool flip = chosen[0];
  double part = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (chosen[k] != flip) part += table.span(ArcId(k));
  }
  const double m = part / table.total_span();
  return flip ? 1.0 - m : m;
}

HarmonicMeasureResult DiskMap::harmonic_measure(std::span<const ArcId> arcs) const {
  HarmonicMeasureResult r;
  r.p = measure_from_spans(angles_, arcs);
  r.method = MeasureMethod::Symm;
  r.order = solution_.nu;
  r.uncertainty = std::abs(solution_.total_mass() - 1.0);
  return r;
}

std::vector<MeshSample> DiskMap::export_mesh(int radial_lines, int circles, int samples) const {
  if (radial_lines < 0 || circles < 0 || samples < 2 || radial_lines + circles == 0) {
    throw DomainError("mesh export needs non-negative curve counts (not both zero) and samples >= 2");
  }
  const DomainGeometry& geom = geometry();
  // Global boundary parameter u in [0, 4): arc floor(u), t = 2 frac(u) - 1.
  auto boundary = [&geom](double u) {
    u = std::fmod(u, 4.0);
    if (u < 0.0) u += 4.0;
    const int k = std::min(3, static_cast<int>(u));
    const double t = std::clamp(2.0 * (u - k) - 1.0, -1.0, 1.0);
    return geom.arc_point(ArcId(k), t);
  };

  std::vector<MeshSample> out;
  for (int c = 0; c < circles; ++c) {
    const double s = (c + 1.0) / (circles + 1.0);
    for (int j = 0; j <= samples; ++j) {
      const Complex z = s * boundary(4.0 * j / samples);
      out.push_back({z, map_point(z), c});
    }
  }
  for (int r = 0; r < radial_lines; ++r) {
    // Ray 0 runs along the positive real axis (midpoint of arc 1).
    const Complex direction = boundary(1.5 + 4.0 * r / radial_lines);
    for (int j = 0; j < samples; ++j) {
      const Complex z = (0.99 * j / (samples - 1)) * direction;
      out.push_back({z, map_point(z), circles + r});
    }
  }
  return out;
}

Complex mobius_halfplane_to_disk(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("w has non-finite components");
  }
  if (!(w.imag() > 0.0)) throw DomainError("Mobius map requires Im w > 0");
  const Complex i(0.0, 1.0);
  return i * (w - i) / (w + i);
}

}  // namespace stadium
