#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stadium/geometry.hpp"
#include "stadium/symm_solver.hpp"

namespace stadium {

/// Interior points closer than this to the boundary are rejected by the map
/// evaluators; boundary data comes from the angle formula instead.
inline constexpr double kBoundaryGuard = 1e-6;

/// Angular coordinate on the unit circle of the image of each boundary arc.
///   theta_k(t) = theta_k(-1) + 2 pi phi_k0 (pi - acos t)
///                - 2 pi sqrt(1 - t^2) sum_{n>=1} phi_kn U_{n-1}(t) / n
/// Arc start angles are chained through the corners, theta_{k+1}(-1) =
/// theta_k(1), from a global rotation theta_0(-1).
class BoundaryAngleTable {
 public:
  BoundaryAngleTable(const SourceDensitySolution& solution, double rotation);

  double angle(ArcId k, double t) const;
  double start(ArcId k) const noexcept { return start_[k.index()]; }
  double end(ArcId k) const noexcept { return start_[k.index()] + span_[k.index()]; }
  /// theta_k(1) - theta_k(-1) = 2 pi^2 phi_k0.
  double span(ArcId k) const noexcept { return span_[k.index()]; }
  double rotation() const noexcept { return start_[0]; }
  double total_span() const noexcept;

 private:
  std::array<std::vector<double>, 4> phi_;
  std::array<double, 4> start_{};
  std::array<double, 4> span_{};
};

enum class MeasureMethod { Symm, RectExact, MonteCarlo };

const char* to_string(MeasureMethod method) noexcept;

struct HarmonicMeasureResult {
  double p = 0.0;
  MeasureMethod method = MeasureMethod::Symm;
  /// Collocation order (Symm) or trial count (Monte Carlo); 0 otherwise.
  std::int64_t order = 0;
  /// Monte Carlo absorption threshold and seed; unused by the other methods.
  double h = 0.0;
  std::uint64_t seed = 0;
  /// Symm: normalisation defect |pi sum phi_k0 - 1|; Monte Carlo: binomial
  /// standard error; RectExact: root tolerance.
  double uncertainty = 0.0;
};

/// One sample of an exported mesh curve.
struct MeshSample {
  Complex z;
  Complex f;
  int curve_id;
};

/// Conformal map f(z) = z exp(-P(z)) of the domain onto the unit disk with
/// f(0) = 0, where P(z) = sum_k int sigma_k(t) log(z - zeta_k(t)) dt.
class DiskMap {
 public:
  explicit DiskMap(SourceDensitySolution solution);

  const DomainGeometry& geometry() const noexcept { return solution_.geometry; }
  const SourceDensitySolution& solution() const noexcept { return solution_; }

  /// P(z) for z at least kBoundaryGuard inside the boundary. The imaginary
  /// part uses an argument of z - zeta continued along the boundary from the
  /// corner zeta_0(-1), so exp(-P) is single valued; its additive constant is
  /// fixed by Im P(0) = 0, which makes f'(0) > 0.
  Complex potential(Complex z) const;

  Complex map_point(Complex z) const;

  const BoundaryAngleTable& angles() const noexcept { return angles_; }
  double boundary_angle(ArcId k, double t) const { return angles_.angle(k, t); }

  /// Share of the total boundary winding taken by the given arcs; the domes
  /// {1, 3} give pi(phi_10 + phi_30) / (pi sum_k phi_k0).
  HarmonicMeasureResult harmonic_measure(std::span<const ArcId> arcs) const;

  /// Forward images of scaled boundary copies s * Gamma (circles, ids
  /// 0..circles-1) and rays s * zeta(u), s in [0, 0.99] (ids circles..).
  std::vector<MeshSample> export_mesh(int radial_lines, int circles, int samples) const;

 private:
  Complex raw_potential(Complex z) const;

  SourceDensitySolution solution_;
  BoundaryAngleTable angles_;
  double branch_offset_ = 0.0;
};

/// Harmonic measure from raw per-arc spans, normalised by the total winding.
double measure_from_spans(const BoundaryAngleTable& table, std::span<const ArcId> arcs);

/// w -> i (w - i) / (w + i), upper half-plane onto the unit disk.
Complex mobius_halfplane_to_disk(Complex w);

}  // namespace stadium
