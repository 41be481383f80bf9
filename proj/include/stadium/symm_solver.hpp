#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "stadium/geometry.hpp"

namespace stadium {

/// Discretisation parameters for the collocated boundary integral equation.
struct CollocationConfig {
  /// Highest Chebyshev degree of the density on every arc; nu + 1 collocation
  /// points per arc.
  int nu = 256;
  /// Initial node count for each coefficient integral; 0 picks a count that
  /// resolves T_nu.
  int quadrature_points = 0;
  /// Successive node-doubled estimates must agree to this absolute tolerance.
  double quadrature_tol = 1e-10;
  /// Node budget per integral before a ConvergenceError is raised.
  int max_quadrature_nodes = 1 << 20;

  void validate() const;
};

/// Chebyshev collocation points tau_m = cos(alpha_m), alpha_m = (2m+1) pi / (2 nu + 2),
/// m = 0..nu (identical on every arc).
struct CollocationPointSet {
  std::vector<double> tau;    // strictly decreasing
  std::vector<double> alpha;  // strictly increasing, in (0, pi)
};

CollocationPointSet collocation_points(int nu);

/// Solved density: sigma_k(t) = phi_k(t) / sqrt(1 - t^2),
/// phi_k(t) = sum_n phi[k][n] T_n(t).
struct SourceDensitySolution {
  DomainGeometry geometry;
  int nu = 0;
  std::array<std::vector<double>, 4> phi;
  double residual_norm = 0.0;
  double quadrature_tol = 0.0;

  /// pi * sum_k phi[k][0]; equals 1 for an exact solve.
  double total_mass() const;
  /// pi (phi_10 + phi_30): the harmonic measure of the domes (vertical ends
  /// for a rectangle) seen from the origin.
  double dome_measure() const;
};

/// Dense least-squares system, rows j(nu+1)+m then the normalisation row;
/// column k(nu+1)+n.
struct LinearSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

/// Evaluates the collocation coefficients
///   C_{jmkn} = int_{-1}^{1} T_n(t)/sqrt(1-t^2) log|zeta_j(tau_m) - zeta_k(t)| dt
/// and right-hand sides mu_{jm} = log|zeta_j(tau_m)|.
class CoefficientEvaluator {
 public:
  CoefficientEvaluator(DomainGeometry geometry, CollocationConfig config);

  const DomainGeometry& geometry() const noexcept { return geometry_; }
  const CollocationConfig& config() const noexcept { return config_; }
  const CollocationPointSet& points() const noexcept { return points_; }

  /// C_{jmkn} for n = 0..nu at one collocation point. Self-arc rows use the
  /// closed forms; other rows use node-doubled composite Gauss-Legendre in
  /// the angle variable t = cos(theta).
  std::vector<double> row(ArcId j, int m, ArcId k) const;

  double coefficient(ArcId j, int m, ArcId k, int n) const;

  double mu(ArcId j, int m) const;

 private:
  std::vector<double> self_row(ArcId j, int m) const;
  std::vector<double> cross_row(ArcId j, int m, ArcId k) const;
  void check_indices(int m, int n) const;

  DomainGeometry geometry_;
  CollocationConfig config_;
  CollocationPointSet points_;
};

/// Builds the (4nu+5) x (4nu+4) system. Only the blocks (j,k) in
/// {(0,0),(0,1),(0,2),(1,0),(1,1),(1,3)} are integrated; the rest follow from
/// the z -> -z and z -> -conj(z) symmetries of the domain.
LinearSystem assemble_system(const DomainGeometry& geometry, const CollocationConfig& config);

/// Least-squares solve of the assembled system by Householder QR.
SourceDensitySolution solve_system(const DomainGeometry& geometry, const CollocationConfig& config,
                                   const LinearSystem& system);

SourceDensitySolution solve(const DomainGeometry& geometry, const CollocationConfig& config);

namespace singular {

/// int_{-1}^{1} T_n(t)/sqrt(1-t^2) log|scale (cos(alpha) - t)| dt: a straight
/// arc's self-coefficient, scale being its half-length.
double straight_self(double scale, double alpha, int n);

/// int_0^pi cos(n theta) log|alpha - theta| d theta, n >= 1, in terms of Si
/// and Ci.
double log_distance_cosine_moment(double alpha, int n);

/// Unit-semicircle self-coefficient
///   int_0^pi cos(n theta) log|2 sin((alpha - theta)/2)| d theta
/// for all n = 0..nu. n = 0 uses Clausen functions; n >= 1 adds the smooth
/// remainder (quadrature) to log_distance_cosine_moment.
std::vector<double> dome_self_row(double alpha, int nu, double tol, int initial_points,
                                  int max_nodes);

}  // namespace singular

}  // namespace stadium
