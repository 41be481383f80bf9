#include "stadium/symm_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stadium/errors.hpp"
#include "stadium/quadrature.hpp"
#include "stadium/special_functions.hpp"

namespace stadium {

namespace {

constexpr double kPi = std::numbers::pi;

using quadrature::Panel;

double initial_panel_width(const CollocationConfig& cfg) {
  if (cfg.quadrature_points > 0) {
    return kPi * quadrature::kPanelOrder / cfg.quadrature_points;
  }
  // A 20-point panel integrates cos(n theta) to full precision while
  // n * width / 2 stays below ~10.
  return std::min(kPi / 4, 20.0 / (cfg.nu + 1));
}

bool is_dome(const DomainGeometry& geom, ArcId k) {
  return geom.shape() == Shape::Stadium && k.index() % 2 == 1;
}

// Half-length of a straight arc.
double straight_scale(const DomainGeometry& geom, ArcId k) {
  return k.index() % 2 == 0 ? geom.half_length() : 1.0;
}

}  // namespace

void CollocationConfig::validate() const {
  if (nu < 4) throw DomainError("collocation order nu must be at least 4, got " + std::to_string(nu));
  if (!(quadrature_tol > 0.0) || quadrature_tol > 1e-8) {
    throw DomainError("quadrature_tol must lie in (0, 1e-8]");
  }
  if (quadrature_points < 0) throw DomainError("quadrature_points must be non-negative");
  if (max_quadrature_nodes < 2 * quadrature::kPanelOrder) {
    throw DomainError("max_quadrature_nodes too small");
  }
}

CollocationPointSet collocation_points(int nu) {
  if (nu < 1) throw DomainError("collocation order must be positive");
  CollocationPointSet set;
  set.tau.resize(nu + 1);
  set.alpha.resize(nu + 1);
  for (int m = 0; m <= nu; ++m) {
    set.alpha[m] = (2.0 * m + 1.0) * kPi / (2.0 * nu + 2.0);
    set.tau[m] = std::cos(set.alpha[m]);
  }
  return set;
}

double SourceDensitySolution::total_mass() const {
  double s = 0.0;
  for (const auto& row : phi) s += row.at(0);
  return kPi * s;
}

double SourceDensitySolution::dome_measure() const {
  return kPi * (phi[1].at(0) + phi[3].at(0));
}

namespace singular {

double straight_self(double scale, double alpha, int n) {
  if (n == 0) return kPi * std::log(scale / 2.0);
  return -(kPi / n) * std::cos(n * alpha);
}

double log_distance_cosine_moment(double alpha, int n) {
  if (n < 1) throw DomainError("log_distance_cosine_moment requires n >= 1");
  if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("alpha must lie in (0, pi)");
  const double a = n * alpha;
  const double b = n * (kPi - alpha);
  using special::cos_integral;
  using special::sin_integral;
  return (std::sin(a) * (cos_integral(a) - cos_integral(b)) -
          std::cos(a) * (sin_integral(a) + sin_integral(b))) /
         n;
}

std::vector<double> dome_self_row(double alpha, int nu, double tol, int initial_points,
                                  int max_nodes) {
  // log[2 sin(x/2) / x], smooth for |x| < 2 pi.
  auto remainder = [alpha](double theta) {
    const double u = 0.5 * (alpha - theta);
    if (std::abs(u) < 1e-4) {
      const double u2 = u * u;
      return -u2 / 6.0 - u2 * u2 / 180.0;
    }
    return std::log(std::sin(u) / u);
  };
  const double width =
      initial_points > 0 ? kPi * quadrature::kPanelOrder / initial_points : std::min(kPi / 4, 20.0 / (nu + 1));
  std::vector<double> row = quadrature::cosine_moments(
      remainder, quadrature::uniform_panels(0.0, kPi, width), nu, tol, max_nodes);
  row[0] = -special::clausen_cl2(alpha) - special::clausen_cl2(kPi - alpha);
  for (int n = 1; n <= nu; ++n) row[n] += log_distance_cosine_moment(alpha, n);
  return row;
}

}  // namespace singular

CoefficientEvaluator::CoefficientEvaluator(DomainGeometry geometry, CollocationConfig config)
    : geometry_(geometry), config_(config) {
  config_.validate();
  points_ = collocation_points(config_.nu);
}

void CoefficientEvaluator::check_indices(int m, int n) const {
  if (m < 0 || m > config_.nu) throw DomainError("collocation index m out of range");
  if (n < 0 || n > config_.nu) throw DomainError("Chebyshev index n out of range");
}

std::vector<double> CoefficientEvaluator::self_row(ArcId j, int m) const {
  const double alpha = points_.alpha[m];
  if (is_dome(geometry_, j)) {
    return singular::dome_self_row(alpha, config_.nu, config_.quadrature_tol,
                                   config_.quadrature_points, config_.max_quadrature_nodes);
  }
  std::vector<double> row(config_.nu + 1);
  const double scale = straight_scale(geometry_, j);
  for (int n = 0; n <= config_.nu; ++n) row[n] = singular::straight_self(scale, alpha, n);
  return row;
}

std::vector<double> CoefficientEvaluator::cross_row(ArcId j, int m, ArcId k) const {
  const Complex z0 = geometry_.arc_point(j, points_.tau[m]);
  const DomainGeometry& geom = geometry_;
  auto log_distance = [&geom, k, z0](double theta) {
    return std::log(std::abs(z0 - geom.arc_point_angle(k, theta)));
  };
  auto panels = quadrature::refine_near(
      [&geom, k](double theta) { return geom.arc_point_angle(k, theta); }, z0,
      quadrature::uniform_panels(0.0, kPi, initial_panel_width(config_)));
  return quadrature::cosine_moments(log_distance, std::move(panels), config_.nu,
                                    config_.quadrature_tol, config_.max_quadrature_nodes);
}

std::vector<double> CoefficientEvaluator::row(ArcId j, int m, ArcId k) const {
  check_indices(m, 0);
  return j == k ? self_row(j, m) : cross_row(j, m, k);
}

double CoefficientEvaluator::coefficient(ArcId j, int m, ArcId k, int n) const {
  check_indices(m, n);
  if (j == k && !is_dome(geometry_, j)) {
    return singular::straight_self(straight_scale(geometry_, j), points_.alpha[m], n);
  }
  return row(j, m, k)[n];
}

double CoefficientEvaluator::mu(ArcId j, int m) const {
  check_indices(m, 0);
  return std::log(std::abs(geometry_.arc_point(j, points_.tau[m])));
}

LinearSystem assemble_system(const DomainGeometry& geometry, const CollocationConfig& config) {
  const CoefficientEvaluator eval(geometry, config);
  const int nu = config.nu;
  const int per_arc = nu + 1;
  const int rows = 4 * per_arc + 1;
  const int cols = 4 * per_arc;

  LinearSystem sys{Eigen::MatrixXd::Zero(rows, cols), Eigen::VectorXd::Zero(rows)};
  auto block = [&](int j, int k) { return sys.matrix.block(j * per_arc, k * per_arc, per_arc, per_arc); };

  constexpr std::array<std::pair<int, int>, 6> kIntegrated{
      {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 3}}};
  for (const auto& [j, k] : kIntegrated) {
    for (int m = 0; m <= nu; ++m) {
      const std::vector<double> r = eval.row(ArcId(j), m, ArcId(k));
      block(j, k).row(m) = Eigen::Map<const Eigen::RowVectorXd>(r.data(), per_arc);
    }
  }

  // Reflection z -> -conj(z) maps zeta_0(t) to zeta_0(-t) and zeta_1(t) to
  // zeta_3(-t); tau_{nu-m} = -tau_m and T_n(-t) = (-1)^n T_n(t).
  for (int m = 0; m <= nu; ++m) {
    for (int n = 0; n <= nu; ++n) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      block(0, 3)(m, n) = sign * block(0, 1)(nu - m, n);
      block(1, 2)(m, n) = sign * block(1, 0)(nu - m, n);
    }
  }
  // z -> -z maps arc k onto arc k+2.
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 4; ++k) block(j + 2, (k + 2) % 4) = block(j, k);
  }

  for (int j = 0; j < 2; ++j) {
    for (int m = 0; m <= nu; ++m) {
      const double mu = eval.mu(ArcId(j), m);
      sys.rhs(j * per_arc + m) = mu;
      sys.rhs((j + 2) * per_arc + m) = mu;
    }
  }
  for (int k = 0; k < 4; ++k) sys.matrix(rows - 1, k * per_arc) = kPi;
  sys.rhs(rows - 1) = 1.0;
  return sys;
}

SourceDensitySolution solve_system(const DomainGeometry& geometry, const CollocationConfig& config,
                                   const LinearSystem& system) {
  const int per_arc = config.nu + 1;
  if (system.matrix.cols() != 4 * per_arc || system.matrix.rows() != 4 * per_arc + 1) {
    throw DomainError("linear system shape does not match the collocation order");
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(system.matrix);
  const auto diag = qr.matrixQR().diagonal().cwiseAbs();
  if (diag.minCoeff() <= 1e-13 * diag.maxCoeff()) {
    throw SolverError("collocation matrix is numerically rank deficient");
  }
  const Eigen::VectorXd x = qr.solve(system.rhs);

  SourceDensitySolution sol{geometry, config.nu, {}, 0.0, config.quadrature_tol};
  sol.residual_norm = (system.matrix * x - system.rhs).norm();
  for (int k = 0; k < 4; ++k) {
    sol.phi[k].assign(x.data() + k * per_arc, x.data() + (k + 1) * per_arc);
  }
  return sol;
}

SourceDensitySolution solve(const DomainGeometry& geometry, const CollocationConfig& config) {
  config.validate();
  return solve_system(geometry, config, assemble_system(geometry, config));
}

}  // namespace stadium
