#pragma once

#include <cstddef>
#include <vector>

namespace stadium::quadrature {

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive
};

/// M-point Gauss-Chebyshev rule for int_{-1}^{1} f(t) / sqrt(1 - t^2) dt.
/// Nodes cos((2i+1) pi / 2M), sorted increasing; all weights pi / M.
QuadratureRule gauss_chebyshev(int points);

/// Fixed-order Gauss-Legendre panel rule used by the composite quadratures.
inline constexpr int kPanelOrder = 20;

struct Panel {
  double a;
  double b;
};

/// Appends the kPanelOrder Gauss-Legendre nodes and weights of [a, b]
/// (nodes in increasing order).
void append_gauss_legendre(double a, double b, std::vector<double>& nodes,
                           std::vector<double>& weights);

/// Splits [a, b] into the fewest equal panels no wider than max_width.
std::vector<Panel> uniform_panels(double a, double b, double max_width);

/// Halves every panel.
std::vector<Panel> bisect_all(const std::vector<Panel>& panels);

std::size_t node_count(const std::vector<Panel>& panels);

}  // namespace stadium::quadrature

#include <functional>

namespace stadium::quadrature {

/// Cosine moments I_n = int over the panels of cos(n theta) g(theta) d theta,
/// n = 0 .. nmax, by composite Gauss-Legendre. Every panel is bisected until
/// two successive estimates agree to tol in every moment; the finer estimate
/// is returned. Throws ConvergenceError once the node count would exceed
/// max_nodes.
std::vector<double> cosine_moments(const std::function<double(double)>& g,
                                   std::vector<Panel> panels, int nmax, double tol,
                                   std::size_t max_nodes);

}  // namespace stadium::quadrature

#include <complex>

namespace stadium::quadrature {

/// Bisects panels of the parametrised curve theta -> curve(theta) until each
/// panel's chord is no longer than its sampled distance to z0, which keeps
/// the logarithmic near-singularity at z0 outside every panel's convergence
/// region. Panels narrower than min_width are left alone.
std::vector<Panel> refine_near(const std::function<std::complex<double>(double)>& curve,
                               std::complex<double> z0, const std::vector<Panel>& start,
                               double min_width = 1e-14);

}  // namespace stadium::quadrature
