#include "stadium/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "stadium/errors.hpp"

namespace stadium::quadrature {

QuadratureRule gauss_chebyshev(int points) {
  if (points < 1) throw DomainError("quadrature rule needs at least one point");
  QuadratureRule rule;
  rule.nodes.resize(points);
  rule.weights.assign(points, std::numbers::pi / points);
  for (int i = 0; i < points; ++i) {
    // Reverse so nodes increase.
    const int j = points - 1 - i;
    rule.nodes[i] = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * points));
  }
  return rule;
}

void append_gauss_legendre(double a, double b, std::vector<double>& nodes,
                           std::vector<double>& weights) {
  using Rule = boost::math::quadrature::gauss<double, kPanelOrder>;
  // Boost stores the non-negative half of the symmetric rule.
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::size_t half_count = x.size();
  for (std::size_t i = half_count; i-- > 0;) {
    if (x[i] == 0.0) continue;
    nodes.push_back(mid - half * x[i]);
    weights.push_back(half * w[i]);
  }
  for (std::size_t i = 0; i < half_count; ++i) {
    nodes.push_back(mid + half * x[i]);
    weights.push_back(half * w[i]);
  }
}

std::vector<Panel> uniform_panels(double a, double b, double max_width) {
  const int count = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
  std::vector<Panel> panels(count);
  const double h = (b - a) / count;
  for (int i = 0; i < count; ++i) {
    panels[i] = {a + i * h, i + 1 == count ? b : a + (i + 1) * h};
  }
  return panels;
}

std::vector<Panel> bisect_all(const std::vector<Panel>& panels) {
  std::vector<Panel> out;
  out.reserve(2 * panels.size());
  for (const auto& p : panels) {
    const double mid = 0.5 * (p.a + p.b);
    out.push_back({p.a, mid});
    out.push_back({mid, p.b});
  }
  return out;
}

std::size_t node_count(const std::vector<Panel>& panels) {
  return panels.size() * kPanelOrder;
}

}  // namespace stadium::quadrature

#include <algorithm>
#include <string>

#include "stadium/simd/kernels.hpp"

namespace stadium::quadrature {

namespace {

std::vector<double> moments_on(const std::function<double(double)>& g,
                               const std::vector<Panel>& panels, int nmax) {
  std::vector<double> theta;
  std::vector<double> weights;
  theta.reserve(node_count(panels));
  weights.reserve(node_count(panels));
  for (const auto& p : panels) append_gauss_legendre(p.a, p.b, theta, weights);
  std::vector<double> x(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    x[i] = std::cos(theta[i]);
    weights[i] *= g(theta[i]);
  }
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
  simd::chebyshev_moments(x, weights, out);
  return out;
}

}  // namespace

std::vector<double> cosine_moments(const std::function<double(double)>& g,
                                   std::vector<Panel> panels, int nmax, double tol,
                                   std::size_t max_nodes) {
  std::vector<double> coarse = moments_on(g, panels, nmax);
  for (;;) {
    std::vector<Panel> fine_panels = bisect_all(panels);
    if (node_count(fine_panels) > max_nodes) {
      throw ConvergenceError("cosine-moment quadrature exceeded " + std::to_string(max_nodes) +
                                 " nodes without meeting tolerance",
                             coarse.empty() ? 0.0 : coarse[0], std::nan(""));
    }
    std::vector<double> fine = moments_on(g, fine_panels, nmax);
    double diff = 0.0;
    for (std::size_t n = 0; n < fine.size(); ++n) diff = std::max(diff, std::abs(fine[n] - coarse[n]));
    if (diff < tol) return fine;
    if (node_count(fine_panels) * 2 > max_nodes) {
      throw ConvergenceError("cosine-moment quadrature did not converge within " +
                                 std::to_string(max_nodes) + " nodes",
                             fine[0], diff);
    }
    panels = std::move(fine_panels);
    coarse = std::move(fine);
  }
}

}  // namespace stadium::quadrature

namespace stadium::quadrature {

std::vector<Panel> refine_near(const std::function<std::complex<double>(double)>& curve,
                               std::complex<double> z0, const std::vector<Panel>& start,
                               double min_width) {
  std::vector<Panel> done;
  std::vector<Panel> work(start.rbegin(), start.rend());
  while (!work.empty()) {
    const Panel p = work.back();
    work.pop_back();
    const auto za = curve(p.a);
    const auto zb = curve(p.b);
    const double chord = std::abs(zb - za);
    double dist = std::min(std::abs(z0 - za), std::abs(z0 - zb));
    for (double f : {0.25, 0.5, 0.75}) {
      dist = std::min(dist, std::abs(z0 - curve(p.a + f * (p.b - p.a))));
    }
    if (dist < chord && p.b - p.a > min_width) {
      const double mid = 0.5 * (p.a + p.b);
      work.push_back({mid, p.b});
      work.push_back({p.a, mid});
    } else {
      done.push_back(p);
    }
  }
  return done;
}

}  // namespace stadium::quadrature
