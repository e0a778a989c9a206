#include "rnls/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace rnls {

namespace {

void make_uniform_nodes(int n, Eigen::Index points, double x_max, Eigen::ArrayXd& x,
                        Eigen::ArrayXd& w) {
  if (n < 2) throw std::invalid_argument("grid dimension must be >= 2");
  if (points < 8) throw std::invalid_argument("grid needs at least 8 points");
  if (!(x_max > 0)) throw std::invalid_argument("grid extent must be positive");
  const double h = x_max / static_cast<double>(points);
  x = Eigen::ArrayXd::LinSpaced(points, h, x_max);
  w = h * x.pow(n - 1);
  w(points - 1) *= 0.5;  // half weight at the outer boundary node
}

}  // namespace

std::shared_ptr<const RadialGrid> make_radial_grid(int n, Eigen::Index points, double r_max) {
  auto g = std::make_shared<RadialGrid>();
  g->dim = n;
  g->r_max = r_max;
  make_uniform_nodes(n, points, r_max, g->r, g->weights);
  return g;
}

std::shared_ptr<const SpectralGrid> make_spectral_grid(int n, Eigen::Index points, double rho_max) {
  auto g = std::make_shared<SpectralGrid>();
  g->dim = n;
  g->rho_max = rho_max;
  make_uniform_nodes(n, points, rho_max, g->rho, g->weights);
  return g;
}

TimeGrid TimeGrid::uniform(double t0, double t1, Eigen::Index samples) {
  if (samples < 2) throw std::invalid_argument("time grid needs at least 2 samples");
  if (!(t1 > t0)) throw std::invalid_argument("time grid needs t1 > t0");
  TimeGrid g;
  g.t = Eigen::ArrayXd::LinSpaced(samples, t0, t1);
  return g;
}

TimeGrid TimeGrid::stretched(double t0, double t1, Eigen::Index samples, double strength) {
  if (!(t1 > t0)) throw std::invalid_argument("time grid needs t1 > t0");
  if (!(strength > 0)) return uniform(t0, t1, samples);
  TimeGrid g;
  if (t0 < 0 && t1 > 0) {
    // symmetric two-sided window; force an odd count so t = 0 is a node
    if (std::abs(t0 + t1) > 1e-12 * std::abs(t1))
      throw std::invalid_argument("two-sided stretched grids must be symmetric");
    Eigen::Index m = samples % 2 == 0 ? samples + 1 : samples;
    Eigen::ArrayXd xi = Eigen::ArrayXd::LinSpaced(m, -1.0, 1.0);
    g.t = t1 * (strength * xi).sinh() / std::sinh(strength);
    g.t((m - 1) / 2) = 0.0;
  } else if (t0 == 0.0) {
    Eigen::ArrayXd xi = Eigen::ArrayXd::LinSpaced(samples, 0.0, 1.0);
    g.t = t1 * (strength * xi).sinh() / std::sinh(strength);
    g.t(0) = 0.0;
  } else {
    throw std::invalid_argument("stretched time grids support [0, T] or [-T, T] only");
  }
  return g;
}

}  // namespace rnls
