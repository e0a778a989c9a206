#pragma once

#include <Eigen/Dense>
#include <memory>

namespace rnls {

/// Radial quadrature grid: strictly increasing nodes on (0, r_max] with
/// trapezoid weights carrying the r^(n-1) volume factor. The implicit node
/// at r = 0 contributes nothing for n >= 2 and is left out.
struct RadialGrid {
  int dim = 3;
  double r_max = 0;
  Eigen::ArrayXd r;        ///< nodes, size N
  Eigen::ArrayXd weights;  ///< quadrature weights for integrals against r^(n-1) dr

  Eigen::Index size() const { return r.size(); }
};

/// Same construction in the frequency radius rho.
struct SpectralGrid {
  int dim = 3;
  double rho_max = 0;
  Eigen::ArrayXd rho;
  Eigen::ArrayXd weights;

  Eigen::Index size() const { return rho.size(); }
};

std::shared_ptr<const RadialGrid> make_radial_grid(int n, Eigen::Index points, double r_max);
std::shared_ptr<const SpectralGrid> make_spectral_grid(int n, Eigen::Index points, double rho_max);

/// Time sample points for space-time fields.
struct TimeGrid {
  Eigen::ArrayXd t;
  Eigen::Index size() const { return t.size(); }

  static TimeGrid uniform(double t0, double t1, Eigen::Index samples);
  /// sinh-stretched nodes clustering near t = 0; covers [-T, T] when
  /// symmetric (t0 = -t1 < 0) or [0, T]; t = 0 is always a node.
  static TimeGrid stretched(double t0, double t1, Eigen::Index samples, double strength);
};

}  // namespace rnls
