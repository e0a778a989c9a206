#pragma once

// Test-only oracles, all independent of the transform/solver code paths they
// check: direct quadrature of the defining spherical integral, finite
// differences, and a Crank-Nicolson reference integrator.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rnls/profile.hpp"
#include "rnls/special.hpp"

namespace oracles {

using rnls::Complex;

// d-sigma-hat(r) by Simpson quadrature of the defining spherical integral,
// reduced to one polar angle.
inline double kernel_by_quadrature(int n, double r) {
  const long m = std::max<long>(1 << 15, 64 * static_cast<long>(std::ceil(r)));
  if (n == 2) {
    const double h = 2.0 * M_PI / m;
    double s = 0;
    for (long j = 0; j <= m; ++j) {
      double w = (j == 0 || j == m) ? 1 : (j % 2 ? 4 : 2);
      s += w * std::cos(r * std::cos(j * h));
    }
    return s * h / 3.0;
  }
  const double h = M_PI / m;
  double s = 0;
  for (long j = 0; j <= m; ++j) {
    double th = j * h;
    double w = (j == 0 || j == m) ? 1 : (j % 2 ? 4 : 2);
    s += w * std::cos(r * std::cos(th)) * std::pow(std::sin(th), n - 2);
  }
  return rnls::sphere_area(n - 1) * s * h / 3.0;
}

// Fourth-order finite-difference radial Laplacian u'' + (n-1)/r u' on a
// uniform grid; valid on interior nodes two cells away from each end.
inline Eigen::ArrayXcd fd_laplacian(const rnls::RadialProfile& u) {
  const auto& r = u.grid->r;
  const Eigen::Index m = r.size();
  const double h = r(1) - r(0);
  const int n = u.grid->dim;
  Eigen::ArrayXcd out = Eigen::ArrayXcd::Zero(m);
  for (Eigen::Index j = 2; j + 2 < m; ++j) {
    Complex d2 = (-u.values(j - 2) + 16.0 * u.values(j - 1) - 30.0 * u.values(j) +
                  16.0 * u.values(j + 1) - u.values(j + 2)) /
                 (12.0 * h * h);
    Complex d1 = (u.values(j - 2) - 8.0 * u.values(j - 1) + 8.0 * u.values(j + 1) -
                  u.values(j + 2)) /
                 (12.0 * h);
    out(j) = d2 + static_cast<double>(n - 1) / r(j) * d1;
  }
  return out;
}

// Thomas algorithm for complex tridiagonal systems with constant bands.
inline void tridiag_solve(Complex lower, Complex diag, Complex upper, std::vector<Complex>& rhs) {
  const size_t m = rhs.size();
  std::vector<Complex> c(m);
  c[0] = upper / diag;
  rhs[0] /= diag;
  for (size_t i = 1; i < m; ++i) {
    Complex denom = diag - lower * c[i - 1];
    c[i] = upper / denom;
    rhs[i] = (rhs[i] - lower * rhs[i - 1]) / denom;
  }
  for (size_t i = m - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
}

// Crank-Nicolson integrator for i u_t + Lap u = F in n = 3, via v = r u which
// turns the radial Laplacian into plain v_rr with v(0) = v(r_max) = 0.
// Returns u(t_final) on the profile's grid. F may be null for the free flow.
inline rnls::RadialProfile cn_evolve(const rnls::RadialProfile& u0, double t_final, long steps,
                                     const std::function<Complex(double, double)>& forcing = {}) {
  if (u0.grid->dim != 3) throw std::invalid_argument("cn_evolve oracle is n = 3 only");
  const auto& r = u0.grid->r;
  const Eigen::Index m = r.size();
  const double h = r(1) - r(0);
  const double dt = t_final / steps;
  const Complex I(0.0, 1.0);

  // v_t = i v_rr - i r F(t, r); CN in both terms
  std::vector<Complex> v(m);
  for (Eigen::Index j = 0; j < m; ++j) v[j] = r(j) * u0.values(j);

  const Complex theta = I * dt / (2.0 * h * h);
  const Complex lower = -theta, upper = -theta, diag = 1.0 + 2.0 * theta;
  std::vector<Complex> rhs(m);
  for (long s = 0; s < steps; ++s) {
    const double t_mid = (s + 0.5) * dt;
    for (Eigen::Index j = 0; j < m; ++j) {
      Complex left = j > 0 ? v[j - 1] : Complex(0);
      Complex right = j + 1 < m ? v[j + 1] : Complex(0);
      rhs[j] = v[j] + theta * (left - 2.0 * v[j] + right);
      if (forcing) rhs[j] -= I * dt * r(j) * forcing(t_mid, r(j));
    }
    tridiag_solve(lower, diag, upper, rhs);
    v = rhs;
  }
  rnls::RadialProfile out(u0.grid);
  for (Eigen::Index j = 0; j < m; ++j) out.values(j) = v[j] / r(j);
  return out;
}

// Relative L2 distance with the grid's own weights.
inline double rel_l2(const rnls::RadialProfile& a, const rnls::RadialProfile& b) {
  double num = 0, den = 0;
  for (Eigen::Index j = 0; j < a.grid->size(); ++j) {
    num += a.grid->weights(j) * std::norm(a.values(j) - b.values(j));
    den += a.grid->weights(j) * std::norm(b.values(j));
  }
  return std::sqrt(num / den);
}

}  // namespace oracles
