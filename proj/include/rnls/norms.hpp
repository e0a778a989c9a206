#pragma once

#include "rnls/exponents.hpp"
#include "rnls/profile.hpp"
#include "rnls/transform.hpp"

namespace rnls {

/// integral_0^xmax f(x) x^beta dx for nonnegative node samples f, beta > -1.
/// Trapezoid between nodes; the cell (0, x_1] integrates the power weight
/// exactly against f ~ f(x_1), which keeps integrable singularities honest.
double power_weighted_integral(const Eigen::ArrayXd& x, const Eigen::ArrayXd& f, double beta);

/// L2(R^n) norm by grid quadrature.
double l2_norm(const RadialProfile& profile);
/// L1(R^n) norm by grid quadrature.
double l1_norm(const RadialProfile& profile);

/// || r^(-alpha) v ||_{L^q(dt x R^n)} over the field's time window.
/// Space: power-weighted radial quadrature; time: trapezoid on the samples.
/// Requires q >= 1 and alpha < n/q.
double weighted_spacetime_norm(const SpaceTimeField& field, double q, double alpha,
                               int threads = 1);

/// || |D|^sigma phi ||_{L2} from the spectral side. Requires sigma > -n/2.
double sobolev_norm(const SpectralProfile& spectral, double sigma);
double sobolev_norm(const TransformPlan& plan, const RadialProfile& profile, double sigma);

struct XNormValue {
  double sup_sobolev = 0;  ///< sup_t || |D|^(-s0) v(t) ||_{L2}
  double weighted_lq = 0;  ///< || r^(-alpha0) v ||_{L^q0}
  double total = 0;        ///< sum of the two
};

/// The contraction-space norm: sup-in-time negative-order Sobolev piece plus
/// the weighted space-time piece, with exponents from the supplied set.
XNormValue x_norm(const TransformPlan& plan, const SpaceTimeField& field, const ExponentSet& exps,
                  int threads = 1);

/// Distance used by the fixed-point iteration: x_norm of the difference.
double x_metric(const TransformPlan& plan, const SpaceTimeField& a, const SpaceTimeField& b,
                const ExponentSet& exps, int threads = 1);

/// || |D|^(-s0) phi ||_{L2} / || r^(s0) phi ||_{L2}, s0 in (0, 1/2).
double dual_hardy_ratio(const TransformPlan& plan, const RadialProfile& profile, double s0);

/// Upper bound on the || r^(-alpha) u ||_{L^q} mass of a free evolution left
/// outside |t| <= T, from the dispersive sup bound (4 pi |t|)^(-n/2) ||phi||_1
/// split against the conserved L2 mass. Returns +inf when the exponents give
/// no integrable bound (q = 2 endpoint, alpha <= 0).
double free_tail_bound(int n, double q, double alpha, double T, double phi_l1, double phi_l2,
                       bool two_sided);

}  // namespace rnls
