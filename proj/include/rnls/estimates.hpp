#pragma once

#include <string>
#include <vector>

#include "rnls/exponents.hpp"
#include "rnls/families.hpp"
#include "rnls/norms.hpp"

namespace rnls {

/// || r^(-alpha) |D|^s U(.) phi ||_{L^q} over the window, divided by ||phi||_2.
/// The triple must pass the admissibility condition unless the caller
/// explicitly runs a negative test.
double strichartz_ratio(const TransformPlan& plan, const RadialProfile& phi,
                        const AdmissibilityTriple& triple, const TimeGrid& window,
                        bool allow_inadmissible = false, int threads = 1);

struct SweepConfig {
  double t_base = 0.2;           ///< window for mu = 1; member mu gets mu^2 * t_base
  Eigen::Index time_samples = 201;
  double stretch = 4.0;
  std::vector<double> dilations;  ///< defaults to standard_dilations()
  double invariance_tol = 0.02;
  double slope_tol = 0.10;        ///< relative tolerance on the fitted slope
  int threads = 1;
};

struct SweepRow {
  std::string family;
  double param1 = 0;  ///< width (gaussian) or frequency (chirp)
  double param2 = 0;  ///< reserved
  double mu = 1;
  double q = 0, alpha = 0, s = 0;
  double ratio = 0;
  double tail_bound = 0;
  std::string verdict;
};

struct SweepSummary {
  double max_ratio = 0;
  double max_dilation_variation = 0;  ///< max over families of |ratio/ratio(mu=1) - 1|
  double gamma = 0;                   ///< scaling-identity mismatch of the triple
  double fitted_slope = 0;            ///< log-ratio vs log-mu slope (gamma != 0 sweeps)
  bool all_pass = false;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

/// Ratio sweep over family members and dilations. Each member phi_mu(r) =
/// phi(r/mu) runs on the window mu^2 * t_base, so the truncated continuum
/// ratio is exactly dilation-invariant and only discretization moves it.
/// For a triple with scaling mismatch gamma != 0 the ratios follow mu^gamma;
/// the report carries the fitted slope and marks rows "expected-fail".
SweepReport sweep_homogeneous(const TransformPlan& plan, const std::vector<DataFamily>& families,
                              const AdmissibilityTriple& triple, const SweepConfig& config);

/// sup over sampled (t, r) of r^(n/2 - s) |U(t) phi| divided by || |D|^s phi ||_2.
/// Requires s strictly inside (1/2, n/2).
double pointwise_weighted_bound(const TransformPlan& plan, const RadialProfile& phi, double s,
                                const TimeGrid& window, int threads = 1);

struct InhomogeneousRatios {
  double ratio_lq = 0;   ///< || r^(-alpha0) D ||_{q0} / rhs
  double ratio_sup = 0;  ///< sup_t || |D|^(-s0) D(t) ||_2 / rhs
  double rhs = 0;        ///< || r^(alpha1) F ||_{q1'}
};

/// Both left-hand norms of the dual inhomogeneous estimate on the Duhamel
/// integral of F, divided by the right-hand weighted norm of F.
InhomogeneousRatios inhomogeneous_check(const TransformPlan& plan, const SpaceTimeField& forcing,
                                        const ExponentSet& exps, int threads = 1);

struct KernelBoundScan {
  double inner = 0;               ///< integral over {|y| < 1}
  std::vector<double> cutoffs;    ///< doubling sequence of outer radii
  std::vector<double> outer;      ///< integral over {1 < |y| < R} per cutoff
  std::vector<double> growth;     ///< relative growth per doubling step
};

/// Truncated weighted integrals of the kernel, integral (|y|^-alpha |K|)^q
/// over shells: converges iff n/q - (n-1)/2 < alpha < n/q, and the scan shows
/// it as cutoff-doubling growth.
KernelBoundScan kernel_bound_scan(int n, double q, double alpha, double first_cutoff,
                                  int doublings, double dr = 0.005);

}  // namespace rnls
