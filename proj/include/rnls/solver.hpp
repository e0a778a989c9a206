#pragma once

#include <vector>

#include "rnls/duhamel.hpp"
#include "rnls/exponents.hpp"
#include "rnls/norms.hpp"

namespace rnls {

struct SolverConfig {
  double delta = 0.02;   ///< admissible data-norm scale; data above it is rejected
  double tol = 1e-10;    ///< fixed-point metric tolerance
  int max_iter = 12;
  double t_min = 0.0;
  double t_max = 4.0;
  Eigen::Index time_samples = 129;
  int threads = 1;
};

struct PicardDiagnostics {
  std::vector<double> distances;  ///< d(u_{k+1}, u_k) per iteration
  std::vector<double> ratios;     ///< consecutive distance ratios
  XNormValue final_norm;
  bool converged = false;
  bool diverged = false;          ///< non-finite iterate encountered
  int iterations = 0;
};

/// f(v) = lambda |v|^(p-1) v, pointwise; vacuum points are clamped to zero
/// so fractional powers stay finite.
RadialProfile nonlinearity(const RadialProfile& v, const ProblemParams& params);
SpaceTimeField nonlinearity(const SpaceTimeField& v, const ProblemParams& params);

/// -i integral_0^t U(t - tau) F(tau) dtau on the field's samples.
SpaceTimeField duhamel(const TransformPlan& plan, const SpaceTimeField& forcing, int threads = 1);

/// Picard iteration u_{k+1} = U(t) phi + duhamel(f(u_k)) in the X-metric,
/// starting from the free evolution. Non-convergence is reported in the
/// diagnostics, never silently.
std::pair<SpaceTimeField, PicardDiagnostics> picard_solve(const TransformPlan& plan,
                                                          const RadialProfile& phi,
                                                          const ProblemParams& params,
                                                          const ExponentSet& exps,
                                                          const SolverConfig& config);

/// Measured constant of the global bound: x_norm(solution) / data norm.
/// Zero data passes vacuously with C = 0.
bool verify_global_bound(const TransformPlan& plan, const SpaceTimeField& solution,
                         const RadialProfile& phi, const ExponentSet& exps, double* c_measured,
                         int threads = 1);

struct SplittingConfig {
  Eigen::Index substeps_per_interval = 8;  ///< Strang steps between time samples
  int threads = 1;
};

/// Strang splitting oracle: half-step nonlinear phase rotation around a full
/// spectral free step. Real lambda uses the exact pointwise phase solution;
/// complex lambda integrates the pointwise amplitude ODE with RK4. lambda = 0
/// reduces to the exact free propagator. Requires a uniform time grid from
/// t = 0; throws on non-finite state.
SpaceTimeField splitting_solve(const TransformPlan& plan, const RadialProfile& phi,
                               const ProblemParams& params, const TimeGrid& times,
                               const SplittingConfig& config = {});

/// Largest data norm (within a few bisection steps) whose Picard run keeps
/// every contraction ratio below `target_ratio`. Exploratory diagnostic.
double find_contraction_delta(const TransformPlan& plan, const RadialProfile& shape,
                              const ProblemParams& params, const ExponentSet& exps,
                              SolverConfig config, double target_ratio = 0.5,
                              int bisection_steps = 6);

}  // namespace rnls
