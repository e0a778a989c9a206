#include "rnls/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "rnls/parallel.hpp"

namespace rnls {

namespace {

Complex power_law(Complex v, double pm1, Complex lambda) {
  double a = std::abs(v);
  if (a < 1e-300) return {0.0, 0.0};
  return lambda * std::pow(a, pm1) * v;
}

Eigen::ArrayXcd nonlinearity_column(const Eigen::ArrayXcd& v, double pm1, Complex lambda) {
  Eigen::ArrayXcd out(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) out(j) = power_law(v(j), pm1, lambda);
  return out;
}

bool finite(const Eigen::MatrixXcd& m) { return m.allFinite(); }

}  // namespace

RadialProfile nonlinearity(const RadialProfile& v, const ProblemParams& params) {
  if (!(params.p > Rational(1))) throw std::domain_error("nonlinearity requires p > 1");
  double pm1 = params.p.to_double() - 1.0;
  return {v.grid, nonlinearity_column(v.values, pm1, params.lambda())};
}

SpaceTimeField nonlinearity(const SpaceTimeField& v, const ProblemParams& params) {
  if (!(params.p > Rational(1))) throw std::domain_error("nonlinearity requires p > 1");
  double pm1 = params.p.to_double() - 1.0;
  Complex lambda = params.lambda();
  SpaceTimeField out = v;
  for (Eigen::Index k = 0; k < v.time_samples(); ++k)
    out.values.col(k) = nonlinearity_column(v.values.col(k).array(), pm1, lambda).matrix();
  return out;
}

SpaceTimeField duhamel(const TransformPlan& plan, const SpaceTimeField& forcing, int threads) {
  SpaceTimeField out = duhamel_integral(plan, forcing, threads);
  out.values *= Complex(0.0, -1.0);
  return out;
}

std::pair<SpaceTimeField, PicardDiagnostics> picard_solve(const TransformPlan& plan,
                                                          const RadialProfile& phi,
                                                          const ProblemParams& params,
                                                          const ExponentSet& exps,
                                                          const SolverConfig& config) {
  params.require_solver_range();
  exps.verify();
  if (config.max_iter < 1 || !(config.tol > 0))
    throw std::invalid_argument("picard_solve: need max_iter >= 1 and tol > 0");

  const double s0 = exps.s0.to_double();
  const double data_norm = sobolev_norm(plan, phi, -s0);
  if (data_norm > config.delta)
    throw std::invalid_argument("picard_solve: data norm " + std::to_string(data_norm) +
                                " exceeds the configured smallness scale delta = " +
                                std::to_string(config.delta));

  TimeGrid times = TimeGrid::uniform(config.t_min, config.t_max, config.time_samples);
  SpaceTimeField free_part = free_evolution_field(plan, phi, times, config.threads);

  PicardDiagnostics diag;
  SpaceTimeField u = free_part;
  for (int it = 0; it < config.max_iter; ++it) {
    SpaceTimeField next = free_part;
    next.values += duhamel(plan, nonlinearity(u, params), config.threads).values;
    if (!finite(next.values)) {
      diag.diverged = true;
      diag.iterations = it + 1;
      return {u, diag};
    }
    double d = x_metric(plan, next, u, exps, config.threads);
    if (!std::isfinite(d)) {
      diag.diverged = true;
      diag.iterations = it + 1;
      return {u, diag};
    }
    diag.distances.push_back(d);
    if (diag.distances.size() > 1 && diag.distances[diag.distances.size() - 2] > 0)
      diag.ratios.push_back(d / diag.distances[diag.distances.size() - 2]);
    u = std::move(next);
    diag.iterations = it + 1;
    if (d < config.tol) {
      diag.converged = true;
      break;
    }
  }
  diag.final_norm = x_norm(plan, u, exps, config.threads);
  return {u, diag};
}

bool verify_global_bound(const TransformPlan& plan, const SpaceTimeField& solution,
                         const RadialProfile& phi, const ExponentSet& exps, double* c_measured,
                         int threads) {
  const double data_norm = sobolev_norm(plan, phi, -exps.s0.to_double());
  if (data_norm == 0.0) {
    if (c_measured) *c_measured = 0.0;
    return true;  // vacuous
  }
  double c = x_norm(plan, solution, exps, threads).total / data_norm;
  if (c_measured) *c_measured = c;
  return std::isfinite(c);
}

SpaceTimeField splitting_solve(const TransformPlan& plan, const RadialProfile& phi,
                               const ProblemParams& params, const TimeGrid& times,
                               const SplittingConfig& config) {
  if (times.t(0) != 0.0) throw std::invalid_argument("splitting_solve: time grid must start at 0");
  for (Eigen::Index k = 1; k < times.size(); ++k)
    if (!(times.t(k) > times.t(k - 1)))
      throw std::invalid_argument("splitting_solve: time grid must increase");
  if (config.substeps_per_interval < 1)
    throw std::invalid_argument("splitting_solve: need at least one substep");

  const double pm1 = params.p.to_double() - 1.0;
  const Complex lambda = params.lambda();
  const bool has_nonlinearity = std::abs(lambda) > 0.0;
  const bool lambda_real = params.lambda_im == 0.0;
  const Eigen::ArrayXd rho2 = plan.spectral()->rho.square();

  // pointwise half-step of i u_t = lambda |u|^(p-1) u
  auto rotate = [&](Eigen::ArrayXcd& u, double dt) {
    if (!has_nonlinearity || dt == 0.0) return;
    if (lambda_real) {
      // |u| is conserved; the phase advances by -lambda |u|^(p-1) dt exactly
      for (Eigen::Index j = 0; j < u.size(); ++j) {
        double a = std::abs(u(j));
        if (a < 1e-300) continue;
        u(j) *= std::polar(1.0, -params.lambda_re * std::pow(a, pm1) * dt);
      }
    } else {
      auto rhs = [&](Complex v) { return Complex(0.0, -1.0) * power_law(v, pm1, lambda); };
      for (Eigen::Index j = 0; j < u.size(); ++j) {
        Complex v = u(j);
        Complex k1 = rhs(v);
        Complex k2 = rhs(v + 0.5 * dt * k1);
        Complex k3 = rhs(v + 0.5 * dt * k2);
        Complex k4 = rhs(v + dt * k3);
        u(j) = v + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
    }
  };

  SpaceTimeField out(plan.radial(), times);
  out.values.col(0) = phi.values.matrix();

  if (!has_nonlinearity) {
    // pure free evolution: compose phases spectrally, no per-step round trips
    SpectralProfile psi = plan.forward(phi);
    parallel_for(times.size() - 1, config.threads, [&](long i) {
      Eigen::Index k = i + 1;
      out.values.col(k) = plan.inverse(propagate_spectral(psi, times.t(k))).values.matrix();
    });
    return out;
  }

  Eigen::ArrayXcd u = phi.values;
  for (Eigen::Index k = 1; k < times.size(); ++k) {
    const double span = times.t(k) - times.t(k - 1);
    const double dt = span / static_cast<double>(config.substeps_per_interval);
    Eigen::ArrayXd theta = dt * rho2;
    Eigen::ArrayXcd kinetic(theta.size());
    kinetic.real() = theta.cos();
    kinetic.imag() = -theta.sin();

    // Strang: leading half rotation, interior rotations merged to full steps
    rotate(u, 0.5 * dt);
    for (Eigen::Index step = 0; step < config.substeps_per_interval; ++step) {
      SpectralProfile psi = plan.forward({plan.radial(), u});
      psi.values *= kinetic;
      u = plan.inverse(psi).values;
      rotate(u, step + 1 < config.substeps_per_interval ? dt : 0.5 * dt);
    }
    if (!u.allFinite())
      throw std::runtime_error("splitting_solve: non-finite state at t = " +
                               std::to_string(times.t(k)) + " (step size unstable)");
    out.values.col(k) = u.matrix();
  }
  return out;
}

double find_contraction_delta(const TransformPlan& plan, const RadialProfile& shape,
                              const ProblemParams& params, const ExponentSet& exps,
                              SolverConfig config, double target_ratio, int bisection_steps) {
  const double s0 = exps.s0.to_double();
  const double shape_norm = sobolev_norm(plan, shape, -s0);
  if (shape_norm == 0.0) throw std::invalid_argument("find_contraction_delta: zero shape");

  auto contracts = [&](double data_norm) {
    RadialProfile phi = shape;
    phi.values *= data_norm / shape_norm;
    config.delta = data_norm * 1.0001;
    auto [u, diag] = picard_solve(plan, phi, params, exps, config);
    (void)u;
    if (!diag.converged && !diag.ratios.empty())
      return false;
    for (double r : diag.ratios)
      if (!(r < target_ratio)) return false;
    return diag.converged;
  };

  double lo = 0.0, hi = 0.01;
  while (contracts(hi) && hi < 1e3) {
    lo = hi;
    hi *= 4.0;
  }
  for (int i = 0; i < bisection_steps; ++i) {
    double mid = 0.5 * (lo + hi);
    if (contracts(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace rnls
