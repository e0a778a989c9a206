#include "rnls/estimates.hpp"

#include <cmath>
#include <stdexcept>

#include "rnls/duhamel.hpp"
#include "rnls/parallel.hpp"
#include "rnls/special.hpp"

namespace rnls {

namespace {

double triple_gamma(int n, const AdmissibilityTriple& t) {
  Rational g = Rational(n + 2) / t.q - t.alpha - t.s - Rational(n, 2);
  return g.to_double();
}

SpaceTimeField derivative_free_field(const TransformPlan& plan, const RadialProfile& phi,
                                     double s, const TimeGrid& window, int threads) {
  SpectralProfile psi = apply_fractional_derivative(plan.forward(phi), s);
  SpaceTimeField field(plan.radial(), window);
  parallel_for(window.size(), threads, [&](long k) {
    field.values.col(k) = plan.inverse(propagate_spectral(psi, window.t(k))).values.matrix();
  });
  return field;
}

}  // namespace

double strichartz_ratio(const TransformPlan& plan, const RadialProfile& phi,
                        const AdmissibilityTriple& triple, const TimeGrid& window,
                        bool allow_inadmissible, int threads) {
  const double data_norm = l2_norm(phi);
  if (data_norm == 0.0) throw std::invalid_argument("strichartz_ratio: zero data");
  if (!allow_inadmissible && !check_thm21_admissible(plan.dim(), triple))
    throw std::invalid_argument("strichartz_ratio: triple fails the admissibility condition");

  SpaceTimeField field =
      derivative_free_field(plan, phi, triple.s.to_double(), window, threads);
  double value = weighted_spacetime_norm(field, triple.q.to_double(), triple.alpha.to_double(),
                                         threads);
  return value / data_norm;
}

SweepReport sweep_homogeneous(const TransformPlan& plan, const std::vector<DataFamily>& families,
                              const AdmissibilityTriple& triple, const SweepConfig& config) {
  if (families.empty()) throw std::invalid_argument("sweep needs at least one family");
  std::vector<double> mus = config.dilations.empty() ? standard_dilations() : config.dilations;

  const int n = plan.dim();
  const double gamma = triple_gamma(n, triple);
  const bool admissible = gamma == 0.0;
  const double q = triple.q.to_double();
  const double alpha = triple.alpha.to_double();
  const double s = triple.s.to_double();

  SweepReport report;
  report.summary.gamma = gamma;

  std::vector<double> log_mu, log_ratio_rel;
  double max_ratio = 0, max_var = 0;
  bool all_pass = true;

  for (const auto& family : families) {
    std::vector<double> ratios(mus.size());
    std::vector<double> tails(mus.size());
    for (size_t i = 0; i < mus.size(); ++i) {
      const double mu = mus[i];
      RadialProfile member = family.sample(plan.radial(), mu);
      TimeGrid window = TimeGrid::stretched(-mu * mu * config.t_base, mu * mu * config.t_base,
                                            config.time_samples, config.stretch);
      ratios[i] = strichartz_ratio(plan, member, triple, window, !admissible, config.threads);
      tails[i] = free_tail_bound(n, q, alpha, mu * mu * config.t_base, l1_norm(member),
                                 l2_norm(member), true);
    }

    // reference member: mu closest to 1
    size_t ref = 0;
    for (size_t i = 1; i < mus.size(); ++i)
      if (std::abs(std::log(mus[i])) < std::abs(std::log(mus[ref]))) ref = i;

    for (size_t i = 0; i < mus.size(); ++i) {
      SweepRow row;
      row.family = family.name();
      row.param1 = family.kind == DataFamily::Kind::Chirp ? family.frequency : family.width;
      row.mu = mus[i];
      row.q = q;
      row.alpha = alpha;
      row.s = s;
      row.ratio = ratios[i];
      row.tail_bound = tails[i];
      max_ratio = std::max(max_ratio, ratios[i]);
      if (admissible) {
        double deviation = std::abs(ratios[i] / ratios[ref] - 1.0);
        max_var = std::max(max_var, deviation);
        bool ok = deviation <= config.invariance_tol;
        all_pass = all_pass && ok;
        row.verdict = ok ? "pass" : "fail";
      } else {
        row.verdict = "expected-fail";
        if (ratios[i] > 0 && ratios[ref] > 0 && i != ref) {
          log_mu.push_back(std::log(mus[i] / mus[ref]));
          log_ratio_rel.push_back(std::log(ratios[i] / ratios[ref]));
        }
      }
      report.rows.push_back(std::move(row));
    }
  }

  report.summary.max_ratio = max_ratio;
  report.summary.max_dilation_variation = max_var;
  if (!admissible && !log_mu.empty()) {
    // least squares through the origin: ratios follow mu^gamma exactly
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < log_mu.size(); ++i) {
      sxy += log_mu[i] * log_ratio_rel[i];
      sxx += log_mu[i] * log_mu[i];
    }
    report.summary.fitted_slope = sxy / sxx;
    all_pass = std::abs(report.summary.fitted_slope - gamma) <= config.slope_tol * std::abs(gamma);
  }
  report.summary.all_pass = all_pass;
  return report;
}

double pointwise_weighted_bound(const TransformPlan& plan, const RadialProfile& phi, double s,
                                const TimeGrid& window, int threads) {
  const int n = plan.dim();
  if (!(s > 0.5 && s < 0.5 * n))
    throw std::domain_error("pointwise_weighted_bound needs s strictly inside (1/2, n/2)");
  const double denom = sobolev_norm(plan, phi, s);
  if (denom == 0.0) throw std::invalid_argument("pointwise_weighted_bound: zero data");

  Eigen::ArrayXd weight = plan.radial()->r.pow(0.5 * n - s);
  SpectralProfile psi = plan.forward(phi);
  Eigen::ArrayXd per_time(window.size());
  parallel_for(window.size(), threads, [&](long k) {
    RadialProfile u = plan.inverse(propagate_spectral(psi, window.t(k)));
    per_time(k) = (weight * u.values.abs()).maxCoeff();
  });
  return per_time.maxCoeff() / denom;
}

InhomogeneousRatios inhomogeneous_check(const TransformPlan& plan, const SpaceTimeField& forcing,
                                        const ExponentSet& exps, int threads) {
  InhomogeneousRatios out;
  if (forcing.values.cwiseAbs().maxCoeff() == 0.0) return out;  // trivial zero forcing

  const double q1 = exps.q1.to_double();
  const double q1_dual = q1 / (q1 - 1.0);
  const double alpha1 = exps.alpha1.to_double();
  out.rhs = weighted_spacetime_norm(forcing, q1_dual, -alpha1, threads);
  if (!(out.rhs > 0.0) || !std::isfinite(out.rhs))
    throw std::domain_error("inhomogeneous_check: right-hand weighted norm is not finite/nonzero");

  SpaceTimeField D = duhamel_integral(plan, forcing, threads);
  out.ratio_lq =
      weighted_spacetime_norm(D, exps.q0.to_double(), exps.alpha0.to_double(), threads) / out.rhs;

  const double s0 = exps.s0.to_double();
  Eigen::ArrayXd per_time(D.time_samples());
  parallel_for(D.time_samples(), threads, [&](long k) {
    per_time(k) = sobolev_norm(plan, D.at(k), -s0);
  });
  out.ratio_sup = per_time.maxCoeff() / out.rhs;
  return out;
}

KernelBoundScan kernel_bound_scan(int n, double q, double alpha, double first_cutoff,
                                  int doublings, double dr) {
  if (!(q >= 1.0)) throw std::domain_error("kernel_bound_scan needs q >= 1");
  if (!(alpha < static_cast<double>(n) / q))
    throw std::domain_error("kernel_bound_scan: inner integral needs alpha < n/q");
  if (!(first_cutoff > 1.0) || doublings < 1)
    throw std::invalid_argument("kernel_bound_scan: bad cutoff sequence");

  const double omega = sphere_area(n);
  auto integrand = [&](double r) {
    return omega * std::pow(std::abs(surface_measure_ft(n, r)), q) * std::pow(r, n - 1 - alpha * q);
  };

  KernelBoundScan scan;
  {
    Eigen::Index m = static_cast<Eigen::Index>(std::ceil(1.0 / dr));
    Eigen::ArrayXd r = Eigen::ArrayXd::LinSpaced(m, 1.0 / static_cast<double>(m), 1.0);
    Eigen::ArrayXd f(m);
    for (Eigen::Index j = 0; j < m; ++j)
      f(j) = omega * std::pow(std::abs(surface_measure_ft(n, r(j))), q);
    scan.inner = power_weighted_integral(r, f, n - 1 - alpha * q);
  }

  double r_max = first_cutoff * std::pow(2.0, doublings);
  double value = 0.0;
  double r_prev = 1.0, f_prev = integrand(1.0);
  double next_cutoff = first_cutoff;
  for (double r = 1.0 + dr; r <= r_max + 0.5 * dr; r += dr) {
    double f = integrand(r);
    value += 0.5 * (f_prev + f) * (r - r_prev);
    r_prev = r;
    f_prev = f;
    if (r >= next_cutoff - 0.5 * dr) {
      scan.cutoffs.push_back(next_cutoff);
      scan.outer.push_back(value);
      next_cutoff *= 2.0;
    }
  }
  for (size_t i = 1; i < scan.outer.size(); ++i)
    scan.growth.push_back((scan.outer[i] - scan.outer[i - 1]) / scan.outer[i - 1]);
  return scan;
}

}  // namespace rnls
