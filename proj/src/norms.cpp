#include "rnls/norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rnls/parallel.hpp"
#include "rnls/special.hpp"

namespace rnls {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Compensated accumulation; the node counts here are small enough for double,
// this keeps reductions reproducible to the last bit regardless of grouping.
struct KahanSum {
  double sum = 0, c = 0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

double trapezoid_time(const Eigen::ArrayXd& t, const Eigen::ArrayXd& f) {
  KahanSum acc;
  for (Eigen::Index k = 0; k + 1 < t.size(); ++k)
    acc.add(0.5 * (f(k) + f(k + 1)) * (t(k + 1) - t(k)));
  return acc.sum;
}

}  // namespace

double power_weighted_integral(const Eigen::ArrayXd& x, const Eigen::ArrayXd& f, double beta) {
  if (x.size() != f.size()) throw std::invalid_argument("power_weighted_integral: size mismatch");
  if (!(beta > -1.0)) throw std::domain_error("power_weighted_integral needs beta > -1");
  KahanSum acc;
  acc.add(f(0) * std::pow(x(0), beta + 1.0) / (beta + 1.0));  // cell (0, x_1]
  double g_prev = f(0) * std::pow(x(0), beta);
  for (Eigen::Index j = 1; j < x.size(); ++j) {
    double g = f(j) * std::pow(x(j), beta);
    acc.add(0.5 * (g_prev + g) * (x(j) - x(j - 1)));
    g_prev = g;
  }
  return acc.sum;
}

double l2_norm(const RadialProfile& profile) {
  KahanSum acc;
  const auto& g = *profile.grid;
  for (Eigen::Index j = 0; j < g.size(); ++j)
    acc.add(g.weights(j) * std::norm(profile.values(j)));
  return std::sqrt(sphere_area(g.dim) * acc.sum);
}

double l1_norm(const RadialProfile& profile) {
  KahanSum acc;
  const auto& g = *profile.grid;
  for (Eigen::Index j = 0; j < g.size(); ++j)
    acc.add(g.weights(j) * std::abs(profile.values(j)));
  return sphere_area(g.dim) * acc.sum;
}

double weighted_spacetime_norm(const SpaceTimeField& field, double q, double alpha, int threads) {
  if (!(q >= 1.0)) throw std::domain_error("weighted_spacetime_norm needs q >= 1");
  const int n = field.grid->dim;
  if (!(alpha < static_cast<double>(n) / q))
    throw std::domain_error("weight not locally integrable: alpha >= n/q");
  if (field.time_samples() == 0) throw std::invalid_argument("empty field");

  const double beta = n - 1 - alpha * q;
  const Eigen::ArrayXd& r = field.grid->r;
  const Eigen::Index m = field.time_samples();

  Eigen::ArrayXd slice(m);
  parallel_for(m, threads, [&](long k) {
    Eigen::ArrayXd fq = field.values.col(k).array().abs().pow(q);
    slice(k) = power_weighted_integral(r, fq, beta);
  });
  double integral = sphere_area(n) * trapezoid_time(field.times.t, slice);
  return std::pow(integral, 1.0 / q);
}

double sobolev_norm(const SpectralProfile& spectral, double sigma) {
  const int n = spectral.grid->dim;
  if (!(sigma > -0.5 * n)) throw std::domain_error("sobolev_norm needs sigma > -n/2");
  double integral;
  if (sigma == 0.0) {
    KahanSum acc;
    for (Eigen::Index j = 0; j < spectral.grid->size(); ++j)
      acc.add(spectral.grid->weights(j) * std::norm(spectral.values(j)));
    integral = acc.sum;
  } else {
    Eigen::ArrayXd f2 = spectral.values.abs2();
    integral = power_weighted_integral(spectral.grid->rho, f2, n - 1 + 2.0 * sigma);
  }
  return std::sqrt(std::pow(2.0 * kPi, -n) * sphere_area(n) * integral);
}

double sobolev_norm(const TransformPlan& plan, const RadialProfile& profile, double sigma) {
  return sobolev_norm(plan.forward(profile), sigma);
}

XNormValue x_norm(const TransformPlan& plan, const SpaceTimeField& field, const ExponentSet& exps,
                  int threads) {
  const double s0 = exps.s0.to_double();
  const Eigen::Index m = field.time_samples();
  Eigen::ArrayXd per_time(m);
  parallel_for(m, threads, [&](long k) {
    per_time(k) = sobolev_norm(plan, field.at(k), -s0);
  });
  XNormValue v;
  v.sup_sobolev = per_time.maxCoeff();
  v.weighted_lq =
      weighted_spacetime_norm(field, exps.q0.to_double(), exps.alpha0.to_double(), threads);
  v.total = v.sup_sobolev + v.weighted_lq;
  return v;
}

double x_metric(const TransformPlan& plan, const SpaceTimeField& a, const SpaceTimeField& b,
                const ExponentSet& exps, int threads) {
  return x_norm(plan, a - b, exps, threads).total;
}

double dual_hardy_ratio(const TransformPlan& plan, const RadialProfile& profile, double s0) {
  if (!(s0 > 0.0 && s0 < 0.5)) throw std::domain_error("dual_hardy_ratio needs s0 in (0, 1/2)");
  const int n = profile.grid->dim;
  Eigen::ArrayXd f2 = profile.values.abs2();
  double rhs = std::sqrt(sphere_area(n) *
                         power_weighted_integral(profile.grid->r, f2, n - 1 + 2.0 * s0));
  if (rhs == 0.0) throw std::domain_error("dual_hardy_ratio: weighted norm vanishes");
  return sobolev_norm(plan, profile, -s0) / rhs;
}

double free_tail_bound(int n, double q, double alpha, double T, double phi_l1, double phi_l2,
                       bool two_sided) {
  const double inf = std::numeric_limits<double>::infinity();
  if (!(alpha > 0.0) || !(T > 0.0) || phi_l1 <= 0.0) return inf;
  const double aq = alpha * q;
  if (!(aq < n)) return inf;

  // |u(t)| <= M(t) = (4 pi t)^(-n/2) ||phi||_1 and ||u(t)||_2 = ||phi||_2 give,
  // after splitting at the optimal radius,
  //   integral (r^-alpha |u|)^q dx <= K * M(t)^theta,  theta = q - 2 + 2 alpha q / n.
  const double theta = q - 2.0 + 2.0 * aq / n;
  const double decay = 0.5 * n * theta;  // M(t)^theta ~ t^(-decay)
  if (!(decay > 1.0)) return inf;

  const double omega = sphere_area(n);
  const double A = phi_l2 * phi_l2;                 // coefficient of M^(q-2) R^(-aq)
  const double B = omega / (n - aq);                // coefficient of M^q R^(n-aq)
  // minimize A M^(q-2) R^(-aq) + B M^q R^(n-aq) over R
  const double M_T = std::pow(4.0 * kPi * T, -0.5 * n) * phi_l1;
  const double R_T = std::pow(aq * A / ((n - aq) * B * M_T * M_T), 1.0 / n);
  const double value_T =
      std::pow(M_T, q - 2.0) * A * std::pow(R_T, -aq) * (static_cast<double>(n) / (n - aq));
  // integral_T^inf of value(t) dt with value ~ t^(-decay)
  double integral = value_T * T / (decay - 1.0);
  if (two_sided) integral *= 2.0;
  return std::pow(integral, 1.0 / q);
}

}  // namespace rnls
