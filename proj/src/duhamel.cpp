#include "rnls/duhamel.hpp"

#include <cmath>
#include <stdexcept>

#include "rnls/parallel.hpp"

namespace rnls {

namespace {

Eigen::ArrayXcd phase_factor(const Eigen::ArrayXd& rho2, double t) {
  Eigen::ArrayXd theta = t * rho2;
  Eigen::ArrayXcd out(theta.size());
  out.real() = theta.cos();
  out.imag() = -theta.sin();
  return out;
}

}  // namespace

Eigen::Index time_origin_index(const TimeGrid& times) {
  double scale = std::max(std::abs(times.t(0)), std::abs(times.t(times.size() - 1)));
  for (Eigen::Index k = 0; k < times.size(); ++k)
    if (std::abs(times.t(k)) <= 1e-12 * scale) return k;
  throw std::invalid_argument("time grid must contain t = 0");
}

SpaceTimeField free_evolution_field(const TransformPlan& plan, const RadialProfile& phi,
                                    const TimeGrid& times, int threads) {
  SpectralProfile psi = plan.forward(phi);
  SpaceTimeField out(plan.radial(), times);
  const Eigen::ArrayXd rho2 = plan.spectral()->rho.square();
  parallel_for(times.size(), threads, [&](long k) {
    SpectralProfile pk = psi;
    pk.values *= phase_factor(rho2, times.t(k));
    out.values.col(k) = plan.inverse(pk).values.matrix();
  });
  return out;
}

SpaceTimeField duhamel_integral(const TransformPlan& plan, const SpaceTimeField& forcing,
                                int threads) {
  const Eigen::Index m = forcing.time_samples();
  const Eigen::Index nrho = plan.spectral()->size();
  const Eigen::Index i0 = time_origin_index(forcing.times);
  const Eigen::ArrayXd& tau = forcing.times.t;
  const Eigen::ArrayXd rho2 = plan.spectral()->rho.square();

  // G_k = e^{+i tau_k rho^2} F_hat(tau_k): the integrand in the interaction frame.
  Eigen::MatrixXcd G(nrho, m);
  parallel_for(m, threads, [&](long k) {
    SpectralProfile fk = plan.forward(forcing.at(k));
    G.col(k) = (fk.values * phase_factor(rho2, -tau(k))).matrix();
  });

  // Oriented cumulative trapezoid from the t = 0 node outward.
  Eigen::MatrixXcd S(nrho, m);
  S.col(i0).setZero();
  for (Eigen::Index k = i0 + 1; k < m; ++k)
    S.col(k) = S.col(k - 1) + 0.5 * (tau(k) - tau(k - 1)) * (G.col(k - 1) + G.col(k));
  for (Eigen::Index k = i0 - 1; k >= 0; --k)
    S.col(k) = S.col(k + 1) + 0.5 * (tau(k) - tau(k + 1)) * (G.col(k + 1) + G.col(k));

  SpaceTimeField out(plan.radial(), forcing.times);
  parallel_for(m, threads, [&](long k) {
    SpectralProfile dk{plan.spectral(), S.col(k).array() * phase_factor(rho2, tau(k))};
    out.values.col(k) = plan.inverse(dk).values.matrix();
  });
  return out;
}

}  // namespace rnls
