#include "rnls/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "rnls/special.hpp"

namespace rnls {

namespace {

constexpr double kPi = 3.14159265358979323846;

// K * v for real kernel K and complex v, without materializing a complex kernel.
Eigen::ArrayXcd real_kernel_apply(const Eigen::MatrixXd& kernel, const Eigen::ArrayXcd& v) {
  Eigen::VectorXd re = v.real().matrix();
  Eigen::VectorXd im = v.imag().matrix();
  Eigen::VectorXd out_re = kernel * re;
  Eigen::VectorXd out_im = kernel * im;
  Eigen::ArrayXcd out(out_re.size());
  out.real() = out_re.array();
  out.imag() = out_im.array();
  return out;
}

}  // namespace

TransformPlan::TransformPlan(std::shared_ptr<const RadialGrid> radial,
                             std::shared_ptr<const SpectralGrid> spectral)
    : radial_(std::move(radial)), spectral_(std::move(spectral)) {
  if (radial_->dim != spectral_->dim)
    throw std::invalid_argument("transform plan: grid dimensions differ");
  const int n = radial_->dim;
  const Eigen::Index nr = radial_->size();
  const Eigen::Index ns = spectral_->size();

  forward_kernel_.resize(ns, nr);
  for (Eigen::Index i = 0; i < ns; ++i) {
    const double rho = spectral_->rho(i);
    for (Eigen::Index j = 0; j < nr; ++j)
      forward_kernel_(i, j) = radial_->weights(j) * surface_measure_ft(n, rho * radial_->r(j));
  }

  const double norm = std::pow(2.0 * kPi, -n);
  inverse_kernel_.resize(nr, ns);
  for (Eigen::Index i = 0; i < nr; ++i) {
    const double r = radial_->r(i);
    for (Eigen::Index j = 0; j < ns; ++j)
      inverse_kernel_(i, j) = norm * spectral_->weights(j) * surface_measure_ft(n, r * spectral_->rho(j));
  }
}

SpectralProfile TransformPlan::forward(const RadialProfile& profile) const {
  if (profile.grid.get() != radial_.get() && profile.values.size() != radial_->size())
    throw std::invalid_argument("forward: profile grid does not match the plan");
  return {spectral_, real_kernel_apply(forward_kernel_, profile.values)};
}

RadialProfile TransformPlan::inverse(const SpectralProfile& spectral) const {
  if (spectral.grid.get() != spectral_.get() && spectral.values.size() != spectral_->size())
    throw std::invalid_argument("inverse: profile grid does not match the plan");
  return {radial_, real_kernel_apply(inverse_kernel_, spectral.values)};
}

SpectralProfile apply_fractional_derivative(const SpectralProfile& spectral, double s) {
  const int n = spectral.grid->dim;
  if (!(s > -0.5 * n))
    throw std::domain_error("fractional derivative order must satisfy s > -n/2");
  if (s == 0.0) return spectral;
  SpectralProfile out = spectral;
  out.values *= spectral.grid->rho.pow(s);
  return out;
}

SpectralProfile propagate_spectral(const SpectralProfile& spectral, double t) {
  SpectralProfile out = spectral;
  if (t == 0.0) return out;
  Eigen::ArrayXd theta = t * spectral.grid->rho.square();
  Eigen::ArrayXcd phase(theta.size());
  phase.real() = theta.cos();
  phase.imag() = -theta.sin();
  out.values *= phase;
  return out;
}

RadialProfile propagate_free(const TransformPlan& plan, const RadialProfile& profile, double t) {
  return plan.inverse(propagate_spectral(plan.forward(profile), t));
}

}  // namespace rnls
