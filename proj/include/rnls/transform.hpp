#pragma once

#include <Eigen/Dense>

#include "rnls/profile.hpp"

namespace rnls {

/// Precomputed forward/inverse radial Fourier kernels for one (radial,
/// spectral) grid pair. Immutable after construction and shareable across
/// threads.
///
/// Conventions: the full transform is phi_hat(xi) = integral e^(-i x.xi) phi dx,
/// which for radial phi reduces to
///   psi(rho)  = integral_0^inf phi(r) K(rho r) r^(n-1) dr
///   phi(r)    = (2 pi)^(-n) integral_0^inf psi(rho) K(r rho) rho^(n-1) drho
/// with K the surface-measure transform kernel.
class TransformPlan {
 public:
  TransformPlan(std::shared_ptr<const RadialGrid> radial,
                std::shared_ptr<const SpectralGrid> spectral);

  SpectralProfile forward(const RadialProfile& profile) const;
  RadialProfile inverse(const SpectralProfile& spectral) const;

  const std::shared_ptr<const RadialGrid>& radial() const { return radial_; }
  const std::shared_ptr<const SpectralGrid>& spectral() const { return spectral_; }
  int dim() const { return radial_->dim; }

 private:
  std::shared_ptr<const RadialGrid> radial_;
  std::shared_ptr<const SpectralGrid> spectral_;
  Eigen::MatrixXd forward_kernel_;  // spectral.size() x radial.size()
  Eigen::MatrixXd inverse_kernel_;  // radial.size() x spectral.size()
};

/// Multiplier rho^s. Requires s > -n/2 so the symbol stays integrable
/// against rho^(n-1) at the origin.
SpectralProfile apply_fractional_derivative(const SpectralProfile& spectral, double s);

/// Free propagator as the pure spectral multiplier e^(-i t rho^2).
SpectralProfile propagate_spectral(const SpectralProfile& spectral, double t);

/// Full-grid free propagation: forward, phase, inverse.
RadialProfile propagate_free(const TransformPlan& plan, const RadialProfile& profile, double t);

}  // namespace rnls
