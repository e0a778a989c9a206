#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <stdexcept>

#include "rnls/grid.hpp"

namespace rnls {

using Complex = std::complex<double>;

/// Complex radial function sampled on a shared RadialGrid.
struct RadialProfile {
  std::shared_ptr<const RadialGrid> grid;
  Eigen::ArrayXcd values;

  RadialProfile() = default;
  explicit RadialProfile(std::shared_ptr<const RadialGrid> g)
      : grid(std::move(g)), values(Eigen::ArrayXcd::Zero(grid->size())) {}
  RadialProfile(std::shared_ptr<const RadialGrid> g, Eigen::ArrayXcd v)
      : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid->size()) throw std::invalid_argument("profile/grid size mismatch");
  }
};

/// Complex spectral function psi(rho) on a SpectralGrid.
struct SpectralProfile {
  std::shared_ptr<const SpectralGrid> grid;
  Eigen::ArrayXcd values;

  SpectralProfile() = default;
  explicit SpectralProfile(std::shared_ptr<const SpectralGrid> g)
      : grid(std::move(g)), values(Eigen::ArrayXcd::Zero(grid->size())) {}
  SpectralProfile(std::shared_ptr<const SpectralGrid> g, Eigen::ArrayXcd v)
      : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid->size()) throw std::invalid_argument("profile/grid size mismatch");
  }
};

/// Time-indexed family of radial profiles on one shared grid; column k holds
/// the profile at times.t(k).
struct SpaceTimeField {
  std::shared_ptr<const RadialGrid> grid;
  TimeGrid times;
  Eigen::MatrixXcd values;  ///< grid.size() x times.size()

  SpaceTimeField() = default;
  SpaceTimeField(std::shared_ptr<const RadialGrid> g, TimeGrid tg)
      : grid(std::move(g)),
        times(std::move(tg)),
        values(Eigen::MatrixXcd::Zero(grid->size(), times.size())) {}

  Eigen::Index time_samples() const { return times.size(); }
  RadialProfile at(Eigen::Index k) const { return {grid, values.col(k).array()}; }

  SpaceTimeField operator-(const SpaceTimeField& other) const {
    if (other.values.rows() != values.rows() || other.values.cols() != values.cols())
      throw std::invalid_argument("field shape mismatch");
    SpaceTimeField out = *this;
    out.values -= other.values;
    return out;
  }
};

}  // namespace rnls
