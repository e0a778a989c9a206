#pragma once

#include <string>
#include <vector>

#include "rnls/profile.hpp"

namespace rnls {

/// Radially symmetric test-data generators probing low and high frequency
/// content of the estimates.
struct DataFamily {
  enum class Kind { Gaussian, Bump, Chirp, Annulus };

  Kind kind = Kind::Gaussian;
  double width = 1.0;      ///< Gaussian scale (unused otherwise)
  double frequency = 0.0;  ///< chirp wavenumber
  std::string name() const;

  /// Member value at radius r before dilation.
  Complex base_value(double r) const;
  /// Sampled member with spatial magnification mu: phi_mu(r) = phi(r / mu).
  RadialProfile sample(const std::shared_ptr<const RadialGrid>& grid, double mu) const;
};

DataFamily parse_family(const std::string& name);

/// gaussian (width 1), bump on [0, 2], chirps k = 4 and 16, annulus on [1, 2].
std::vector<DataFamily> standard_families();

/// Nine dilations 4^(k/4), k = -4..4.
std::vector<double> standard_dilations();

}  // namespace rnls
