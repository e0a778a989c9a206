#pragma once

namespace rnls {

/// Surface area of the unit sphere in R^n, 2 pi^(n/2) / Gamma(n/2).
double sphere_area(int n);

/// Fourier transform of the uniform surface measure on the unit sphere,
/// evaluated at radius r = |y|. Radial, real, smooth; equals sphere_area(n)
/// at r = 0 and decays like r^(-(n-1)/2).
double surface_measure_ft(int n, double r);

}  // namespace rnls
