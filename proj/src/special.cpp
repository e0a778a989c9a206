#include "rnls/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rnls {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Power-series form of (2 pi)^(n/2) r^(-nu) J_nu(r) with nu = (n-2)/2,
// valid (and fast) for small r where the r^(-nu) J_nu(r) split underflows.
double small_argument_series(int n, double r) {
  const double nu = 0.5 * (n - 2);
  const double x = 0.25 * r * r;
  double term = sphere_area(n);  // k = 0 term
  double sum = term;
  for (int k = 1; k <= 16; ++k) {
    term *= -x / (k * (k + nu));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double sphere_area(int n) {
  if (n < 1) throw std::domain_error("sphere_area requires n >= 1");
  return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

double surface_measure_ft(int n, double r) {
  if (n < 2) throw std::domain_error("surface_measure_ft requires n >= 2, got n = " + std::to_string(n));
  if (r < 0) throw std::domain_error("surface_measure_ft requires r >= 0");
  if (r < 0.5) return small_argument_series(n, r);
  if (n == 3) return 4.0 * kPi * std::sin(r) / r;
  const double nu = 0.5 * (n - 2);
  return std::pow(2.0 * kPi, 0.5 * n) * std::pow(r, -nu) * std::cyl_bessel_j(nu, r);
}

}  // namespace rnls
