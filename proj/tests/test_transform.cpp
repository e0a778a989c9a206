#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rnls/norms.hpp"
#include "rnls/transform.hpp"

using namespace rnls;

namespace {

constexpr double kPi = 3.14159265358979323846;

RadialProfile gaussian_profile(const std::shared_ptr<const RadialGrid>& grid, double width = 1.0) {
  RadialProfile out(grid);
  out.values = (-0.5 * (grid->r / width).square()).exp().cast<Complex>();
  return out;
}

struct LabSetup {
  std::shared_ptr<const RadialGrid> radial;
  std::shared_ptr<const SpectralGrid> spectral;
  TransformPlan plan;
  LabSetup(int n, Eigen::Index points, double r_max, double rho_max)
      : radial(make_radial_grid(n, points, r_max)),
        spectral(make_spectral_grid(n, points, rho_max)),
        plan(radial, spectral) {}
};

}  // namespace

TEST_CASE("surface measure transform against the defining integral") {
  // r -> 0 limit is the sphere area
  CHECK(surface_measure_ft(3, 0.0) == doctest::Approx(4 * kPi).epsilon(1e-14));
  for (int n = 2; n <= 6; ++n)
    CHECK(surface_measure_ft(n, 0.0) == doctest::Approx(sphere_area(n)).epsilon(1e-13));

  CHECK(surface_measure_ft(3, 1.0) == doctest::Approx(4 * kPi * std::sin(1.0)).epsilon(1e-14));

  for (int n : {2, 3, 4, 5}) {
    for (double r : {0.3, 1.0, 5.7, 20.0, 137.0}) {
      double want = oracles::kernel_by_quadrature(n, r);
      CHECK(surface_measure_ft(n, r) == doctest::Approx(want).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(surface_measure_ft(1, 1.0), std::domain_error);
  CHECK_THROWS_AS(surface_measure_ft(3, -1.0), std::domain_error);
}

TEST_CASE("kernel decay envelope") {
  // |K(r)| r^{(n-1)/2} stays bounded out to r = 1000
  for (int n : {2, 3, 4}) {
    double cap = 0;
    for (double r = 1.0; r <= 1000.0; r *= 1.07)
      cap = std::max(cap, std::abs(surface_measure_ft(n, r)) * std::pow(r, 0.5 * (n - 1)));
    CHECK(cap < 3.0 * sphere_area(n));
    // n = 2 concrete point from the envelope
    if (n == 2) CHECK(std::abs(surface_measure_ft(2, 10.0)) <= cap * std::pow(10.0, -0.5));
  }
}

TEST_CASE("default grid quadrature exactness") {
  auto grid = make_radial_grid(3, 2048, 40.0);
  Eigen::ArrayXd f = (-grid->r.square()).exp();
  double got = (grid->weights * f).sum();
  CHECK(got == doctest::Approx(std::tgamma(1.5) / 2.0).epsilon(1e-10));
}

TEST_CASE("forward transform of the Gaussian") {
  LabSetup lab(3, 2048, 40.0, 160.0);
  RadialProfile gauss = gaussian_profile(lab.radial);
  SpectralProfile psi = lab.plan.forward(gauss);

  double num = 0, den = 0;
  for (Eigen::Index j = 0; j < lab.spectral->size(); ++j) {
    double want = std::pow(2 * kPi, 1.5) * std::exp(-0.5 * lab.spectral->rho(j) * lab.spectral->rho(j));
    num += lab.spectral->weights(j) * std::norm(psi.values(j) - want);
    den += lab.spectral->weights(j) * want * want;
  }
  CHECK(std::sqrt(num / den) < 1e-8);

  SUBCASE("zero maps to zero") {
    RadialProfile zero(lab.radial);
    CHECK(lab.plan.forward(zero).values.abs().maxCoeff() == 0.0);
  }
  SUBCASE("round trip") {
    RadialProfile back = lab.plan.inverse(psi);
    CHECK(oracles::rel_l2(back, gauss) < 1e-8);
  }
  SUBCASE("Plancherel") {
    double phys = l2_norm(gauss);
    double spec = sobolev_norm(psi, 0.0);
    CHECK(std::abs(phys - spec) / phys < 1e-8);
    CHECK(phys == doctest::Approx(std::pow(kPi, 0.75)).epsilon(1e-8));
  }
}

TEST_CASE("dilation covariance of the forward transform") {
  LabSetup lab(3, 2048, 40.0, 160.0);
  RadialProfile gauss = gaussian_profile(lab.radial);
  SpectralProfile psi = lab.plan.forward(gauss);
  // phi_mu(r) = phi(mu r)  =>  psi_mu(mu rho) = mu^{-n} psi(rho); integer grid
  // ratios keep every comparison on-node
  for (int m : {2, 4}) {
    double mu = m;
    RadialProfile gmu(lab.radial);
    gmu.values = (-0.5 * (mu * lab.radial->r).square()).exp().cast<Complex>();
    SpectralProfile psimu = lab.plan.forward(gmu);
    double worst = 0;
    for (Eigen::Index k = 0; k + 1 < lab.spectral->size() / m; ++k) {
      double want = std::pow(mu, -3.0) * std::abs(psi.values(k));
      double got = std::abs(psimu.values((k + 1) * m - 1));
      if (want > 1e-8) worst = std::max(worst, std::abs(got - want) / want);
    }
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("fractional derivative multiplier") {
  LabSetup lab(3, 2048, 40.0, 160.0);
  RadialProfile gauss = gaussian_profile(lab.radial);
  SpectralProfile psi = lab.plan.forward(gauss);

  SUBCASE("s = 0 is the identity") {
    SpectralProfile same = apply_fractional_derivative(psi, 0.0);
    CHECK((same.values - psi.values).abs().maxCoeff() == 0.0);
  }
  SUBCASE("s then -s cancels to rounding") {
    SpectralProfile round = apply_fractional_derivative(apply_fractional_derivative(psi, 1.3), -1.3);
    CHECK((round.values - psi.values).abs().maxCoeff() / psi.values.abs().maxCoeff() < 1e-12);
  }
  SUBCASE("s = 2 reproduces -Lap of the Gaussian") {
    RadialProfile lap = lab.plan.inverse(apply_fractional_derivative(psi, 2.0));
    RadialProfile want(lab.radial);
    want.values =
        ((3.0 - lab.radial->r.square()) * (-0.5 * lab.radial->r.square()).exp()).cast<Complex>();
    CHECK(oracles::rel_l2(lap, want) < 1e-6);

    // independent check: 4th-order finite differences on the sampled Gaussian
    Eigen::ArrayXcd fd = -oracles::fd_laplacian(gauss);
    double num = 0, den = 0;
    for (Eigen::Index j = 2; j + 2 < lab.radial->size(); ++j) {
      num += lab.radial->weights(j) * std::norm(lap.values(j) - fd(j));
      den += lab.radial->weights(j) * std::norm(fd(j));
    }
    CHECK(std::sqrt(num / den) < 1e-6);
  }
  SUBCASE("multiplier order below -n/2 is rejected") {
    CHECK_THROWS_AS(apply_fractional_derivative(psi, -1.5), std::domain_error);
    CHECK_THROWS_AS(apply_fractional_derivative(psi, -2.0), std::domain_error);
  }
}

TEST_CASE("free propagator") {
  LabSetup lab(3, 2048, 40.0, 160.0);
  RadialProfile gauss = gaussian_profile(lab.radial);

  SUBCASE("t = 0 is the identity up to the round trip") {
    RadialProfile u = propagate_free(lab.plan, gauss, 0.0);
    CHECK(oracles::rel_l2(u, gauss) < 1e-10);
  }

  SUBCASE("unitarity on a window wide enough to hold the dispersed state") {
    LabSetup wide(3, 2048, 160.0, 24.0);
    RadialProfile g = gaussian_profile(wide.radial);
    double base = l2_norm(g);
    for (double t : {0.1, 1.0, 10.0}) {
      RadialProfile u = propagate_free(wide.plan, g, t);
      CHECK(std::abs(l2_norm(u) - base) / base < 1e-8);
    }
  }

  SUBCASE("evolved Gaussian closed form at t = 1") {
    RadialProfile u = propagate_free(lab.plan, gauss, 1.0);
    RadialProfile want(lab.radial);
    const Complex z(1.0, 2.0);  // 1 + 2 i t
    want.values = std::pow(z, Complex(-1.5)) * (-lab.radial->r.square() / (2.0 * z)).exp();
    CHECK(oracles::rel_l2(u, want) < 1e-6);
  }

  SUBCASE("closed form confirmed by the Crank-Nicolson reference integrator") {
    auto grid = make_radial_grid(3, 4096, 16.0);
    RadialProfile g = gaussian_profile(grid);
    RadialProfile cn = oracles::cn_evolve(g, 1.0, 4000);
    RadialProfile want(grid);
    const Complex z(1.0, 2.0);
    want.values = std::pow(z, Complex(-1.5)) * (-grid->r.square() / (2.0 * z)).exp();
    CHECK(oracles::rel_l2(cn, want) < 1e-4);
  }

  SUBCASE("group law as exact multiplier composition") {
    SpectralProfile psi = lab.plan.forward(gauss);
    SpectralProfile a = propagate_spectral(propagate_spectral(psi, 0.7), 2.6);
    SpectralProfile b = propagate_spectral(psi, 3.3);
    RadialProfile ua = lab.plan.inverse(a), ub = lab.plan.inverse(b);
    CHECK(oracles::rel_l2(ua, ub) < 1e-10);
  }
}
