#include "rnls/exponents.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rnls {

namespace {

std::string range_text(int n) {
  return "(1 + 4/" + std::to_string(n + 1) + ", 1 + 4/" + std::to_string(n) + ")";
}

}  // namespace

void ProblemParams::require_solver_range() const {
  if (n < 3)
    throw std::domain_error("dimension n = " + std::to_string(n) + " below the solver minimum n >= 3");
  Rational pm1 = p - Rational(1);
  if (!(Rational(4, n + 1) < pm1 && pm1 < Rational(4, n)))
    throw std::domain_error("power p = " + p.str() + " outside the open range " + range_text(n));
}

Rational critical_sobolev_index(const ProblemParams& params) {
  if (!(params.p > Rational(1)))
    throw std::domain_error("critical_sobolev_index requires p > 1, got p = " + params.p.str());
  return Rational(-params.n, 2) + Rational(2) / (params.p - Rational(1));
}

double p0_root(int n) {
  if (n < 2) throw std::domain_error("p0_root requires n >= 2, got n = " + std::to_string(n));
  double disc = static_cast<double>(n) * n + 10.0 * n - 7.0;
  return (n + 1 + std::sqrt(disc)) / (2.0 * (n - 1));
}

int p0_quadratic_sign(int n, const Rational& x) {
  if (n < 2) throw std::domain_error("p0_quadratic_sign requires n >= 2");
  Rational q = Rational(n - 1) * x * x - Rational(n + 1) * x - Rational(2);
  return q.sign();
}

WindowParts window_parts(int n, const Rational& p) {
  Rational pm1 = p - Rational(1);
  WindowParts w;
  w.inv_p = p.inverse();
  w.smoothing = Rational(2) / pm1 - Rational(n - 1, 2);
  w.upper = Rational(2) / pm1 - Rational(n + 1) / (Rational(2) * p);
  return w;
}

bool check_prop31(int n, const Rational& p) {
  if (n < 2) throw std::domain_error("check_prop31 requires n >= 2, got n = " + std::to_string(n));
  Rational pm1 = p - Rational(1);
  if (!(Rational(4, n + 1) < pm1 && pm1 < Rational(4, n)))
    throw std::domain_error("check_prop31: p = " + p.str() + " not strictly inside " + range_text(n));
  return window_parts(n, p).holds();
}

void ExponentSet::verify() const {
  auto fail = [](const std::string& what) { throw std::logic_error("exponent set invalid: " + what); };

  Rational pm1 = p - Rational(1);
  Rational two_over = Rational(2) / q0;

  if (s0 != Rational(-n, 2) + Rational(2) / pm1) fail("s0 != -n/2 + 2/(p-1)");
  if (!(Rational(0) < s0 && s0 < Rational(1, 2))) fail("s0 outside (0, 1/2)");

  if (alpha0 != Rational(n + 2) / q0 - Rational(2) / pm1) fail("alpha0 != (n+2)/q0 - 2/(p-1)");
  if (s0 != -alpha0 + Rational(n + 2) / q0 - Rational(n, 2))
    fail("scaling identity s0 = -alpha0 + (n+2)/q0 - n/2");

  WindowParts w = window_parts(n, p);
  if (!(w.lower() < two_over))
    fail("2/q0 <= max(1/p, 2/(p-1) - (n-1)/2)");
  if (!(two_over < w.upper)) fail("2/q0 >= 2/(p-1) - (n+1)/(2p)");
  if (!(q0 > Rational(2))) fail("q0 <= 2");

  Rational inv_q1 = Rational(1) - p / q0;
  if (!(inv_q1 > Rational(0))) fail("1 - p/q0 <= 0");
  if (q1 != inv_q1.inverse()) fail("1/q1 != 1 - p/q0");
  if (alpha1 != -p * alpha0) fail("alpha1 != -p * alpha0");

  auto in_weight_window = [&](const Rational& q, const Rational& alpha) {
    Rational nq = Rational(n) / q;
    return nq - Rational(n - 1, 2) < alpha && alpha < nq;
  };
  if (!in_weight_window(q0, alpha0)) fail("alpha0 outside (n/q0 - (n-1)/2, n/q0)");
  if (!in_weight_window(q1, alpha1)) fail("alpha1 outside (n/q1 - (n-1)/2, n/q1)");

  Rational sum = (-alpha0 + Rational(n + 2) / q0 - Rational(n, 2)) +
                 (-alpha1 + Rational(n + 2) / q1 - Rational(n, 2));
  if (!sum.is_zero()) fail("dual-pair sum condition != 0");
}

ExponentSet select_exponents(const ProblemParams& params, const SelectionPolicy& policy) {
  params.require_solver_range();
  if (!check_prop31(params.n, params.p))
    throw std::domain_error(
        "no admissible q0 window: max(1/p, 2/(p-1) - (n-1)/2) < 2/(p-1) - (n+1)/(2p) fails "
        "for n = " + std::to_string(params.n) + ", p = " + params.p.str());

  WindowParts w = window_parts(params.n, params.p);
  Rational lo = w.lower();
  Rational hi = w.upper;
  Rational one(1);

  Rational two_over_q0;
  if (policy.two_over_q0) {
    two_over_q0 = *policy.two_over_q0;
    if (!(lo < two_over_q0))
      throw std::invalid_argument("2/q0 override " + two_over_q0.str() +
                                  " violates the strict lower window bound " + lo.str());
    if (!(two_over_q0 < hi))
      throw std::invalid_argument("2/q0 override " + two_over_q0.str() +
                                  " violates the strict upper window bound " + hi.str());
    if (!(two_over_q0 < one))
      throw std::invalid_argument("2/q0 override " + two_over_q0.str() +
                                  " violates q0 > 2 (needs 2/q0 < 1)");
  } else {
    // Midpoint of the window, clipped below 1 so that q0 > 2 always holds.
    Rational cap = hi < one ? hi : one;
    two_over_q0 = (lo + cap) / Rational(2);
  }

  ExponentSet set;
  set.n = params.n;
  set.p = params.p;
  set.q0 = Rational(2) / two_over_q0;
  set.s0 = critical_sobolev_index(params);
  set.alpha0 = Rational(params.n + 2) / set.q0 - Rational(2) / (params.p - Rational(1));
  Rational inv_q1 = Rational(1) - params.p / set.q0;
  if (!(inv_q1 > Rational(0)))
    throw std::logic_error("selected q0 gives 1 - p/q0 <= 0");
  set.q1 = inv_q1.inverse();
  set.alpha1 = -params.p * set.alpha0;

  set.verify();
  return set;
}

bool check_thm21_admissible(int n, const AdmissibilityTriple& t) {
  if (-t.alpha - t.s + Rational(n + 2) / t.q != Rational(n, 2)) return false;
  if (!(t.q >= Rational(2))) return false;
  Rational nq = Rational(n) / t.q;
  return nq - Rational(n - 1, 2) < t.alpha && t.alpha < nq;
}

std::vector<Rational> interior_p_grid(int n, int count) {
  Rational lo = Rational(1) + Rational(4, n + 1);
  Rational hi = Rational(1) + Rational(4, n);
  Rational span = hi - lo;
  std::vector<Rational> out;
  out.reserve(count);
  for (int k = 1; k <= count; ++k) out.push_back(lo + span * Rational(k, count + 1));
  return out;
}

}  // namespace rnls
