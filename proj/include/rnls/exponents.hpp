#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "rnls/rational.hpp"

namespace rnls {

/// Identity of the equation i u_t + Lap u = lambda |u|^(p-1) u.
struct ProblemParams {
  int n = 3;                 ///< spatial dimension
  Rational p{11, 5};         ///< power of the nonlinearity
  double lambda_re = 1.0;
  double lambda_im = 0.0;

  std::complex<double> lambda() const { return {lambda_re, lambda_im}; }

  /// n >= 3 and 4/(n+1) < p-1 < 4/n, the hypothesis the solver pipeline needs.
  bool solver_range() const {
    if (n < 3) return false;
    Rational pm1 = p - Rational(1);
    return Rational(4, n + 1) < pm1 && pm1 < Rational(4, n);
  }
  /// Throws with the violated constraint spelled out.
  void require_solver_range() const;
};

/// A (q, alpha, s) triple for the homogeneous weighted space-time estimate.
struct AdmissibilityTriple {
  Rational q;
  Rational alpha;
  Rational s;
};

/// The full exponent bundle: s0, the chosen q0 with its weight alpha0, and
/// the dual pair (q1, alpha1) driving the inhomogeneous estimate.
struct ExponentSet {
  int n = 0;
  Rational p;
  Rational s0;
  Rational q0;
  Rational alpha0;
  Rational q1;
  Rational alpha1;

  Rational two_over_q0() const { return Rational(2) / q0; }
  /// Re-checks every defining identity and strict inequality exactly;
  /// throws std::logic_error naming the first violated one.
  void verify() const;
};

/// s0 = -n/2 + 2/(p-1), exact. Rejects p <= 1.
Rational critical_sobolev_index(const ProblemParams& params);

/// Larger root of (n-1) p^2 - (n+1) p - 2 = 0. Rejects n < 2.
double p0_root(int n);

/// Sign of (n-1) x^2 - (n+1) x - 2 at rational x > 0, exact.
/// Negative iff x < p0(n), zero iff x = p0(n).
int p0_quadratic_sign(int n, const Rational& x);

/// The three sides of the q0-window inequality
/// max(1/p, 2/(p-1) - (n-1)/2) < 2/(p-1) - (n+1)/(2p).
struct WindowParts {
  Rational inv_p;        ///< 1/p
  Rational smoothing;    ///< 2/(p-1) - (n-1)/2
  Rational upper;        ///< 2/(p-1) - (n+1)/(2p)
  Rational lower() const { return inv_p > smoothing ? inv_p : smoothing; }
  bool holds() const { return lower() < upper; }
};
WindowParts window_parts(int n, const Rational& p);

/// True iff the open q0-window is nonempty. Requires n >= 2 and p strictly
/// inside (1 + 4/(n+1), 1 + 4/n); anything else is a domain error, not false.
bool check_prop31(int n, const Rational& p);

struct SelectionPolicy {
  /// Explicit 2/q0 choice; must land strictly inside the window and below 1.
  std::optional<Rational> two_over_q0;
};

/// Picks 2/q0 (default: midpoint of the window clipped below 1, so q0 > 2
/// always holds), derives alpha0, s0, q1, alpha1, and verifies the whole set
/// before returning.
ExponentSet select_exponents(const ProblemParams& params, const SelectionPolicy& policy = {});

/// The admissibility condition of the homogeneous estimate:
/// -alpha - s + (n+2)/q = n/2, 2 <= q, n/q - (n-1)/2 < alpha < n/q.
bool check_thm21_admissible(int n, const AdmissibilityTriple& triple);

/// count rationals strictly inside (1 + 4/(n+1), 1 + 4/n), exact arithmetic.
std::vector<Rational> interior_p_grid(int n, int count);

}  // namespace rnls
