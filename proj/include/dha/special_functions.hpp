#pragma once

// Bessel J, the gamma/beta family with its quantile inverse, Kepler's
// equation and the haversine pair. Everything here is a pure function of
// its arguments.

#include <string_view>

#include "dha/errors.hpp"
#include "dha/tolerance.hpp"

namespace dha {

/// Shape pair of a beta distribution. Both shapes must be positive.
struct BetaParams {
  double a = 1.0;
  double b = 1.0;

  void validate() const;
};

/// Kepler's equation x = y - a sin(y), solved for y.
///
/// The library accepts -1 <= a <= 1 and -pi <= x <= pi. For |a| <= 1 the
/// left-hand side is monotone in y, so the solution in [-pi, pi] is unique.
struct KeplerQuery {
  double a = 0.0;
  double x = 0.0;

  void validate() const;
};

enum class KeplerMethod { newton, series };

std::string_view to_string(KeplerMethod method);

struct KeplerSolution {
  double y = 0.0;
  /// |y - a sin(y) - x| evaluated at the returned y.
  double residual = 0.0;
  KeplerMethod method = KeplerMethod::newton;
  /// Newton/bisection steps for the newton path, series terms otherwise.
  int iterations_or_terms = 0;
};

/// Bessel function of the first kind J_n(x) for integer n >= 0.
///
/// Small arguments use the ascending power series; larger ones use Miller's
/// backward recurrence normalised by J_0 + 2 sum J_2k = 1.
double bessel_j(int n, double x);

/// Safeguarded Newton iteration on y - a sin(y) - x, bracketed by [-pi, pi].
/// Throws ConvergenceError when tol.max_iterations is exhausted.
KeplerSolution kepler_e_newton(const KeplerQuery& q, const Tolerance& tol = {});

/// Partial sum x + sum_{n=1}^{terms} (2/n) J_n(n a) sin(n x) of the Kapteyn
/// series. The residual field is the true residual of the partial sum; at
/// |a| = 1 the series converges slowly and the newton path should be used.
KeplerSolution kepler_e_series(const KeplerQuery& q, int terms);

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
double beta_complete(const BetaParams& p);

/// Lower incomplete beta integral B(x; a, b) for x in [0, 1].
double beta_incomplete(double x, const BetaParams& p);

/// Regularized incomplete beta I_x(a, b), i.e. the Beta(a, b) CDF.
double beta_regularized(double x, const BetaParams& p);

/// Beta(a, b) quantile: the x in [0, 1] with I_x(a, b) = z.
double beta_regularized_inverse(double z, const BetaParams& p,
                                const Tolerance& tol = {});

/// B(x; 1/2, 3/2) in closed form, sqrt(x - x^2) + asin(sqrt(x)).
double beta_half_threehalves_closed(double x);

/// sin^2(x / 2).
double hav(double x);

/// 2 asin(sqrt(h)), the inverse of hav on [0, pi].
double archav(double h);

}  // namespace dha
