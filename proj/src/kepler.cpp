#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dha/clamp.hpp"
#include "dha/special_functions.hpp"

namespace dha {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this |1 - a cos y| the Newton step is replaced by bisection.
constexpr double kFlatDerivative = 1e-8;

double kepler_residual(double a, double x, double y) {
  return y - a * std::sin(y) - x;
}

}  // namespace

std::string_view to_string(KeplerMethod method) {
  switch (method) {
    case KeplerMethod::newton:
      return "newton";
    case KeplerMethod::series:
      return "series";
  }
  return "unknown";
}

void KeplerQuery::validate() const {
  if (!std::isfinite(a) || a < -1.0 || a > 1.0) {
    throw DomainError("kepler: a must lie in [-1, 1], got " + std::to_string(a));
  }
  if (!std::isfinite(x) || x < -kPi || x > kPi) {
    throw DomainError("kepler: x must lie in [-pi, pi], got " +
                      std::to_string(x));
  }
}

KeplerSolution kepler_e_newton(const KeplerQuery& q, const Tolerance& tol) {
  q.validate();
  tol.validate();
  if (q.a == 1.0 && q.x == 0.0) {
    throw DomainError("kepler_e_newton: a = 1, x = 0 has a double root at y = 0");
  }

  // g(y) = y - a sin(y) - x is non-decreasing for |a| <= 1 with
  // g(-pi) <= 0 <= g(pi), so [-pi, pi] always brackets the root.
  double lo = -kPi;
  double hi = kPi;
  double y = std::clamp(q.x + q.a * std::sin(q.x), lo, hi);
  double best = y;
  double best_residual = std::numeric_limits<double>::infinity();

  for (int it = 0; it < tol.max_iterations; ++it) {
    const double g = kepler_residual(q.a, q.x, y);
    if (std::abs(g) < best_residual) {
      best_residual = std::abs(g);
      best = y;
    }
    if (std::abs(g) <= tol.abs_tol) {
      return {y, std::abs(g), KeplerMethod::newton, it};
    }
    if (g < 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;

    const double slope = 1.0 - q.a * std::cos(y);
    double next = mid;
    if (std::abs(slope) >= kFlatDerivative) {
      next = y - g / slope;
      if (!(next > lo && next < hi)) next = mid;
    }
    y = next;
  }
  throw ConvergenceError("kepler_e_newton did not converge", best,
                         best_residual, lo, hi, tol.max_iterations);
}

KeplerSolution kepler_e_series(const KeplerQuery& q, int terms) {
  q.validate();
  if (terms < 1) {
    throw DomainError("kepler_e_series: terms must be at least 1");
  }
  double sum = q.x;
  double comp = 0.0;
  for (int n = 1; n <= terms; ++n) {
    const double term =
        2.0 / n * bessel_j(n, n * q.a) * std::sin(n * q.x);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  const double y = sum + comp;
  return {y, std::abs(kepler_residual(q.a, q.x, y)), KeplerMethod::series,
          terms};
}

double hav(double x) {
  if (!std::isfinite(x)) throw DomainError("hav: argument must be finite");
  const double s = std::sin(0.5 * x);
  return s * s;
}

double archav(double h) {
  const double v = clamp_probability(h, "archav");
  return 2.0 * std::asin(std::sqrt(v));
}

}  // namespace dha
