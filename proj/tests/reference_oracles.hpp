#pragma once

// Test-only reference computations. These deliberately share no code with
// the library: plain bisection, the Bessel integral representation and the
// ascending series in extended precision.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace dha::testing {

/// Bisection on a sign-changing bracket down to `width`.
inline double bisect(const std::function<double(double)>& f, double lo,
                     double hi, double width = 1e-15) {
  double flo = f(lo);
  for (int i = 0; i < 400 && hi - lo > width; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// J_n(x) from its ascending series, summed term by term in long double.
inline double bessel_series_reference(int n, double x, int terms = 80) {
  const long double half = 0.5L * x;
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= half / i;
  long double sum = 0.0L;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= -half * half / ((k + 1.0L) * (n + k + 1.0L));
  }
  return static_cast<double>(sum);
}

/// J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt by the midpoint rule,
/// which is spectrally accurate for this periodic integrand.
inline double bessel_integral_reference(int n, double x) {
  const int m = 2 * (n + static_cast<int>(std::abs(x))) + 256;
  double sum = 0.0;
  for (int k = 0; k < m; ++k) {
    const double t = std::numbers::pi * (k + 0.5) / m;
    sum += std::cos(n * t - x * std::sin(t));
  }
  return sum / m;
}

/// Root of y - a sin(y) - x on [-pi, pi] by bisection.
inline double kepler_bisection(double a, double x) {
  return bisect([&](double y) { return y - a * std::sin(y) - x; },
                -std::numbers::pi, std::numbers::pi, 1e-15);
}

/// Fixed-seed uniform sampler for the hand-rolled property loops.
class Sampler {
 public:
  explicit Sampler(unsigned long long seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dha::testing
