#include <algorithm>
#include <cmath>
#include <string>

#include "dha/special_functions.hpp"

namespace dha {

namespace {

// Above this the alternating power series loses more than a couple of
// digits to cancellation (its largest term grows like I_n(|x|)).
constexpr double kSeriesLimit = 6.0;

constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleBy = 1e-250;

double ascending_series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) {
    term *= half / i;
  }
  if (term == 0.0) return 0.0;

  // Neumaier summation.
  double sum = 0.0;
  double comp = 0.0;
  const double q = -half * half;
  for (int k = 0; k < 500; ++k) {
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    term *= q / ((k + 1.0) * (n + k + 1.0));
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum + comp;
}

// Miller's algorithm: recur downward from an order where J is negligible,
// then normalise with J_0 + 2 (J_2 + J_4 + ...) = 1. Expects x > 0.
double miller(int n, double x) {
  const int top = std::max(n, static_cast<int>(std::ceil(x)));
  int start = top + 30 + static_cast<int>(4.0 * std::sqrt(static_cast<double>(top)));
  start += start % 2;

  double next = 0.0;   // J_{k+1}
  double cur = 1e-30;  // J_k, arbitrary seed
  double even_sum = 0.0;
  double result = 0.0;
  const double two_over_x = 2.0 / x;
  for (int k = start; k > 0; --k) {
    const double prev = k * two_over_x * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > kRescaleAbove) {
      cur *= kRescaleBy;
      next *= kRescaleBy;
      even_sum *= kRescaleBy;
      result *= kRescaleBy;
    }
    const int order = k - 1;
    if (order == n) result = cur;
    if (order > 0 && order % 2 == 0) even_sum += cur;
  }
  return result / (cur + 2.0 * even_sum);
}

}  // namespace

double bessel_j(int n, double x) {
  if (n < 0) {
    throw DomainError("bessel_j: order must be non-negative, got " +
                      std::to_string(n));
  }
  if (!std::isfinite(x)) {
    throw DomainError("bessel_j: argument must be finite");
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;

  const double ax = std::abs(x);
  const double value =
      ax <= kSeriesLimit ? ascending_series(n, ax) : miller(n, ax);
  return (x < 0.0 && n % 2 == 1) ? -value : value;
}

}  // namespace dha
