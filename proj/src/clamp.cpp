#include "dha/clamp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dha/errors.hpp"
#include "dha/tolerance.hpp"

namespace dha {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

[[noreturn]] void out_of_domain(std::string_view what, double v) {
  throw DomainError(std::string(what) + ": argument " + std::to_string(v) +
                    " out of domain");
}

}  // namespace

double clamp_unit(double v, std::string_view what) {
  if (std::isnan(v)) out_of_domain(what, v);
  if (v > 1.0) {
    if (v - 1.0 > kClampUlps * kEps) out_of_domain(what, v);
    return 1.0;
  }
  if (v < -1.0) {
    if (-1.0 - v > kClampUlps * kEps) out_of_domain(what, v);
    return -1.0;
  }
  return v;
}

double clamp_probability(double v, std::string_view what) {
  if (std::isnan(v)) out_of_domain(what, v);
  if (v > 1.0) {
    if (v - 1.0 > kClampUlps * kEps) out_of_domain(what, v);
    return 1.0;
  }
  if (v < 0.0) {
    if (-v > kClampUlps * kEps) out_of_domain(what, v);
    return 0.0;
  }
  return v;
}

double clamp_nonnegative(double v, double scale, std::string_view what) {
  if (std::isnan(v)) out_of_domain(what, v);
  if (v < 0.0) {
    if (-v > kClampUlps * kEps * std::abs(scale)) out_of_domain(what, v);
    return 0.0;
  }
  return v;
}

double safe_acos(double v, std::string_view what) {
  return std::acos(clamp_unit(v, what));
}

double safe_asin(double v, std::string_view what) {
  return std::asin(clamp_unit(v, what));
}

double safe_sqrt(double v, double scale, std::string_view what) {
  return std::sqrt(clamp_nonnegative(v, scale, what));
}

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw DomainError("tolerance: abs_tol must be positive and finite");
  }
  if (max_iterations < 1) {
    throw DomainError("tolerance: max_iterations must be at least 1");
  }
}

}  // namespace dha
