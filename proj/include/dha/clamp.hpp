#pragma once

// Rounding-noise guards for inverse trig and square roots. Arguments that
// miss the domain by at most kClampUlps machine epsilons (relative to
// `scale`) are pulled onto the boundary; anything further out is a caller
// bug and raises DomainError.

#include <string_view>

namespace dha {

inline constexpr double kClampUlps = 4.0;

/// Clamp v into [-1, 1] for acos/asin.
double clamp_unit(double v, std::string_view what);

/// Clamp v into [0, 1].
double clamp_probability(double v, std::string_view what);

/// Clamp v to be non-negative for sqrt; `scale` sets the magnitude that
/// the epsilon window is measured against.
double clamp_nonnegative(double v, double scale, std::string_view what);

double safe_acos(double v, std::string_view what);
double safe_asin(double v, std::string_view what);
double safe_sqrt(double v, double scale, std::string_view what);

}  // namespace dha
