#include "dha/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "dha/clamp.hpp"

namespace dha {

namespace {

constexpr double kPi = std::numbers::pi;

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void LensConfig::validate() const {
  if (!positive_finite(R) || !positive_finite(r)) {
    throw DomainError("lens: radii must be positive and finite");
  }
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw DomainError("lens: separation must be non-negative and finite");
  }
}

void SegmentSpec::validate() const {
  if (!positive_finite(R)) {
    throw DomainError("segment: radius must be positive and finite");
  }
  if (!std::isfinite(h)) {
    throw DomainError("segment: apothem must be finite");
  }
}

double segment_area(const SegmentSpec& s) {
  s.validate();
  const double u = clamp_unit(s.h / s.R, "segment_area: h/R");
  // Half-chord over R; (1 - u)(1 + u) keeps precision near |u| = 1.
  const double half_chord = std::sqrt((1.0 - u) * (1.0 + u));
  // atan2(half_chord, u) == acos(u), without the acos blow-up near +-1.
  const double half_angle = std::atan2(half_chord, u);
  return s.R * s.R * (half_angle - u * half_chord);
}

Abscissae intersection_abscissae(const LensConfig& c) {
  c.validate();
  if (!(c.d > std::abs(c.R - c.r) && c.d < c.R + c.r)) {
    throw DomainError(
        "intersection_abscissae: circles do not cross at two points (d = " +
        std::to_string(c.d) + ")");
  }
  const double radii = (c.R - c.r) * (c.R + c.r);
  const double d1 = (c.d * c.d + radii) / (2.0 * c.d);
  const double d2 = (c.d * c.d - radii) / (2.0 * c.d);
  return {d1, d2};
}

double lens_area(const LensConfig& c) {
  c.validate();
  // Canonical order makes the result independent of argument order.
  const double big = std::max(c.R, c.r);
  const double small = std::min(c.R, c.r);
  const double d = c.d;

  if (d >= big + small) return 0.0;
  if (d <= big - small) return kPi * small * small;

  // Half-length of the common chord from the factored radical
  // sqrt((R+r)^2 - d^2) sqrt(d^2 - (R-r)^2) / (2d).
  const double outer = (big + small - d) * (big + small + d);
  const double inner = (d - (big - small)) * (d + (big - small));
  const double chord = std::sqrt(outer) * std::sqrt(inner) / (2.0 * d);

  const double radii = (big - small) * (big + small);
  const double d_big = (d * d + radii) / (2.0 * d);
  const double d_small = (d * d - radii) / (2.0 * d);

  // Half-angles subtended by the chord at each center, i.e.
  // acos(d_big / big) and acos(d_small / small).
  const double angle_big = std::atan2(chord, d_big);
  const double angle_small = std::atan2(chord, d_small);

  const double area =
      big * big * angle_big + small * small * angle_small - d * chord;
  return std::clamp(area, 0.0, kPi * small * small);
}

double half_overlap_gap(double d) {
  if (!(d >= 0.0 && d <= 2.0)) {
    throw DomainError("half_overlap_gap: d must lie in [0, 2], got " +
                      std::to_string(d));
  }
  const double half = 0.5 * d;
  return 2.0 * safe_acos(half, "half_overlap_gap") -
         0.5 * d * std::sqrt((2.0 - d) * (2.0 + d)) - 0.5 * kPi;
}

}  // namespace dha
