#pragma once

// Areas of circular segments and of the lens cut out by two overlapping
// circles. The first circle sits at the origin, the second at (d, 0).

#include "dha/errors.hpp"

namespace dha {

struct LensConfig {
  double R = 1.0;  ///< radius of the circle at the origin
  double r = 1.0;  ///< radius of the circle at (d, 0)
  double d = 0.0;  ///< center separation

  /// R > 0, r > 0, d >= 0, all finite.
  void validate() const;
};

/// Chord of a circle of radius R at signed distance h from the center.
/// Negative h selects the major segment.
struct SegmentSpec {
  double R = 1.0;
  double h = 0.0;

  void validate() const;
};

struct Abscissae {
  double d1 = 0.0;  ///< chord abscissa measured from the first center
  double d2 = 0.0;  ///< same chord measured from the second center
};

/// R^2 acos(h/R) - h sqrt(R^2 - h^2).
double segment_area(const SegmentSpec& s);

/// Abscissa of the common chord for two circles that cross at two points.
/// Throws DomainError for disjoint, tangent or concentric configurations.
Abscissae intersection_abscissae(const LensConfig& c);

/// Overlap area of the two disks. Total over all valid configurations:
/// zero once the disks separate and pi min(R, r)^2 once one contains the
/// other. Symmetric in (R, r) bit for bit.
double lens_area(const LensConfig& c);

/// 2 acos(d/2) - d sqrt(4 - d^2)/2 - pi/2 for unit circles: the overlap
/// area minus half a disk. Strictly decreasing on [0, 2].
double half_overlap_gap(double d);

}  // namespace dha
