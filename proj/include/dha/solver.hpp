#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dha/errors.hpp"
#include "dha/tolerance.hpp"

namespace dha {

/// Half-area offset of two unit disks, as a 90-digit decimal literal.
inline constexpr std::string_view kHalfAreaOffsetLiteral =
    "0.807945506599034418637923480132630885804471929148196844500195203467741"
    "09994259070700248678";

/// kHalfAreaOffsetLiteral rounded to the nearest double.
double half_area_offset_reference();

/// Number of leading significant decimal digits `value` shares with
/// kHalfAreaOffsetLiteral, using the shortest decimal that round-trips to `value`.
int digits_matched(double value);

struct AreaTarget {
  double area;
};
struct FractionTarget {
  double fraction;  ///< share of pi min(R, r)^2, in [0, 1]
};

struct SolveRequest {
  double R = 1.0;
  double r = 1.0;
  /// Exactly one of area/fraction is set, depending on the constructor.
  std::optional<double> area;
  std::optional<double> fraction;
  Tolerance tol{};

  SolveRequest(double R_, double r_, AreaTarget t, Tolerance tol_ = {})
      : R(R_), r(r_), area(t.area), tol(tol_) {}
  SolveRequest(double R_, double r_, FractionTarget t, Tolerance tol_ = {})
      : R(R_), r(r_), fraction(t.fraction), tol(tol_) {}

  /// Absolute target area; throws DomainError when out of range.
  double target_area() const;
};

struct OffsetSolution {
  double d = 0.0;
  double residual = 0.0;  ///< |lens_area(R, r, d) - target|
  int iterations = 0;
};

/// Separation d in [|R - r|, R + r] whose lens area equals the target.
/// Bracketed Brent iteration on the total, monotone lens_area.
OffsetSolution solve_offset(const SolveRequest& req);

/// Convenience wrappers returning only d.
double offset_for_area(const SolveRequest& req);
double offset_for_fraction(double R, double r, double f,
                           const Tolerance& tol = {});

/// 2 sin(E(-1, pi/2) / 2) with E solved by the newton Kepler path.
double dha_closed_form_kepler(const Tolerance& tol = {});

/// 2 sin(archav(I^{-1}_{1/2}(1/2, 3/2)) / 2).
double dha_closed_form_archav(const Tolerance& tol = {});

/// 2 sqrt(I^{-1}_{1/2}(1/2, 3/2)).
double dha_closed_form_invbeta(const Tolerance& tol = {});

/// The half-area offset by root-finding the unit-circle overlap equation.
double dha_rootfind(const Tolerance& tol = {});

struct MethodResult {
  std::string name;
  std::optional<double> value;
  std::string error;  ///< empty on success
  int digits_matched = 0;
};

struct MethodReport {
  std::optional<double> d_rootfind;
  std::optional<double> d_kepler;
  std::optional<double> d_archav;
  std::optional<double> d_invbeta;
  /// Largest |d_i - d_j| over all pairs of methods that succeeded.
  double max_pairwise_delta = 0.0;
  /// Smallest digits_matched over methods that succeeded.
  int reference_digits_matched = 0;
  std::vector<MethodResult> methods;

  bool all_succeeded() const;
};

/// Evaluates every method, collecting failures instead of throwing.
MethodReport dha_report(const Tolerance& tol = {});

}  // namespace dha
