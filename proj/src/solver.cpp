#include "dha/solver.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "dha/clamp.hpp"
#include "dha/geometry.hpp"
#include "dha/special_functions.hpp"

namespace dha {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

constexpr BetaParams kHalfThreeHalves{0.5, 1.5};

struct BrentResult {
  double x;
  double fx;
  int iterations;
};

// Brent's method on a bracket with f(lo) and f(hi) of opposite sign. Stops
// once |f| <= ftol or the bracket has shrunk to a few ulps.
BrentResult brent(const std::function<double(double)>& f, double lo, double hi,
                  double flo, double fhi, double ftol, int max_iterations) {
  double a = lo;
  double b = hi;
  double fa = flo;
  double fb = fhi;
  double c = b;
  double fc = fb;
  double d = b - a;
  double e = d;

  for (int it = 1; it <= max_iterations; ++it) {
    if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double xtol = 2.0 * kEps * std::abs(b) + 1e-300;
    const double xm = 0.5 * (c - b);
    if (std::abs(fb) <= ftol || std::abs(xm) <= xtol || fb == 0.0) {
      return {b, fb, it};
    }
    if (std::abs(e) >= xtol && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p = 0.0;
      double q = 0.0;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(xtol * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > xtol) {
      b += d;
    } else {
      b += std::copysign(xtol, xm);
    }
    fb = f(b);
  }
  throw ConvergenceError("offset solver did not converge", b, std::abs(fb),
                         std::min(b, c), std::max(b, c), max_iterations);
}

void check_radii(double R, double r) {
  if (!(R > 0.0) || !(r > 0.0) || !std::isfinite(R) || !std::isfinite(r)) {
    throw DomainError("offset: radii must be positive and finite");
  }
}

}  // namespace

double half_area_offset_reference() {
  const std::string literal(kHalfAreaOffsetLiteral);
  return std::strtod(literal.c_str(), nullptr);
}

int digits_matched(double value) {
  if (!std::isfinite(value)) return 0;
  std::array<char, 64> buf{};
  // Shortest round-trip form, so a value like 0.8079455065 is compared as
  // written rather than through its binary expansion.
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::scientific);
  if (ec != std::errc{}) return 0;
  // The literal is 8.0...e-01; other exponents share no leading digits.
  const std::string_view printed(buf.data(), static_cast<std::size_t>(end - buf.data()));
  if (!printed.ends_with("e-01")) return 0;

  std::string got;
  for (char ch : printed.substr(0, printed.find('e'))) {
    if (ch != '.') got.push_back(ch);
  }
  const std::string_view want = kHalfAreaOffsetLiteral.substr(2);
  int n = 0;
  while (n < static_cast<int>(got.size()) && got[n] == want[n]) ++n;
  return n;
}

double SolveRequest::target_area() const {
  check_radii(R, r);
  const double full = kPi * std::min(R, r) * std::min(R, r);
  if (fraction) {
    const double f = *fraction;
    if (!(f >= 0.0 && f <= 1.0)) {
      throw DomainError("offset: fraction must lie in [0, 1], got " +
                        std::to_string(f));
    }
    return f * full;
  }
  if (!area) throw DomainError("offset: no target given");
  const double a = *area;
  if (!std::isfinite(a)) throw DomainError("offset: target area must be finite");
  if (a < 0.0) return clamp_nonnegative(a, full, "offset: target area");
  if (a > full) {
    if (a - full > kClampUlps * kEps * full) {
      throw DomainError("offset: target area exceeds pi min(R, r)^2");
    }
    return full;
  }
  return a;
}

OffsetSolution solve_offset(const SolveRequest& req) {
  req.tol.validate();
  const double target = req.target_area();
  const double full = kPi * std::min(req.R, req.r) * std::min(req.R, req.r);
  const double lo = std::abs(req.R - req.r);
  const double hi = req.R + req.r;
  if (target == 0.0) return {hi, 0.0, 0};
  if (target == full) return {lo, 0.0, 0};

  const auto gap = [&](double d) {
    return lens_area(LensConfig{req.R, req.r, d}) - target;
  };
  // The total piecewise lens_area gives gap(lo) > 0 > gap(hi).
  const BrentResult res = brent(gap, lo, hi, gap(lo), gap(hi), req.tol.abs_tol,
                                req.tol.max_iterations);
  return {res.x, std::abs(res.fx), res.iterations};
}

double offset_for_area(const SolveRequest& req) { return solve_offset(req).d; }

double offset_for_fraction(double R, double r, double f, const Tolerance& tol) {
  return solve_offset(SolveRequest(R, r, FractionTarget{f}, tol)).d;
}

double dha_closed_form_kepler(const Tolerance& tol) {
  const KeplerSolution e = kepler_e_newton({-1.0, 0.5 * kPi}, tol);
  return 2.0 * std::sin(0.5 * e.y);
}

double dha_closed_form_archav(const Tolerance& tol) {
  const double q = beta_regularized_inverse(0.5, kHalfThreeHalves, tol);
  return 2.0 * std::sin(0.5 * archav(q));
}

double dha_closed_form_invbeta(const Tolerance& tol) {
  return 2.0 * std::sqrt(beta_regularized_inverse(0.5, kHalfThreeHalves, tol));
}

double dha_rootfind(const Tolerance& tol) {
  return offset_for_fraction(1.0, 1.0, 0.5, tol);
}

bool MethodReport::all_succeeded() const {
  return std::all_of(methods.begin(), methods.end(),
                     [](const MethodResult& m) { return m.value.has_value(); });
}

MethodReport dha_report(const Tolerance& tol) {
  using Method = double (*)(const Tolerance&);
  const std::array<std::pair<const char*, Method>, 4> table = {{
      {"rootfind", &dha_rootfind},
      {"kepler", &dha_closed_form_kepler},
      {"archav", &dha_closed_form_archav},
      {"invbeta", &dha_closed_form_invbeta},
  }};

  MethodReport report;
  for (const auto& [name, fn] : table) {
    MethodResult m;
    m.name = name;
    try {
      m.value = fn(tol);
      m.digits_matched = digits_matched(*m.value);
    } catch (const std::exception& ex) {
      m.error = ex.what();
    }
    report.methods.push_back(std::move(m));
  }
  report.d_rootfind = report.methods[0].value;
  report.d_kepler = report.methods[1].value;
  report.d_archav = report.methods[2].value;
  report.d_invbeta = report.methods[3].value;

  int digits = std::numeric_limits<int>::max();
  bool any = false;
  for (std::size_t i = 0; i < report.methods.size(); ++i) {
    const auto& mi = report.methods[i];
    if (!mi.value) continue;
    any = true;
    digits = std::min(digits, mi.digits_matched);
    for (std::size_t j = i + 1; j < report.methods.size(); ++j) {
      const auto& mj = report.methods[j];
      if (!mj.value) continue;
      report.max_pairwise_delta =
          std::max(report.max_pairwise_delta, std::abs(*mi.value - *mj.value));
    }
  }
  report.reference_digits_matched = any ? digits : 0;
  return report;
}

}  // namespace dha
