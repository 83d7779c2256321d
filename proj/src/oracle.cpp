#include "dha/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace dha::oracle {

namespace {

double simpson(const auto& f, double a, double b, int panels) {
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) {
    sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// Simpson over [a, b] with x = a + s^2 on the first 10% and x = b - s^2 on
// the last 10%, which turns sqrt-type endpoint behaviour into a smooth
// integrand.
double simpson_soft_ends(const auto& f, double a, double b, int panels) {
  const double margin = 0.1 * (b - a);
  const double root = std::sqrt(margin);
  const auto left = [&](double s) { return f(a + s * s) * 2.0 * s; };
  const auto right = [&](double s) { return f(b - s * s) * 2.0 * s; };
  return simpson(left, 0.0, root, panels) +
         simpson(f, a + margin, b - margin, panels) +
         simpson(right, 0.0, root, panels);
}

double half_height(double radius, double offset) {
  const double v = radius * radius - offset * offset;
  return v > 0.0 ? std::sqrt(v) : 0.0;
}

std::uint64_t count_hits(const LensConfig& c, double x0, double width,
                         double half_y, std::uint64_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const double R2 = c.R * c.R;
  const double r2 = c.r * c.r;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = x0 + width * rng.uniform();
    const double y = half_y * (2.0 * rng.uniform() - 1.0);
    const double y2 = y * y;
    const double dx = x - c.d;
    if (x * x + y2 <= R2 && dx * dx + y2 <= r2) ++hits;
  }
  return hits;
}

}  // namespace

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (block + 1)));
  return mix.next();
}

MCEstimate lens_area_montecarlo(const LensConfig& c, std::uint64_t samples,
                                std::uint64_t seed,
                                const MonteCarloOptions& opts) {
  c.validate();
  if (samples < 1) throw DomainError("lens_area_montecarlo: samples must be >= 1");
  if (opts.block_size < 1) {
    throw DomainError("lens_area_montecarlo: block_size must be >= 1");
  }

  MCEstimate est;
  est.samples = samples;
  est.seed = seed;
  const double x0 = c.d - c.r;
  const double width = c.R - x0;
  const double half_y = std::min(c.R, c.r);
  if (!(width > 0.0)) return est;  // disjoint or tangent
  est.box_area = width * 2.0 * half_y;

  const std::uint64_t blocks = (samples + opts.block_size - 1) / opts.block_size;
  std::vector<std::uint64_t> hits(blocks, 0);
  const auto run_block = [&](std::uint64_t b) {
    const std::uint64_t begin = b * opts.block_size;
    const std::uint64_t n = std::min(opts.block_size, samples - begin);
    hits[b] = count_hits(c, x0, width, half_y, n, block_seed(seed, b));
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, opts.threads), blocks));
  if (threads == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t b = t; b < blocks; b += threads) run_block(b);
      });
    }
  }

  for (std::uint64_t h : hits) est.hits += h;
  const double p = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.value = est.box_area * p;
  est.std_error = est.box_area * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return est;
}

double lens_area_quadrature(const LensConfig& c, int panels) {
  c.validate();
  if (panels < 8) throw DomainError("lens_area_quadrature: panels must be >= 8");

  const double lo = std::max(-c.R, c.d - c.r);
  const double hi = std::min(c.R, c.d + c.r);
  if (!(hi > lo)) return 0.0;

  const auto first = [&](double x) { return half_height(c.R, x); };
  const auto second = [&](double x) { return half_height(c.r, x - c.d); };
  const auto extent = [&](double x) { return 2.0 * std::min(first(x), second(x)); };

  // Locate the crossing of the two arcs by bisection, if it lies inside.
  const auto diff = [&](double x) { return first(x) - second(x); };
  std::vector<double> cuts = {lo};
  double a = lo;
  double b = hi;
  double fa = diff(a);
  const double fb = diff(b);
  if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
    for (int i = 0; i < 200 && b - a > 0.0; ++i) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const double fm = diff(m);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    cuts.push_back(0.5 * (a + b));
  }
  cuts.push_back(hi);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) {
      total += simpson_soft_ends(extent, cuts[i], cuts[i + 1], panels);
    }
  }
  return total;
}

double beta_incomplete_quadrature(double x, const BetaParams& p, int panels) {
  p.validate();
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("beta_incomplete_quadrature: x must lie in (0, 1)");
  }
  if (panels < 8) {
    throw DomainError("beta_incomplete_quadrature: panels must be >= 8");
  }
  if (p.a < 1.0) {
    // t = u^(1/a): t^(a-1) dt = du / a.
    const double inv_a = 1.0 / p.a;
    const auto g = [&](double u) {
      return std::pow(1.0 - std::pow(u, inv_a), p.b - 1.0) * inv_a;
    };
    return simpson(g, 0.0, std::pow(x, p.a), panels);
  }
  const auto f = [&](double t) {
    return std::pow(t, p.a - 1.0) * std::pow(1.0 - t, p.b - 1.0);
  };
  return simpson(f, 0.0, x, panels);
}

}  // namespace dha::oracle
