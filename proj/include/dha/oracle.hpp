#pragma once

// Slow, independent estimators used to check the analytic geometry and the
// incomplete beta. None of these call into the formulas they validate.

#include <cstddef>
#include <cstdint>

#include "dha/geometry.hpp"
#include "dha/special_functions.hpp"

namespace dha::oracle {

/// SplitMix64. Fully specified so streams are reproducible across
/// platforms and languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Seed for block `block` of a Monte Carlo run seeded with `seed`.
std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block);

struct MCEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  std::uint64_t seed = 0;
  double box_area = 0.0;
};

struct MonteCarloOptions {
  /// Samples per block; every block draws from its own derived stream.
  std::uint64_t block_size = 1u << 16;
  /// Worker threads. The estimate does not depend on this.
  unsigned threads = 1;
};

/// Hit-or-miss estimate of the lens area over the box
/// [d - r, R] x [-min(R, r), min(R, r)].
MCEstimate lens_area_montecarlo(const LensConfig& c, std::uint64_t samples,
                                std::uint64_t seed,
                                const MonteCarloOptions& opts = {});

/// Integral of the vertical extent of the intersection over its x-range.
/// The range is split where the two arcs cross and each piece is
/// integrated with composite Simpson (`panels` per sub-interval), using
/// x = end -/+ s^2 over a 10% margin at both ends of every piece.
double lens_area_quadrature(const LensConfig& c, int panels);

/// Composite Simpson for B(x; a, b). For a < 1 the substitution t = u^(1/a)
/// removes the singularity at t = 0.
double beta_incomplete_quadrature(double x, const BetaParams& p, int panels);

}  // namespace dha::oracle
