#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gwtail/offspring.hpp"
#include "gwtail/poincare.hpp"
#include "gwtail/profile.hpp"
#include "gwtail/quadrature.hpp"

namespace gwtail {

/// p(x) = (1/pi) Re \int_0^inf Pi(iy) e^{ixy} dy.
///
/// The default options put 512 periods of e^{ixy} inside the truncated
/// range and rely on the three-term endpoint correction for the rest, which
/// holds the absolute error near 1e-14 for the bundled distributions.
double oracle_density(const PiEvaluator& ev, double x, const OscillatoryOptions& options = {});

/// oracle_density over a grid; OpenMP over points. A grid point at x = 0
/// gets the limit value 0 (p(x) = O(x^alpha) with alpha > 0).
DensityProfile oracle_profile(const PiEvaluator& ev, std::span<const double> xs,
                              const OscillatoryOptions& options = {});

/// Single-threaded reference for oracle_profile.
DensityProfile oracle_profile_serial(const PiEvaluator& ev, std::span<const double> xs,
                                     const OscillatoryOptions& options = {});

struct SimulationConfig {
  std::int64_t samples = 1'000'000;
  int generations = 25;
  std::uint64_t seed = 42;
  /// Abort guard on Z_t.
  std::int64_t population_cap = 1'000'000'000'000'000LL;
};

using Engine = std::mt19937_64;

/// Engine for sample `index`, derived from (seed, index) by splitmix64 so
/// that results do not depend on how samples are split across threads.
Engine sample_engine(std::uint64_t seed, std::uint64_t index);

/// One generation of the process: the `population` individuals are split
/// into family sizes by chained binomial draws over probs[1..d] (O(d) per
/// call, independent of the population). Returns sum_j j * count_j.
/// `probs` is indexed by family size; probs[0] must be 0.
std::int64_t multinomial_step(std::span<const double> probs, std::int64_t population, Engine& rng);

/// Samples of Z_T / E^T with Z_0 = 1. OpenMP over samples.
std::vector<double> simulate_W(const OffspringDistribution& dist, const SimulationConfig& cfg);

/// Single-threaded reference for simulate_W; bit-identical output.
std::vector<double> simulate_W_serial(const OffspringDistribution& dist, const SimulationConfig& cfg);

/// Bin masses on [lo, hi]. `sample_count` is 0 when the masses come from a
/// profile rather than from samples.
struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> mass;
  std::int64_t sample_count = 0;

  int bins() const noexcept { return static_cast<int>(mass.size()); }
  double edge(int k) const noexcept { return lo + (hi - lo) * k / bins(); }
};

/// Fractions of all samples (not only those in range) falling in each bin.
Histogram make_histogram(std::span<const double> samples, double lo, double hi, int bins);

/// Integral of the piecewise-linear interpolant of `profile` over each bin.
/// Throws SupportMismatch if the profile does not cover [lo, hi].
Histogram profile_masses(const DensityProfile& profile, double lo, double hi, int bins);

struct BinComparison {
  double lo;
  double hi;
  double freq;
  double expected;
  /// (freq - expected) / binomial standard error; 0 without samples
  double z_score;
};

struct HistogramReport {
  std::vector<BinComparison> bins;
  double max_abs_diff = 0.0;
  double max_abs_z = 0.0;
};

HistogramReport histogram_compare(const Histogram& empirical, const DensityProfile& profile);

/// Bins >= 10 (InvalidArgument); lo < hi and profile covering [lo, hi]
/// (SupportMismatch).
HistogramReport histogram_compare(std::span<const double> samples, const DensityProfile& profile,
                                  int bins, double lo, double hi);

}  // namespace gwtail
