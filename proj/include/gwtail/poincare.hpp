#pragma once

#include <vector>

#include "gwtail/offspring.hpp"
#include "gwtail/power_series.hpp"

namespace gwtail {

inline constexpr double kDefaultSeedRadius = 0.1;
inline constexpr int kDefaultPiOrder = 30;

/// Taylor coefficients of the Poincare function Pi, the entire solution of
/// P(Pi(z)) = Pi(Ez) with Pi(0) = 1, Pi'(0) = -1. Each a_k is isolated from
/// (E^k - E) a_k = [z^k] P(Pi(z)) evaluated with a_k set to zero.
PowerSeries pi_taylor(const OffspringDistribution& dist, int order = kDefaultPiOrder,
                      double seed_radius = kDefaultSeedRadius);

struct PiValue {
  cplx value;
  cplx derivative;
};

/// Evaluates Pi on Re z >= -seed_radius: the Taylor seed is used at z/E^m
/// for the smallest m with |z|/E^m <= seed_radius, then P is applied m times.
class PiEvaluator {
 public:
  explicit PiEvaluator(const OffspringDistribution& dist, double seed_radius = kDefaultSeedRadius,
                       int order = kDefaultPiOrder);

  cplx operator()(cplx z) const;
  PiValue eval_with_derivative(cplx z) const;

  const OffspringDistribution& dist() const noexcept { return dist_; }
  const PowerSeries& taylor() const noexcept { return taylor_; }
  double seed_radius() const noexcept { return seed_radius_; }

 private:
  int upscaling_depth(cplx z) const;

  OffspringDistribution dist_;
  PowerSeries taylor_;
  double seed_radius_;
};

struct DecayReport {
  double y_max = 0.0;
  double threshold = 0.0;
  /// max |Pi(iy)| over the last sampled decade [y_max/10, y_max]
  double max_last_decade = 0.0;
  /// least-squares slope of log|Pi(iy)| against log y over the last decade
  double fitted_slope = 0.0;
  bool decay_ok = false;
  double log_ratio = 0.0;
  /// ln p1 / ln E < -1, the absolute-convergence hypothesis
  bool ratio_ok = false;
  bool hypotheses_hold() const noexcept { return decay_ok && ratio_ok; }
};

/// Samples |Pi(iy)| on a geometric grid (16 points per decade, three decades
/// ending at y_max). Diagnostic only: never throws on a failed hypothesis.
DecayReport check_strong_decay(const PiEvaluator& ev, double y_max, double threshold);

/// True iff |Pi(iy)| < 1 - 1e-9 at 256 points of [r, E r]. By the Julia-set
/// argument this forces Pi(iy) -> 0 as y -> infinity. Throws InvalidArgument
/// for r <= 0.
bool julia_precondition(const PiEvaluator& ev, double r);

struct ComplexWindow {
  double re_min = -2.0;
  double re_max = 2.0;
  double im_min = -2.0;
  double im_max = 2.0;
};

struct EscapeRaster {
  ComplexWindow window;
  int width = 0;
  int height = 0;
  int max_iter = 0;
  double escape_radius = 0.0;
  /// Row-major, row 0 at im_max. Pixels that never escape hold max_iter.
  std::vector<int> iterations;

  cplx pixel_center(int col, int row) const noexcept;
  int at(int col, int row) const noexcept { return iterations[static_cast<std::size_t>(row) * width + col]; }
};

/// Radius beyond which |P(w)| >= 2|w|, so every orbit leaving the disk escapes:
/// max(2, (3 - p_d) / p_d).
double escape_radius(const OffspringDistribution& dist) noexcept;

/// Number of P-iterations before |w| exceeds `radius`, or max_iter.
int escape_time(const OffspringDistribution& dist, cplx start, int max_iter, double radius) noexcept;

/// Escape-time raster of the filled Julia set of P; OpenMP over rows.
EscapeRaster julia_escape_grid(const OffspringDistribution& dist, const ComplexWindow& window,
                               int width, int height, int max_iter);

/// Single-threaded reference for julia_escape_grid.
EscapeRaster julia_escape_grid_serial(const OffspringDistribution& dist,
                                      const ComplexWindow& window, int width, int height,
                                      int max_iter);

}  // namespace gwtail
