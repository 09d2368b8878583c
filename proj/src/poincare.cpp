#include "gwtail/poincare.hpp"

#include <algorithm>
#include <cmath>

#include "gwtail/error.hpp"

namespace gwtail {

PowerSeries pi_taylor(const OffspringDistribution& dist, int order, double seed_radius) {
  if (order < 2) throw Error(Errc::InvalidArgument, "pi_taylor needs order >= 2");
  const double e = dist.mean();
  const int d = dist.degree();

  std::vector<cplx> a(static_cast<std::size_t>(order) + 1, cplx{0.0});
  a[0] = 1.0;
  a[1] = -1.0;
  for (int k = 2; k <= order; ++k) {
    // Horner in series arithmetic: P(Pi) truncated at degree k with a_k = 0.
    std::span<const cplx> pi(a.data(), static_cast<std::size_t>(k) + 1);
    std::vector<cplx> acc{cplx{dist.p(d)}};
    for (int j = d - 1; j >= 0; --j) {
      acc = series::multiply(acc, pi, k);
      acc[0] += dist.p(j);
    }
    a[k] = acc[k] / (std::pow(e, k) - e);
  }
  return PowerSeries{std::move(a), seed_radius, SeriesLabel::Pi};
}

PiEvaluator::PiEvaluator(const OffspringDistribution& dist, double seed_radius, int order)
    : dist_(dist), taylor_(pi_taylor(dist, order, seed_radius)), seed_radius_(seed_radius) {
  if (!(seed_radius > 0.0)) throw Error(Errc::InvalidArgument, "seed radius must be positive");
}

int PiEvaluator::upscaling_depth(cplx z) const {
  if (z.real() < -seed_radius_) {
    throw Error(Errc::UnsupportedRegion, "Pi is only evaluated on Re z >= -seed_radius");
  }
  const double e = dist_.mean();
  double r = std::abs(z);
  int m = 0;
  while (r > seed_radius_) {
    r /= e;
    ++m;
  }
  return m;
}

cplx PiEvaluator::operator()(cplx z) const {
  const int m = upscaling_depth(z);
  cplx v = taylor_.eval_unchecked(z / std::pow(dist_.mean(), m));
  const auto c = dist_.coefficients();
  for (int i = 0; i < m; ++i) {
    cplx acc{0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
    v = acc;
  }
  return v;
}

PiValue PiEvaluator::eval_with_derivative(cplx z) const {
  const int m = upscaling_depth(z);
  const double e = dist_.mean();
  const cplx seed = z / std::pow(e, m);
  cplx v = taylor_.eval_unchecked(seed);
  cplx dv = taylor_.derivative_unchecked(seed);
  // E Pi'(E w) = P'(Pi(w)) Pi'(w)
  for (int i = 0; i < m; ++i) {
    const auto [value, slope] = dist_.eval_with_derivative(v);
    dv = slope * dv / e;
    v = value;
  }
  return {v, dv};
}

DecayReport check_strong_decay(const PiEvaluator& ev, double y_max, double threshold) {
  if (!(y_max > 0.0)) throw Error(Errc::InvalidArgument, "y_max must be positive");
  constexpr int kPerDecade = 16;
  constexpr int kDecades = 3;
  DecayReport report;
  report.y_max = y_max;
  report.threshold = threshold;
  report.log_ratio = ev.dist().log_ratio();
  report.ratio_ok = report.log_ratio < -1.0;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int k = 0; k <= kPerDecade * kDecades; ++k) {
    const double y = y_max * std::pow(10.0, -static_cast<double>(kDecades) + static_cast<double>(k) / kPerDecade);
    const double mag = std::abs(ev(cplx{0.0, y}));
    if (k >= kPerDecade * (kDecades - 1)) {
      report.max_last_decade = std::max(report.max_last_decade, mag);
      const double lx = std::log(y);
      const double ly = std::log(mag);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++count;
    }
  }
  report.fitted_slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  report.decay_ok = report.max_last_decade <= threshold;
  return report;
}

bool julia_precondition(const PiEvaluator& ev, double r) {
  if (!(r > 0.0)) throw Error(Errc::InvalidArgument, "julia_precondition needs r > 0");
  constexpr int kSamples = 256;
  const double e = ev.dist().mean();
  double worst = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const double y = r + (e * r - r) * k / (kSamples - 1);
    worst = std::max(worst, std::abs(ev(cplx{0.0, y})));
  }
  return worst < 1.0 - 1e-9;
}

cplx EscapeRaster::pixel_center(int col, int row) const noexcept {
  const double re = window.re_min + (col + 0.5) * (window.re_max - window.re_min) / width;
  const double im = window.im_max - (row + 0.5) * (window.im_max - window.im_min) / height;
  return {re, im};
}

double escape_radius(const OffspringDistribution& dist) noexcept {
  const double lead = dist.p(dist.degree());
  return std::max(2.0, (3.0 - lead) / lead);
}

int escape_time(const OffspringDistribution& dist, cplx start, int max_iter, double radius) noexcept {
  const auto c = dist.coefficients();
  cplx w = start;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(w) > radius) return it;
    cplx acc{0.0};
    for (auto p = c.rbegin(); p != c.rend(); ++p) acc = acc * w + *p;
    w = acc;
  }
  return max_iter;
}

namespace {

EscapeRaster make_raster(const OffspringDistribution& dist, const ComplexWindow& window, int width,
                         int height, int max_iter) {
  if (width <= 0 || height <= 0 || max_iter <= 0) {
    throw Error(Errc::InvalidArgument, "raster dimensions and max_iter must be positive");
  }
  if (static_cast<long long>(width) * height > 4096LL * 4096LL) {
    throw Error(Errc::InvalidArgument, "raster larger than 4096^2 pixels");
  }
  if (!(window.re_max > window.re_min && window.im_max > window.im_min)) {
    throw Error(Errc::InvalidArgument, "empty complex window");
  }
  EscapeRaster raster;
  raster.window = window;
  raster.width = width;
  raster.height = height;
  raster.max_iter = max_iter;
  raster.escape_radius = escape_radius(dist);
  raster.iterations.assign(static_cast<std::size_t>(width) * height, 0);
  return raster;
}

}  // namespace

EscapeRaster julia_escape_grid_serial(const OffspringDistribution& dist,
                                      const ComplexWindow& window, int width, int height,
                                      int max_iter) {
  EscapeRaster raster = make_raster(dist, window, width, height, max_iter);
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      raster.iterations[static_cast<std::size_t>(row) * width + col] =
          escape_time(dist, raster.pixel_center(col, row), max_iter, raster.escape_radius);
    }
  }
  return raster;
}

EscapeRaster julia_escape_grid(const OffspringDistribution& dist, const ComplexWindow& window,
                               int width, int height, int max_iter) {
  EscapeRaster raster = make_raster(dist, window, width, height, max_iter);
#pragma omp parallel for schedule(dynamic, 4)
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      raster.iterations[static_cast<std::size_t>(row) * width + col] =
          escape_time(dist, raster.pixel_center(col, row), max_iter, raster.escape_radius);
    }
  }
  return raster;
}

}  // namespace gwtail
