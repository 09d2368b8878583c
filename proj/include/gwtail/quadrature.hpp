#pragma once

#include <complex>
#include <functional>
#include <utility>

namespace gwtail {

using cplx = std::complex<double>;

/// h(y) together with h'(y).
using SmoothIntegrand = std::function<std::pair<cplx, cplx>(double)>;

struct OscillatoryOptions {
  /// The integral is truncated at Y = max(min_cutoff, 2 pi cycles / |omega|).
  double cycles = 512.0;
  double min_cutoff = 64.0;
  /// Panel width is panel_fraction * pi / |omega| once the geometric start-up
  /// region has been passed.
  double panel_fraction = 1.0;
  /// Gauss-Kronrod tolerance on |K15 - G7| relative to the panel L1 norm.
  /// The K15 value itself is far more accurate than this estimate on
  /// half-period panels.
  double panel_tolerance = 1e-10;
  unsigned max_depth = 10;
  /// SlowDecay guard.
  double max_cutoff = 1e8;
};

struct OscillatoryResult {
  cplx value;
  double cutoff = 0.0;
  /// The endpoint correction that replaced the neglected tail.
  cplx tail = 0.0;
  int panels = 0;
};

/// Integral of h(y) e^{i omega y} over [0, infinity) for smooth h with
/// algebraic decay. Panels of at most half a period are integrated with
/// adaptive Gauss-Kronrod (15 points); the tail beyond Y is replaced by the
/// first three terms of its integration-by-parts expansion,
///   -e^{i omega Y} sum_k (-1)^k h^(k)(Y) / (i omega)^(k+1),
/// with h'' taken from a central difference of h'.
OscillatoryResult fourier_half_line(const SmoothIntegrand& h, double omega,
                                    const OscillatoryOptions& options = {});

/// Adaptive 15-point Gauss-Kronrod on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, unsigned max_depth = 15);

}  // namespace gwtail
