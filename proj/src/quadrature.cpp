#include "gwtail/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gwtail/error.hpp"

namespace gwtail {

using boost::math::quadrature::gauss_kronrod;

OscillatoryResult fourier_half_line(const SmoothIntegrand& h, double omega,
                                    const OscillatoryOptions& options) {
  using namespace std::complex_literals;
  if (omega == 0.0) throw Error(Errc::InvalidArgument, "oscillation frequency must be nonzero");
  const double w = std::abs(omega);
  const double cutoff = std::max(options.min_cutoff, 2.0 * std::numbers::pi * options.cycles / w);
  if (cutoff > options.max_cutoff) {
    throw Error(Errc::SlowDecay, "truncation point " + std::to_string(cutoff) + " exceeds limit");
  }
  const double max_width = options.panel_fraction * std::numbers::pi / w;

  auto integrand = [&](double y) { return h(y).first * std::polar(1.0, omega * y); };

  OscillatoryResult result;
  result.cutoff = cutoff;
  cplx total{0.0};
  double a = 0.0;
  while (a < cutoff) {
    const double width = std::min(max_width, std::max(0.5, 0.25 * a));
    const double b = std::min(a + width, cutoff);
    total += gauss_kronrod<double, 15>::integrate(integrand, a, b, options.max_depth,
                                                  options.panel_tolerance);
    ++result.panels;
    a = b;
  }

  // h'' from a central difference of h'; only the third correction term uses it.
  const auto [hy, dhy] = h(cutoff);
  const double step = 1e-2 * cutoff;
  const cplx d2hy = (h(cutoff + step).second - h(cutoff - step).second) / (2.0 * step);
  const cplx iw = 1i * omega;
  result.tail = std::polar(1.0, omega * cutoff) * (-hy / iw + dhy / (iw * iw) - d2hy / (iw * iw * iw));
  result.value = total + result.tail;
  return result;
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 unsigned max_depth) {
  return gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol);
}

}  // namespace gwtail
