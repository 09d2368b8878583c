#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace gwtail {

using cplx = std::complex<double>;

enum class SeriesLabel { Phi, PhiInverse, Pi };

std::string_view to_string(SeriesLabel label) noexcept;

/// Truncated Taylor expansion about 0 together with the radius inside
/// which it has been checked against an independent evaluator.
struct PowerSeries {
  std::vector<cplx> coeffs;
  double trusted_radius = 0.0;
  SeriesLabel label = SeriesLabel::Phi;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }

  /// Throws OutsideTrustedRadius when |z| > trusted_radius.
  cplx operator()(cplx z) const;
  cplx eval_unchecked(cplx z) const noexcept;
  /// Derivative of the truncated polynomial.
  cplx derivative_unchecked(cplx z) const noexcept;
  /// Magnitude of the last two retained terms at z; a cheap proxy for the
  /// truncation error when the coefficients decay geometrically.
  double tail_estimate(cplx z) const noexcept;
};

namespace series {

/// Product of two coefficient vectors truncated to degree `order`.
std::vector<cplx> multiply(std::span<const cplx> a, std::span<const cplx> b, int order);

/// Horner evaluation of sum c_k z^k.
cplx evaluate(std::span<const cplx> c, cplx z) noexcept;

}  // namespace series

}  // namespace gwtail
