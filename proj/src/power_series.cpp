#include "gwtail/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gwtail/error.hpp"

namespace gwtail {

std::string_view to_string(SeriesLabel label) noexcept {
  switch (label) {
    case SeriesLabel::Phi: return "Phi";
    case SeriesLabel::PhiInverse: return "PhiInverse";
    case SeriesLabel::Pi: return "Pi";
  }
  return "Unknown";
}

cplx PowerSeries::operator()(cplx z) const {
  if (std::abs(z) > trusted_radius) {
    throw Error(Errc::OutsideTrustedRadius,
                std::string(to_string(label)) + " series evaluated at |z| = " +
                    std::to_string(std::abs(z)) + " > " + std::to_string(trusted_radius));
  }
  return eval_unchecked(z);
}

cplx PowerSeries::eval_unchecked(cplx z) const noexcept { return series::evaluate(coeffs, z); }

cplx PowerSeries::derivative_unchecked(cplx z) const noexcept {
  cplx acc{0.0};
  for (int k = order(); k >= 1; --k) acc = acc * z + static_cast<double>(k) * coeffs[k];
  return acc;
}

double PowerSeries::tail_estimate(cplx z) const noexcept {
  const int t = order();
  if (t < 1) return 0.0;
  const double r = std::abs(z);
  return std::abs(coeffs[t]) * std::pow(r, t) + std::abs(coeffs[t - 1]) * std::pow(r, t - 1);
}

namespace series {

std::vector<cplx> multiply(std::span<const cplx> a, std::span<const cplx> b, int order) {
  std::vector<cplx> out(static_cast<std::size_t>(order) + 1, cplx{0.0});
  const int na = std::min(static_cast<int>(a.size()) - 1, order);
  for (int i = 0; i <= na; ++i) {
    if (a[i] == cplx{0.0}) continue;
    const int nb = std::min(static_cast<int>(b.size()) - 1, order - i);
    for (int j = 0; j <= nb; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

cplx evaluate(std::span<const cplx> c, cplx z) noexcept {
  cplx acc{0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace series

}  // namespace gwtail
