#include "gwtail/schroeder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gwtail/error.hpp"

namespace gwtail {

namespace {

constexpr double kStopThreshold = 1e-9;
constexpr int kMaxIterations = 10000;
constexpr double kProbeTolerance = 1e-9;
constexpr int kProbePoints = 16;
constexpr int kProbeHalvings = 12;

std::vector<cplx> polynomial_coeffs(const OffspringDistribution& dist) {
  const auto c = dist.coefficients();
  return {c.begin(), c.end()};
}

double quadratic_coefficient(const OffspringDistribution& dist) {
  const double p1 = dist.p1();
  return dist.p(2) / (p1 - p1 * p1);
}

// Largest r in {1/2, 1/4, ...} for which `ok` holds on a circle of 16 points.
template <typename Check>
double probe_radius(Check&& ok) {
  double r = 0.5;
  for (int h = 0; h < kProbeHalvings; ++h, r *= 0.5) {
    bool pass = true;
    for (int j = 0; j < kProbePoints && pass; ++j) {
      const double angle = 2.0 * std::numbers::pi * (j + 0.25) / kProbePoints;
      try {
        pass = ok(std::polar(r, angle));
      } catch (const Error&) {
        pass = false;
      }
    }
    if (pass) return r;
  }
  return r;
}

}  // namespace

PowerSeries phi_series(const OffspringDistribution& dist, int order) {
  if (order < 2) throw Error(Errc::InvalidArgument, "phi_series needs order >= 2");
  const double p1 = dist.p1();
  const auto poly = polynomial_coeffs(dist);

  // powers[k] = P(z)^k truncated to degree `order`.
  std::vector<std::vector<cplx>> powers(static_cast<std::size_t>(order) + 1);
  powers[1] = series::multiply(poly, std::vector<cplx>{1.0}, order);
  for (int k = 2; k <= order; ++k) powers[k] = series::multiply(powers[k - 1], poly, order);

  std::vector<cplx> phi(static_cast<std::size_t>(order) + 1, cplx{0.0});
  phi[1] = 1.0;
  for (int n = 2; n <= order; ++n) {
    cplx rhs{0.0};
    for (int k = 1; k < n; ++k) rhs += phi[k] * powers[k][n];
    const double divisor = p1 - std::pow(p1, n);
    if (std::abs(divisor) < 1e-300) throw Error(Errc::DivisorUnderflow, "p1 - p1^n vanished");
    phi[n] = rhs / divisor;
  }

  PowerSeries out{std::move(phi), 0.0, SeriesLabel::Phi};
  out.trusted_radius = probe_radius([&](cplx z) {
    const cplx ref = phi_eval(dist, z);
    return std::abs(out.eval_unchecked(z) - ref) <= kProbeTolerance * std::max(1.0, std::abs(ref));
  });
  return out;
}

PhiValue phi_eval_with_derivative(const OffspringDistribution& dist, cplx w) {
  const double p1 = dist.p1();
  cplx deriv{1.0};
  int t = 0;
  while (std::abs(w) >= kStopThreshold) {
    if (t == kMaxIterations || !std::isfinite(std::abs(w)) || std::abs(w) > 1e6) {
      throw Error(Errc::NoConvergence, "P-iterates are not attracted to 0");
    }
    const auto [value, slope] = dist.eval_with_derivative(w);
    deriv *= slope;
    w = value;
    ++t;
  }
  const double phi2 = quadratic_coefficient(dist);
  const double scale = std::pow(p1, -t);
  return {(w + phi2 * w * w) * scale, deriv * (1.0 + 2.0 * phi2 * w) * scale};
}

cplx phi_eval(const OffspringDistribution& dist, cplx w) {
  return phi_eval_with_derivative(dist, w).value;
}

std::vector<double> kappa_coeffs(const OffspringDistribution& dist, int count) {
  if (count < 1) throw Error(Errc::InvalidArgument, "kappa_coeffs needs count >= 1");
  const double p1 = dist.p1();
  const int d = dist.degree();

  // g holds kappa_1..kappa_{n-1}; kappa_n does not enter [z^n] g^k for k >= 2.
  std::vector<cplx> g(static_cast<std::size_t>(count) + 1, cplx{0.0});
  g[1] = 1.0;
  for (int n = 2; n <= count; ++n) {
    double rhs = 0.0;
    std::vector<cplx> power(g.begin(), g.begin() + n + 1);
    for (int k = 2; k <= std::min(d, n); ++k) {
      power = series::multiply(power, std::span<const cplx>(g.data(), n + 1), n);
      rhs += dist.p(k) * power[n].real();
    }
    g[n] = rhs / (std::pow(p1, n) - p1);
  }

  std::vector<double> kappa(static_cast<std::size_t>(count));
  for (int n = 1; n <= count; ++n) kappa[n - 1] = g[n].real();
  return kappa;
}

PowerSeries phi_inverse_series(const OffspringDistribution& dist, int order) {
  if (order < 2) throw Error(Errc::InvalidArgument, "phi_inverse_series needs order >= 2");
  const auto kappa = kappa_coeffs(dist, order);
  std::vector<cplx> coeffs(static_cast<std::size_t>(order) + 1, cplx{0.0});
  for (int n = 1; n <= order; ++n) coeffs[n] = kappa[n - 1];

  PowerSeries out{std::move(coeffs), 0.0, SeriesLabel::PhiInverse};
  out.trusted_radius = probe_radius([&](cplx u) {
    return std::abs(phi_eval(dist, out.eval_unchecked(u)) - u) <= kProbeTolerance;
  });
  return out;
}

cplx phi_inverse_eval(const PowerSeries& inverse, cplx u) { return inverse(u); }

cplx phi_inverse_eval(const OffspringDistribution& dist, cplx u) {
  return phi_inverse_eval(phi_inverse_series(dist), u);
}

}  // namespace gwtail
