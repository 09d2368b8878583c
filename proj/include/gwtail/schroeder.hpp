#pragma once

#include <vector>

#include "gwtail/offspring.hpp"
#include "gwtail/power_series.hpp"

namespace gwtail {

inline constexpr int kDefaultSeriesOrder = 40;

/// Taylor series of the Schroeder function Phi, the solution of
/// Phi(P(z)) = p1 Phi(z) with Phi(0) = 0, Phi'(0) = 1.
///
/// Coefficients come from the triangular system obtained by matching z^n:
///   phi_n (p1 - p1^n) = sum_{k<n} phi_k [z^n] P(z)^k.
/// The trusted radius is the largest r in {1/2, 1/4, ...} where the series
/// agrees with phi_eval to 1e-9 on 16 points of |z| = r.
PowerSeries phi_series(const OffspringDistribution& dist, int order = kDefaultSeriesOrder);

/// Phi(w) by iterating P until |P^t(w)| < 1e-9 and rescaling by p1^-t,
/// with a quadratic polish of the final iterate. Throws NoConvergence when
/// w is not attracted to 0 within 10^4 steps.
cplx phi_eval(const OffspringDistribution& dist, cplx w);

struct PhiValue {
  cplx value;
  cplx derivative;
};

PhiValue phi_eval_with_derivative(const OffspringDistribution& dist, cplx w);

/// kappa_1..kappa_N, the Taylor coefficients of Phi^{-1}, from
/// P(Phi^{-1}(z)) = Phi^{-1}(p1 z). Element 0 holds kappa_1 = 1.
std::vector<double> kappa_coeffs(const OffspringDistribution& dist, int count);

/// Phi^{-1} as a PowerSeries with kappa_1..kappa_N; trusted radius probed
/// against the identity Phi(Phi^{-1}(u)) = u.
PowerSeries phi_inverse_series(const OffspringDistribution& dist, int order = kDefaultSeriesOrder);

cplx phi_inverse_eval(const PowerSeries& inverse, cplx u);
cplx phi_inverse_eval(const OffspringDistribution& dist, cplx u);

}  // namespace gwtail
