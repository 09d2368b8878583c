#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gwtail {

using cplx = std::complex<double>;

inline constexpr int kMaxDegree = 64;
inline constexpr double kDefaultNormalizationTol = 1e-12;

/// Offspring law of a Galton-Watson process in the Schroeder case
/// (p0 = 0, 0 < p1 < 1) with a polynomial generating function
/// P(z) = p1 z + p2 z^2 + ... + pd z^d.
///
/// Instances only come out of validate(); the derived constants are
/// computed once there and the object is immutable afterwards.
class OffspringDistribution {
 public:
  /// `raw[j]` is the probability of family size j, so raw[0] must be 0.
  /// Trailing zeros are dropped before the degree cap is applied.
  static OffspringDistribution validate(std::span<const double> raw,
                                        double normalization_tol = kDefaultNormalizationTol);

  /// Coefficients c0..cd of P with c0 = 0.
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  double p(int j) const noexcept {
    return j >= 0 && j < static_cast<int>(coeffs_.size()) ? coeffs_[j] : 0.0;
  }
  double p1() const noexcept { return coeffs_[1]; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// E = P'(1).
  double mean() const noexcept { return mean_; }
  /// ln p1 / ln E, always negative.
  double log_ratio() const noexcept { return log_ratio_; }
  /// Leading tail exponent, -1 - log_E p1.
  double alpha() const noexcept { return alpha_; }
  /// Spacing of the tail exponents, -log_E p1.
  double beta() const noexcept { return beta_; }

  /// P, P' or P'' by Horner's scheme. `order` must be 0, 1 or 2.
  cplx eval(cplx z, int order = 0) const;
  double eval(double z, int order = 0) const;

  /// (P(z), P'(z)) in one pass.
  std::pair<cplx, cplx> eval_with_derivative(cplx z) const noexcept;

 private:
  OffspringDistribution() = default;

  std::vector<double> coeffs_;
  double mean_ = 0.0;
  double log_ratio_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
};

}  // namespace gwtail
