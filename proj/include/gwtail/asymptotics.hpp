#pragma once

#include <span>
#include <vector>

#include "gwtail/kmg.hpp"
#include "gwtail/offspring.hpp"
#include "gwtail/poincare.hpp"
#include "gwtail/profile.hpp"
#include "gwtail/quadrature.hpp"

namespace gwtail {

inline constexpr int kDefaultTerms = 4;

/// One term x^{alpha + (n-1) beta} V_n(x) of the left-tail expansion, with
///   V_n(x) = K_n(-ln x / ln E),
///   K_n(z) = kappa_n sum_m theta_m^{*n} e^{2 pi i m z} / Gamma(n beta - 2 pi i m / ln E).
class ExpansionTerm {
 public:
  /// harmonic_cutoff < 0 keeps every harmonic of the spectrum row.
  ExpansionTerm(const OffspringDistribution& dist, const PeriodicSpectrum& spectrum, int n,
                double kappa, int harmonic_cutoff = -1);

  int n() const noexcept { return n_; }
  double kappa() const noexcept { return kappa_; }
  double exponent() const noexcept { return exponent_; }
  int harmonic_cutoff() const noexcept { return cutoff_; }
  std::span<const cplx> spectrum_row() const noexcept { return row_; }
  /// log Gamma(n beta - 2 pi i m / ln E), m = -cutoff..cutoff.
  std::span<const cplx> log_gamma_denominators() const noexcept { return log_gamma_; }

  /// K_n(z) for real z; complex to expose the imaginary residue.
  cplx amplitude(double z) const noexcept;

  /// V_n(x). Throws NonPositiveX for x <= 0 and ImaginaryResidue if the
  /// symmetric sum leaves an imaginary part above 1e-9.
  double v(double x) const;

 private:
  int n_;
  double kappa_;
  double exponent_;
  double log_e_;
  int cutoff_;
  std::vector<cplx> row_;
  std::vector<cplx> log_gamma_;
  // kappa_n theta_m / Gamma(.), m = -cutoff..cutoff
  std::vector<cplx> weights_;
};

/// The first n_max terms of the expansion built from one spectrum.
class TailExpansion {
 public:
  TailExpansion(const OffspringDistribution& dist, const PeriodicSpectrum& spectrum);
  explicit TailExpansion(const PiEvaluator& ev, const SpectrumOptions& options = {});

  int n_max() const noexcept { return static_cast<int>(terms_.size()); }
  const ExpansionTerm& term(int n) const { return terms_.at(static_cast<std::size_t>(n - 1)); }
  const PeriodicSpectrum& spectrum() const noexcept { return spectrum_; }
  const OffspringDistribution& dist() const noexcept { return dist_; }

 private:
  OffspringDistribution dist_;
  PeriodicSpectrum spectrum_;
  std::vector<ExpansionTerm> terms_;
};

/// V_n(x) from the spectral formula.
double v_n(const ExpansionTerm& term, double x);

/// Partial sum sum_{n=1}^{N} x^{alpha + (n-1) beta} V_n(x). Throws
/// NonPositiveX and TruncationExceeded (N > n_max).
double density_series(const TailExpansion& expansion, double x, int n_terms);

/// density_series over a grid; OpenMP over points.
DensityProfile series_profile(const TailExpansion& expansion, std::span<const double> xs,
                              int n_terms);

struct ContourOptions {
  OscillatoryOptions quadrature{};
  /// |Pi| bound for the basin test on contour samples.
  double basin_bound = 0.5;
};

/// Smallest eps in {1, 2, 4, ...} with |Pi(eps + iy)| < basin_bound on 64
/// contour samples.
double contour_offset(const PiEvaluator& ev, double basin_bound = 0.5);

/// V_n(x) by quadrature of
///   kappa_n x^{1 - n beta} / (2 pi i) \int_{eps + iR} Phi(Pi(z))^n e^{zx} dz.
/// Test oracle; requires ln p1 / ln E < -1 (HypothesisViolated) and n <= 4.
double v_n_contour_oracle(const PiEvaluator& ev, int n, double x, const ContourOptions& options = {});

struct IdentityCheck {
  cplx lhs;
  cplx rhs;
  double abs_residual = 0.0;
  /// |lhs - rhs| / max(1, |rhs|)
  double rel_residual = 0.0;
};

/// Both sides of
///   x^{1 - n beta} / (2 pi i) \int_{gamma} w^{-s} e^{wx} dw = x^{-2 pi i m / ln E} / Gamma(s),
///   s = n beta - 2 pi i m / ln E,
/// with the left side integrated along gamma = 1 + iR.
IdentityCheck main_identity_check(const OffspringDistribution& dist, int m, int n, double x = 1.0,
                                  const OscillatoryOptions& options = {});

}  // namespace gwtail
