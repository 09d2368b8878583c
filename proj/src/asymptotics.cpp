#include "gwtail/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gwtail/error.hpp"
#include "gwtail/schroeder.hpp"
#include "gwtail/special.hpp"

namespace gwtail {

namespace {

constexpr double kImagTolerance = 1e-9;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

ExpansionTerm::ExpansionTerm(const OffspringDistribution& dist, const PeriodicSpectrum& spectrum,
                             int n, double kappa, int harmonic_cutoff)
    : n_(n),
      kappa_(kappa),
      exponent_(dist.alpha() + (n - 1) * dist.beta()),
      log_e_(std::log(dist.mean())),
      cutoff_(harmonic_cutoff < 0 ? spectrum.m_max() : std::min(harmonic_cutoff, spectrum.m_max())) {
  if (n < 1 || n > spectrum.n_max()) {
    throw Error(Errc::TruncationExceeded, "term " + std::to_string(n) + " is not in the spectrum");
  }
  const auto full = spectrum.row(n);
  const int m_max = spectrum.m_max();
  row_.assign(full.begin() + (m_max - cutoff_), full.begin() + (m_max + cutoff_ + 1));
  log_gamma_.resize(row_.size());
  weights_.resize(row_.size());
  for (int m = -cutoff_; m <= cutoff_; ++m) {
    const std::size_t idx = static_cast<std::size_t>(m + cutoff_);
    const cplx arg{n * dist.beta(), -kTwoPi * m / log_e_};
    log_gamma_[idx] = log_gamma(arg);
    // |theta_m| underflows long before 1/|Gamma| overflows; combine in logs.
    const cplx theta = row_[idx];
    weights_[idx] = theta == cplx{0.0} ? cplx{0.0} : kappa_ * std::exp(std::log(theta) - log_gamma_[idx]);
  }
}

cplx ExpansionTerm::amplitude(double z) const noexcept {
  cplx acc = weights_[static_cast<std::size_t>(cutoff_)];
  // Smallest harmonics last so the dominant terms are not swamped.
  for (int m = cutoff_; m >= 1; --m) {
    const cplx phase = std::polar(1.0, kTwoPi * m * z);
    acc += weights_[static_cast<std::size_t>(cutoff_ + m)] * phase +
           weights_[static_cast<std::size_t>(cutoff_ - m)] * std::conj(phase);
  }
  return acc;
}

double ExpansionTerm::v(double x) const {
  if (!(x > 0.0)) throw Error(Errc::NonPositiveX, "V_n needs x > 0");
  const cplx value = amplitude(-std::log(x) / log_e_);
  if (std::abs(value.imag()) > kImagTolerance * std::max(1.0, std::abs(value.real()))) {
    throw Error(Errc::ImaginaryResidue, "V_" + std::to_string(n_) + " is not real");
  }
  return value.real();
}

TailExpansion::TailExpansion(const OffspringDistribution& dist, const PeriodicSpectrum& spectrum)
    : dist_(dist), spectrum_(spectrum) {
  const auto kappa = kappa_coeffs(dist, spectrum.n_max());
  terms_.reserve(kappa.size());
  for (int n = 1; n <= spectrum.n_max(); ++n) terms_.emplace_back(dist, spectrum, n, kappa[n - 1]);
}

TailExpansion::TailExpansion(const PiEvaluator& ev, const SpectrumOptions& options)
    : TailExpansion(ev.dist(), gwtail::spectrum(ev, options)) {}

double v_n(const ExpansionTerm& term, double x) { return term.v(x); }

double density_series(const TailExpansion& expansion, double x, int n_terms) {
  if (!(x > 0.0)) throw Error(Errc::NonPositiveX, "density_series needs x > 0");
  if (n_terms < 0 || n_terms > expansion.n_max()) {
    throw Error(Errc::TruncationExceeded, std::to_string(n_terms) + " terms requested, " +
                                              std::to_string(expansion.n_max()) + " available");
  }
  double sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    const auto& term = expansion.term(n);
    sum += std::pow(x, term.exponent()) * term.v(x);
  }
  return sum;
}

DensityProfile series_profile(const TailExpansion& expansion, std::span<const double> xs,
                              int n_terms) {
  DensityProfile profile;
  profile.method = ProfileMethod::Series;
  profile.xs.assign(xs.begin(), xs.end());
  profile.values.resize(xs.size());
  profile.metadata = {{"n_terms", std::to_string(n_terms)},
                      {"m_max", std::to_string(expansion.spectrum().m_max())},
                      {"samples", std::to_string(expansion.spectrum().samples_per_period)}};
  // Validate up front so the parallel loop cannot throw.
  for (double x : xs) {
    if (!(x > 0.0)) throw Error(Errc::NonPositiveX, "density_series needs x > 0");
  }
  if (n_terms < 0 || n_terms > expansion.n_max()) {
    throw Error(Errc::TruncationExceeded, "too many terms requested");
  }
  bool failed = false;
  std::string message;
  const auto count = static_cast<long long>(xs.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      profile.values[i] = density_series(expansion, xs[i], n_terms);
    } catch (const Error& err) {
#pragma omp critical(gwtail_series_error)
      {
        failed = true;
        message = err.what();
      }
    }
  }
  if (failed) throw Error(Errc::ImaginaryResidue, message);
  profile.check();
  return profile;
}

double contour_offset(const PiEvaluator& ev, double basin_bound) {
  constexpr int kSamples = 64;
  for (double eps = 1.0; eps <= 1024.0; eps *= 2.0) {
    bool ok = true;
    for (int k = 0; k < kSamples && ok; ++k) {
      const double y = k == 0 ? 0.0 : std::pow(10.0, -2.0 + 7.0 * (k - 1) / (kSamples - 2));
      ok = std::abs(ev(cplx{eps, y})) < basin_bound;
    }
    if (ok) return eps;
  }
  throw Error(Errc::BasinViolation, "no contour offset keeps Pi inside the basin");
}

double v_n_contour_oracle(const PiEvaluator& ev, int n, double x, const ContourOptions& options) {
  const auto& dist = ev.dist();
  if (!(dist.log_ratio() < -1.0)) {
    throw Error(Errc::HypothesisViolated, "contour integrals need ln p1 / ln E < -1");
  }
  if (n < 1 || n > 4) throw Error(Errc::InvalidArgument, "contour oracle supports 1 <= n <= 4");
  if (!(x > 0.0)) throw Error(Errc::NonPositiveX, "contour oracle needs x > 0");

  using namespace std::complex_literals;
  const double eps = contour_offset(ev, options.basin_bound);
  const double damp = std::exp(eps * x);
  const SmoothIntegrand h = [&](double y) -> std::pair<cplx, cplx> {
    const auto pi = ev.eval_with_derivative(cplx{eps, y});
    const auto phi = phi_eval_with_derivative(dist, pi.value);
    const cplx power = std::pow(phi.value, n - 1);
    const cplx value = power * phi.value * damp;
    const cplx dz = static_cast<double>(n) * power * phi.derivative * pi.derivative * damp;
    return {value, 1i * dz};
  };
  const auto integral = fourier_half_line(h, x, options.quadrature);
  // Phi(Pi(conj z)) = conj Phi(Pi(z)): the full line is twice the real part.
  const double line = integral.value.real() / std::numbers::pi;
  const double kappa = kappa_coeffs(dist, n).back();
  return kappa * std::pow(x, 1.0 - n * dist.beta()) * line;
}

IdentityCheck main_identity_check(const OffspringDistribution& dist, int m, int n, double x,
                                  const OscillatoryOptions& options) {
  if (!(dist.log_ratio() < -1.0)) {
    throw Error(Errc::HypothesisViolated, "contour integrals need ln p1 / ln E < -1");
  }
  if (std::abs(m) > 4 || n < 1 || n > 4) throw Error(Errc::InvalidArgument, "need |m| <= 4, 1 <= n <= 4");
  if (!(x > 0.0)) throw Error(Errc::NonPositiveX, "main identity needs x > 0");

  using namespace std::complex_literals;
  const double log_e = std::log(dist.mean());
  const cplx s{n * dist.beta(), -kTwoPi * m / log_e};
  constexpr double eps = 1.0;
  const double damp = std::exp(eps * x);

  auto branch = [&](double sign) -> SmoothIntegrand {
    return [=](double y) -> std::pair<cplx, cplx> {
      const cplx w{eps, sign * y};
      const cplx value = std::exp(-s * std::log(w)) * damp;
      return {value, -s * (sign * 1i) * value / w};
    };
  };
  // Upper half y > 0 oscillates as e^{ixy}, lower half (w = eps - iy) as e^{-ixy}.
  const cplx upper = fourier_half_line(branch(1.0), x, options).value;
  const cplx lower = fourier_half_line(branch(-1.0), -x, options).value;
  const cplx integral = (upper + lower) / kTwoPi;

  IdentityCheck check;
  check.lhs = std::pow(x, 1.0 - n * dist.beta()) * integral;
  check.rhs = std::exp(-kTwoPi * 1i * static_cast<double>(m) * std::log(x) / log_e - log_gamma(s));
  check.abs_residual = std::abs(check.lhs - check.rhs);
  check.rel_residual = check.abs_residual / std::max(1.0, std::abs(check.rhs));
  return check;
}

}  // namespace gwtail
