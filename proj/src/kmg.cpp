#include "gwtail/kmg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "gwtail/error.hpp"
#include "gwtail/schroeder.hpp"

namespace gwtail {

namespace {

constexpr double kAliasTolerance = 1e-10;
constexpr double kImagTolerance = 1e-10;

void check_samples(int samples) {
  if (samples < 256 || !std::has_single_bit(static_cast<unsigned>(samples))) {
    throw Error(Errc::InvalidArgument,
                "samples per period must be a power of two >= 256, got " + std::to_string(samples));
  }
}

cplx k_at(const PiEvaluator& ev, cplx z) {
  const auto& dist = ev.dist();
  const cplx pi_value = ev(std::exp(z * std::log(dist.mean())));
  if (std::abs(pi_value) >= 1.0) {
    throw Error(Errc::BasinViolation, "|Pi(E^z)| >= 1 at Re z = " + std::to_string(z.real()));
  }
  return phi_eval(dist, pi_value) * std::exp(-z * std::log(dist.p1()));
}

// c[n-1][m] = (1/S) sum_j v_j^n e^{-2 pi i m (X0 + j/S)}, m = 0..m_max, taking
// every `stride`-th sample of `values`.
std::vector<std::vector<cplx>> analyse(std::span<const cplx> values, int stride, int n_max, int m_max,
                                       double window_start) {
  const int s = static_cast<int>(values.size()) / stride;
  std::vector<cplx> twiddle(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) twiddle[j] = std::polar(1.0, -2.0 * std::numbers::pi * j / s);

  std::vector<std::vector<cplx>> out(static_cast<std::size_t>(n_max),
                                     std::vector<cplx>(static_cast<std::size_t>(m_max) + 1));
  std::vector<cplx> power(static_cast<std::size_t>(s), cplx{1.0});
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 0; j < s; ++j) power[j] *= values[static_cast<std::size_t>(j) * stride];
    for (int m = 0; m <= m_max; ++m) {
      cplx acc{0.0};
      for (int j = 0; j < s; ++j) acc += power[j] * twiddle[(static_cast<long long>(m) * j) % s];
      out[n - 1][m] = acc / static_cast<double>(s) *
                      std::polar(1.0, -2.0 * std::numbers::pi * m * window_start);
    }
  }
  return out;
}

}  // namespace

double default_window_start(const PiEvaluator& ev) {
  const double e = ev.dist().mean();
  for (int x0 = 0; x0 < 200; ++x0) {
    if (std::abs(ev(cplx{std::pow(e, x0)})) < 0.1) return x0;
  }
  throw Error(Errc::NoConvergence, "Pi(E^x) never drops below 0.1");
}

std::vector<double> sample_K(const PiEvaluator& ev, double window_start, int samples) {
  check_samples(samples);
  std::vector<double> out(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const cplx k = k_at(ev, cplx{window_start + static_cast<double>(j) / samples});
    if (std::abs(k.imag()) > kImagTolerance * std::max(1.0, std::abs(k))) {
      throw Error(Errc::ImaginaryResidue, "K has an imaginary part on the real axis");
    }
    out[j] = k.real();
  }
  return out;
}

std::vector<cplx> sample_K_line_serial(const PiEvaluator& ev, double window_start, int samples,
                                       double shift) {
  check_samples(samples);
  std::vector<cplx> out(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    out[j] = k_at(ev, cplx{window_start + static_cast<double>(j) / samples, -shift});
  }
  return out;
}

std::vector<cplx> sample_K_line(const PiEvaluator& ev, double window_start, int samples,
                                double shift) {
  check_samples(samples);
  std::vector<cplx> out(static_cast<std::size_t>(samples));
  bool failed = false;
  Errc code = Errc::BasinViolation;
  std::string message;
#pragma omp parallel for schedule(static)
  for (int j = 0; j < samples; ++j) {
    try {
      out[j] = k_at(ev, cplx{window_start + static_cast<double>(j) / samples, -shift});
    } catch (const Error& err) {
#pragma omp critical(gwtail_kmg_error)
      {
        failed = true;
        code = err.code();
        message = err.what();
      }
    }
  }
  if (failed) throw Error(code, message);
  return out;
}

cplx PeriodicSpectrum::reconstruct(int n, double x) const {
  cplx acc{0.0};
  for (int m = -m_max_; m <= m_max_; ++m) {
    acc += theta(n, m) * std::polar(1.0, 2.0 * std::numbers::pi * m * x);
  }
  return acc;
}

PeriodicSpectrum spectrum(const PiEvaluator& ev, const SpectrumOptions& options) {
  const int n_max = options.n_max;
  const int m_max = options.m_max;
  const int s = options.samples;
  check_samples(s);
  if (n_max < 1 || m_max < 0) throw Error(Errc::InvalidArgument, "n_max >= 1 and m_max >= 0 required");
  if (4 * m_max >= s) throw Error(Errc::InvalidArgument, "m_max must stay below S/4");
  if (options.shift_fraction < 0.0 || options.shift_fraction > 1.0) {
    throw Error(Errc::InvalidArgument, "shift_fraction must lie in [0, 1]");
  }

  const double log_e = std::log(ev.dist().mean());
  const double x0 = options.window_start.value_or(default_window_start(ev));
  const double shift = options.shift_fraction * std::numbers::pi / (2.0 * log_e);

  const auto fine = sample_K_line(ev, x0, 2 * s, shift);
  const auto coarse = analyse(fine, 2, n_max, m_max, x0);
  const auto refined = analyse(fine, 1, n_max, m_max, x0);

  double delta = 0.0;
  for (int n = 0; n < n_max; ++n) {
    double scale = 1.0;
    for (const auto& c : coarse[n]) scale = std::max(scale, std::abs(c));
    for (int m = 0; m <= m_max; ++m) {
      delta = std::max(delta, std::abs(coarse[n][m] - refined[n][m]) / scale);
    }
  }
  if (delta > kAliasTolerance) {
    throw Error(Errc::AliasingDetected,
                "doubling S changed a coefficient by " + std::to_string(delta));
  }

  const std::size_t width = static_cast<std::size_t>(2 * m_max + 1);
  std::vector<cplx> coeffs(static_cast<std::size_t>(n_max) * width);
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      // K(x - i s) has coefficients theta_m e^{2 pi m s}; K real on R gives
      // theta_{-m} = conj(theta_m).
      cplx theta = coarse[n - 1][m] * std::exp(-2.0 * std::numbers::pi * m * shift);
      if (m == 0) theta = theta.real();
      coeffs[(n - 1) * width + static_cast<std::size_t>(m_max + m)] = theta;
      coeffs[(n - 1) * width + static_cast<std::size_t>(m_max - m)] = std::conj(theta);
    }
  }

  PeriodicSpectrum out(n_max, m_max, std::move(coeffs));
  out.window_start = x0;
  out.samples_per_period = s;
  out.line_shift = shift;
  out.doubling_delta = delta;
  out.tail_ratio = std::abs(out.theta(1, m_max)) / std::abs(out.theta(1, 0));
  out.tail_warning = out.tail_ratio > 1e-10;

  constexpr int kChecks = 32;
  double residual = 0.0;
  for (int k = 0; k < kChecks; ++k) {
    const double x = x0 + (k + 0.37) / kChecks;
    const double exact = k_at(ev, cplx{x}).real();
    residual = std::max(residual, std::abs(out.reconstruct(1, x) - exact) / std::abs(exact));
  }
  out.real_axis_residual = residual;
  return out;
}

}  // namespace gwtail
