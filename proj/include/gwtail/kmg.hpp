#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gwtail/poincare.hpp"

namespace gwtail {

/// Smallest integer X0 >= 0 with |Pi(E^X0)| < 0.1.
double default_window_start(const PiEvaluator& ev);

/// Karlin-McGregor function K(x) = Phi(Pi(E^x)) p1^-x at x = X0 + j/S,
/// j = 0..S-1, on the real axis. S must be a power of two >= 256. Throws
/// BasinViolation if |Pi(E^x)| >= 1 and ImaginaryResidue if an imaginary
/// part above 1e-10 survives.
std::vector<double> sample_K(const PiEvaluator& ev, double window_start, int samples);

/// K(x - i*shift) at x = X0 + j/S. shift = pi / (2 ln E) puts Pi on the
/// negative imaginary axis. OpenMP over samples.
std::vector<cplx> sample_K_line(const PiEvaluator& ev, double window_start, int samples,
                                double shift);

/// Single-threaded reference for sample_K_line.
std::vector<cplx> sample_K_line_serial(const PiEvaluator& ev, double window_start, int samples,
                                       double shift);

struct SpectrumOptions {
  int n_max = 8;
  int m_max = 32;
  int samples = 4096;
  /// Defaults to default_window_start().
  std::optional<double> window_start;
  /// Sampling line Im z = -shift_fraction * pi / (2 ln E). 0 samples the
  /// real axis.
  double shift_fraction = 1.0;
};

/// Fourier coefficients theta_m^{*n} of K(z)^n for n = 1..n_max and
/// |m| <= m_max.
class PeriodicSpectrum {
 public:
  PeriodicSpectrum(int n_max, int m_max, std::vector<cplx> coeffs)
      : n_max_(n_max), m_max_(m_max), coeffs_(std::move(coeffs)) {}

  int n_max() const noexcept { return n_max_; }
  int m_max() const noexcept { return m_max_; }

  cplx theta(int n, int m) const noexcept {
    return coeffs_[static_cast<std::size_t>(n - 1) * width() + static_cast<std::size_t>(m + m_max_)];
  }
  /// Row n as m = -m_max..m_max.
  std::span<const cplx> row(int n) const noexcept {
    return {coeffs_.data() + static_cast<std::size_t>(n - 1) * width(), width()};
  }

  /// K(x)^n reconstructed from row n.
  cplx reconstruct(int n, double x) const;

  double window_start = 0.0;
  int samples_per_period = 0;
  double line_shift = 0.0;
  /// max change of any retained coefficient when S is doubled, relative to
  /// the largest coefficient of its row (on the sampling line)
  double doubling_delta = 0.0;
  /// |theta_{m_max}| / |theta_0| in row 1
  double tail_ratio = 0.0;
  bool tail_warning = false;
  /// max |sum theta_m e^{2 pi i m x} - K(x)| / |K(x)| at 32 off-grid real points
  double real_axis_residual = 0.0;

 private:
  std::size_t width() const noexcept { return static_cast<std::size_t>(2 * m_max_ + 1); }

  int n_max_;
  int m_max_;
  std::vector<cplx> coeffs_;
};

/// Discrete Fourier analysis of pointwise powers of K sampled on a line
/// parallel to the real axis. Throws AliasingDetected if doubling S moves a
/// retained coefficient by more than 1e-10 (relative to its row).
PeriodicSpectrum spectrum(const PiEvaluator& ev, const SpectrumOptions& options = {});

}  // namespace gwtail
