#include "gwtail/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "gwtail/error.hpp"

namespace gwtail {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's table, as tabulated in
// Numerical Recipes 3rd ed. and the Boost.Math lanczos documentation).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kSwitchImag = 20.0;

void check_pole(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw Error(Errc::PoleArgument, "Gamma has a pole at " + std::to_string(z.real()));
  }
}

// log Gamma(z) for Re z >= 1/2.
cplx log_gamma_right(cplx z) {
  const cplx zm1 = z - 1.0;
  cplx sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (zm1 + static_cast<double>(i));
  const cplx t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

cplx gamma_right(cplx z) {
  const cplx zm1 = z - 1.0;
  cplx sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (zm1 + static_cast<double>(i));
  const cplx t = zm1 + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, zm1 + 0.5) * std::exp(-t) * sum;
}

// log sin(pi z) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  using namespace std::complex_literals;
  constexpr double pi = std::numbers::pi;
  if (std::abs(z.imag()) < kSwitchImag) return std::log(std::sin(pi * z));
  if (z.imag() > 0.0) return -1i * pi * z + std::log(0.5i * (1.0 - std::exp(2i * pi * z)));
  return std::conj(log_sin_pi(std::conj(z)));
}

}  // namespace

cplx log_gamma(cplx z) {
  check_pole(z);
  if (z.real() >= 0.5) return log_gamma_right(z);
  return std::log(std::numbers::pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) {
  check_pole(z);
  if (std::abs(z.imag()) > kSwitchImag) return std::exp(log_gamma(z));
  if (z.real() >= 0.5) return gamma_right(z);
  return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma_right(1.0 - z));
}

}  // namespace gwtail
