#pragma once

#include <complex>

namespace gwtail {

using cplx = std::complex<double>;

/// Complex Gamma function: Lanczos approximation (g = 7, 9 terms) on
/// Re z >= 1/2, reflection formula below. For |Im z| > 20 the value is
/// formed as exp(log_gamma(z)) since |Gamma| decays like exp(-pi |Im z| / 2).
/// Throws PoleArgument at non-positive integers.
cplx gamma(cplx z);

/// A logarithm of Gamma(z): exp(log_gamma(z)) == gamma(z), but the imaginary
/// part is not reduced to the principal branch.
cplx log_gamma(cplx z);

}  // namespace gwtail
