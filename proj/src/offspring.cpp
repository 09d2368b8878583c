#include "gwtail/offspring.hpp"

#include <cmath>
#include <sstream>

#include "gwtail/error.hpp"

namespace gwtail {

namespace {

template <typename T>
T horner(std::span<const double> c, T z, int order) {
  const int d = static_cast<int>(c.size()) - 1;
  T acc{0.0};
  for (int j = d; j >= order; --j) {
    double factor = c[j];
    for (int k = 0; k < order; ++k) factor *= static_cast<double>(j - k);
    acc = acc * z + factor;
  }
  return acc;
}

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

OffspringDistribution OffspringDistribution::validate(std::span<const double> raw,
                                                      double normalization_tol) {
  if (raw.empty()) throw Error(Errc::EmptyDistribution, "offspring list is empty");
  for (double v : raw) {
    if (!std::isfinite(v)) throw Error(Errc::InvalidArgument, "non-finite probability");
  }
  if (raw[0] != 0.0) {
    throw Error(Errc::NonzeroP0, "p0 = " + describe(raw[0]) + ", the Schroeder case needs p0 = 0");
  }
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] < 0.0) {
      throw Error(Errc::NegativeProbability,
                  "p" + std::to_string(j) + " = " + describe(raw[j]));
    }
  }
  const double p1 = raw.size() > 1 ? raw[1] : 0.0;
  if (p1 == 1.0) throw Error(Errc::DegenerateP1One, "p1 = 1 gives the trivial process Z_t = 1");
  if (!(p1 > 0.0 && p1 < 1.0)) {
    throw Error(Errc::P1OutOfRange, "p1 = " + describe(p1) + " must lie in (0, 1)");
  }

  std::size_t last = raw.size() - 1;
  while (last > 1 && raw[last] == 0.0) --last;
  if (static_cast<int>(last) > kMaxDegree) {
    throw Error(Errc::DegreeTooLarge,
                "degree " + std::to_string(last) + " exceeds " + std::to_string(kMaxDegree));
  }

  double sum = 0.0;
  for (std::size_t j = 0; j <= last; ++j) sum += raw[j];
  if (std::abs(sum - 1.0) > normalization_tol) {
    throw Error(Errc::NotNormalized, "probabilities sum to " + describe(sum));
  }

  OffspringDistribution dist;
  dist.coeffs_.assign(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  double mean = 0.0;
  for (std::size_t j = 1; j <= last; ++j) mean += static_cast<double>(j) * raw[j];
  dist.mean_ = mean;
  dist.log_ratio_ = std::log(p1) / std::log(mean);
  dist.beta_ = -dist.log_ratio_;
  dist.alpha_ = dist.beta_ - 1.0;
  return dist;
}

cplx OffspringDistribution::eval(cplx z, int order) const {
  if (order < 0 || order > 2) throw Error(Errc::InvalidArgument, "derivative order must be 0, 1 or 2");
  return horner<cplx>(coeffs_, z, order);
}

double OffspringDistribution::eval(double z, int order) const {
  if (order < 0 || order > 2) throw Error(Errc::InvalidArgument, "derivative order must be 0, 1 or 2");
  return horner<double>(coeffs_, z, order);
}

std::pair<cplx, cplx> OffspringDistribution::eval_with_derivative(cplx z) const noexcept {
  cplx value{0.0};
  cplx deriv{0.0};
  for (int j = degree(); j >= 0; --j) {
    deriv = deriv * z + value;
    value = value * z + coeffs_[j];
  }
  return {value, deriv};
}

}  // namespace gwtail
