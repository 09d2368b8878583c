#include "gwtail/profile.hpp"

#include <cmath>

#include "gwtail/error.hpp"

namespace gwtail {

std::string_view to_string(ProfileMethod method) noexcept {
  switch (method) {
    case ProfileMethod::Series: return "series";
    case ProfileMethod::Oracle: return "oracle";
    case ProfileMethod::MonteCarlo: return "montecarlo";
  }
  return "unknown";
}

void DensityProfile::check() const {
  if (xs.size() != values.size()) throw Error(Errc::InvalidArgument, "profile size mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(values[i])) throw Error(Errc::InvalidArgument, "non-finite profile value");
    if (i > 0 && !(xs[i] > xs[i - 1])) throw Error(Errc::InvalidArgument, "profile grid not increasing");
  }
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) throw Error(Errc::InvalidArgument, "linear grid needs lo < hi and >= 2 points");
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) xs[i] = lo + (hi - lo) * i / (points - 1);
  xs.back() = hi;
  return xs;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo > 0.0) || !(hi > lo)) {
    throw Error(Errc::InvalidArgument, "log grid needs 0 < lo < hi and >= 2 points");
  }
  std::vector<double> xs(static_cast<std::size_t>(points));
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < points; ++i) xs[i] = lo * std::exp(ratio * i / (points - 1));
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

}  // namespace gwtail
