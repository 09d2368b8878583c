#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwtail {

enum class ProfileMethod { Series, Oracle, MonteCarlo };

std::string_view to_string(ProfileMethod method) noexcept;

/// Density values on a strictly increasing grid, with the parameters that
/// produced them.
struct DensityProfile {
  std::vector<double> xs;
  std::vector<double> values;
  ProfileMethod method = ProfileMethod::Oracle;
  std::vector<std::pair<std::string, std::string>> metadata;

  /// Throws InvalidArgument unless xs is strictly increasing, sizes match
  /// and every value is finite.
  void check() const;
};

std::vector<double> linear_grid(double lo, double hi, int points);
/// Geometric grid; requires 0 < lo < hi.
std::vector<double> log_grid(double lo, double hi, int points);

}  // namespace gwtail
