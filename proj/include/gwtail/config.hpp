#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gwtail/offspring.hpp"

namespace gwtail {

/// Contents of a distribution config file:
///
///   {"name": "caseA", "p": [0, 0.1, 0.5, 0.4], "tolerances": {"normalization": 1e-12}}
///
/// Only "p" is required. Unknown keys are rejected with ConfigError.
struct DistributionConfig {
  std::string name;
  std::vector<double> probabilities;
  double normalization_tol = kDefaultNormalizationTol;

  OffspringDistribution distribution() const;
};

DistributionConfig parse_config(std::string_view json_text);
DistributionConfig load_config(const std::filesystem::path& path);

}  // namespace gwtail
