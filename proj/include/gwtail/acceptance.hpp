#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gwtail/asymptotics.hpp"
#include "gwtail/offspring.hpp"
#include "gwtail/poincare.hpp"

namespace gwtail {

inline constexpr int kCriterionCount = 12;

/// Outcome of one acceptance criterion.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  /// Runtime budget in seconds; 0 when the criterion has none. A check that
  /// overruns its budget fails.
  double time_limit = 0.0;
  /// Measured quantities, in a fixed order.
  std::vector<std::pair<std::string, double>> measures;
  std::string note;
};

struct AcceptanceOptions {
  /// Criteria to run; empty means all of 1..12.
  std::vector<int> criteria;
  std::int64_t mc_samples = 1'000'000;
  int mc_generations = 25;
  std::uint64_t mc_seed = 42;
};

/// Runs acceptance criteria against one distribution. The Poincare evaluator
/// and the tail expansion are built once and shared by all checks.
class AcceptanceSuite {
 public:
  explicit AcceptanceSuite(const OffspringDistribution& dist, AcceptanceOptions options = {});

  CheckResult run(int id) const;
  std::vector<CheckResult> run_all() const;

  static std::string_view criterion_name(int id);

 private:
  const TailExpansion& tail_expansion() const;

  CheckResult functional_equations() const;
  CheckResult closed_forms() const;
  CheckResult inverse_composition() const;
  CheckResult main_identity() const;
  CheckResult representation_agreement() const;
  CheckResult periodicity() const;
  CheckResult density_moments() const;
  CheckResult left_tail() const;
  CheckResult monte_carlo() const;
  CheckResult gamma_quality() const;
  CheckResult hypotheses() const;
  CheckResult determinism() const;

  OffspringDistribution dist_;
  AcceptanceOptions options_;
  PiEvaluator ev_;
  mutable std::unique_ptr<TailExpansion> expansion_;
};

}  // namespace gwtail
