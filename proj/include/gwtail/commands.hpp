#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gwtail/acceptance.hpp"
#include "gwtail/asymptotics.hpp"
#include "gwtail/config.hpp"
#include "gwtail/error.hpp"
#include "gwtail/kmg.hpp"
#include "gwtail/oracle.hpp"
#include "gwtail/poincare.hpp"

namespace gwtail {

/// Process exit codes used by the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailed = 1,
  kExitConfigError = 2,
  kExitNumericalError = 3,
};

/// Exit code for an exception escaping a command.
int exit_code_for(const Error& err) noexcept;

struct InfoOptions {
  int kappa_count = 8;
  /// theta_m for m = 0..theta_count-1 of rows 1 and 2
  int theta_count = 8;
  SpectrumOptions spectrum{};
};

struct GridOptions {
  double x_min = 0.01;
  double x_max = 4.0;
  int points = 200;
  bool log_grid = false;

  std::vector<double> make() const;
};

enum class DensityMethod { Oracle, Series };

struct DensityOptions {
  DensityMethod method = DensityMethod::Oracle;
  int n_terms = kDefaultTerms;
  GridOptions grid{};
  SpectrumOptions spectrum{};
};

struct VnOptions {
  int n = 1;
  int points = 64;
  double x0 = 1.0;
  SpectrumOptions spectrum{};
};

struct SimulateOptions {
  SimulationConfig sim{};
  int bins = 50;
  double x_max = 4.0;
  /// Oracle grid points used for the expected bin masses.
  int profile_points = 401;
  bool check = false;
  double tolerance = 0.01;
};

enum class RasterFormat { Csv, Pgm };

struct JuliaOptions {
  ComplexWindow window{};
  int width = 256;
  int height = 256;
  int max_iter = 100;
  RasterFormat format = RasterFormat::Csv;
};

// Every command writes to `out` and returns a process exit code. Library
// errors propagate as gwtail::Error.

int cmd_info(const DistributionConfig& cfg, const InfoOptions& opts, std::ostream& out);
int cmd_validate(const DistributionConfig& cfg, const AcceptanceOptions& opts, std::ostream& out);
int cmd_coeffs(const DistributionConfig& cfg, const SpectrumOptions& opts, std::ostream& out);
int cmd_density(const DistributionConfig& cfg, const DensityOptions& opts, std::ostream& out);
/// cmd_density with the series method.
int cmd_asymptotic(const DistributionConfig& cfg, const DensityOptions& opts, std::ostream& out);
int cmd_vn(const DistributionConfig& cfg, const VnOptions& opts, std::ostream& out);
/// Returns kExitValidationFailed when opts.check is set and the histogram
/// deviates from the oracle bin masses by more than opts.tolerance.
int cmd_simulate(const DistributionConfig& cfg, const SimulateOptions& opts, std::ostream& out);
int cmd_julia(const DistributionConfig& cfg, const JuliaOptions& opts, std::ostream& out);

/// %.17g, enough digits to round-trip a double.
std::string format_double(double v);

}  // namespace gwtail
