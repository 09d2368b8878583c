// Command-line front end: parses flags, loads the config and dispatches to
// the gwtail::cmd_* functions.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>

#include <omp.h>

#include <CLI11.hpp>

#include "gwtail/commands.hpp"

namespace {

struct Common {
  std::string config;
  std::string out;
  int threads = 0;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--config", common.config, "distribution config (JSON)")->required()->check(CLI::ExistingFile);
  sub->add_option("--out", common.out, "output file (default stdout)");
  sub->add_option("--threads", common.threads, "OpenMP threads (default: runtime setting)")->check(CLI::NonNegativeNumber);
}

void add_grid(CLI::App* sub, gwtail::GridOptions& grid) {
  sub->add_option("--x-min", grid.x_min, "smallest x")->capture_default_str();
  sub->add_option("--x-max", grid.x_max, "largest x")->capture_default_str();
  sub->add_option("--points", grid.points, "grid points")->capture_default_str()->check(CLI::Range(2, 1'000'000));
  sub->add_flag("--log-grid", grid.log_grid, "geometric grid instead of linear");
}

void add_spectrum(CLI::App* sub, gwtail::SpectrumOptions& spec) {
  sub->add_option("--m-max", spec.m_max, "harmonic cutoff")->capture_default_str()->check(CLI::Range(0, 4096));
  sub->add_option("--samples", spec.samples, "K samples per period (power of two)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density and left-tail asymptotics of the Galton-Watson martingale limit"};
  app.set_version_flag("--version", GWTAIL_VERSION);
  app.require_subcommand(1);

  Common common;
  std::function<int(const gwtail::DistributionConfig&, std::ostream&)> action;

  gwtail::InfoOptions info;
  auto* info_cmd = app.add_subcommand("info", "constants, kappa, theta and hypothesis flags (JSON)");
  add_common(info_cmd, common);
  info_cmd->add_option("--kappa", info.kappa_count, "number of kappa coefficients")->capture_default_str()->check(CLI::Range(1, 64));
  info_cmd->callback([&] { action = [&](auto& cfg, auto& out) { return gwtail::cmd_info(cfg, info, out); }; });

  gwtail::AcceptanceOptions accept;
  auto* validate_cmd = app.add_subcommand("validate", "run the acceptance checks (JSON, exit 1 on failure)");
  add_common(validate_cmd, common);
  validate_cmd->add_option("--criterion", accept.criteria, "restrict to these criteria")->check(CLI::Range(1, gwtail::kCriterionCount));
  validate_cmd->add_option("--mc-samples", accept.mc_samples, "Monte Carlo sample count")->capture_default_str();
  validate_cmd->add_option("--seed", accept.mc_seed, "Monte Carlo seed")->capture_default_str();
  validate_cmd->callback([&] { action = [&](auto& cfg, auto& out) { return gwtail::cmd_validate(cfg, accept, out); }; });

  gwtail::SpectrumOptions coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Fourier spectrum of K and its powers (JSON)");
  add_common(coeffs_cmd, common);
  add_spectrum(coeffs_cmd, coeffs);
  coeffs_cmd->add_option("--n-max", coeffs.n_max, "number of powers")->capture_default_str()->check(CLI::Range(1, 64));
  coeffs_cmd->callback([&] { action = [&](auto& cfg, auto& out) { return gwtail::cmd_coeffs(cfg, coeffs, out); }; });

  gwtail::DensityOptions density;
  std::string method = "oracle";
  auto* density_cmd = app.add_subcommand("density", "density profile p(x) (CSV)");
  add_common(density_cmd, common);
  add_grid(density_cmd, density.grid);
  add_spectrum(density_cmd, density.spectrum);
  density_cmd->add_option("--method", method, "oracle or series")->capture_default_str()->check(CLI::IsMember({"oracle", "series"}));
  density_cmd->add_option("--n-terms", density.n_terms, "series terms")->capture_default_str()->check(CLI::Range(1, 8));
  density_cmd->callback([&] {
    density.method = method == "series" ? gwtail::DensityMethod::Series : gwtail::DensityMethod::Oracle;
    action = [&](auto& cfg, auto& out) { return gwtail::cmd_density(cfg, density, out); };
  });

  gwtail::DensityOptions asymptotic;
  auto* asym_cmd = app.add_subcommand("asymptotic", "truncated left-tail series (CSV)");
  add_common(asym_cmd, common);
  add_grid(asym_cmd, asymptotic.grid);
  add_spectrum(asym_cmd, asymptotic.spectrum);
  asym_cmd->add_option("--n-terms", asymptotic.n_terms, "series terms")->capture_default_str()->check(CLI::Range(1, 8));
  asym_cmd->callback([&] { action = [&](auto& cfg, auto& out) { return gwtail::cmd_asymptotic(cfg, asymptotic, out); }; });

  gwtail::VnOptions vn;
  auto* vn_cmd = app.add_subcommand("vn", "periodic amplitude V_n over one period [x0, x0 E) (CSV)");
  add_common(vn_cmd, common);
  add_spectrum(vn_cmd, vn.spectrum);
  vn_cmd->add_option("--n", vn.n, "term index")->capture_default_str()->check(CLI::Range(1, 8));
  vn_cmd->add_option("--points", vn.points, "points per period")->capture_default_str()->check(CLI::Range(1, 1'000'000));
  vn_cmd->add_option("--x0", vn.x0, "period start")->capture_default_str()->check(CLI::PositiveNumber);
  vn_cmd->callback([&] { action = [&](auto& cfg, auto& out) { return gwtail::cmd_vn(cfg, vn, out); }; });

  gwtail::SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo histogram of W against oracle bin masses (CSV)");
  add_common(sim_cmd, common);
  sim_cmd->add_option("--samples", sim.sim.samples, "number of samples")->capture_default_str()->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000'000}));
  sim_cmd->add_option("--generations", sim.sim.generations, "generations T")->capture_default_str()->check(CLI::Range(1, 200));
  sim_cmd->add_option("--seed", sim.sim.seed, "random seed")->capture_default_str();
  sim_cmd->add_option("--bins", sim.bins, "histogram bins")->capture_default_str()->check(CLI::Range(10, 100000));
  sim_cmd->add_option("--x-max", sim.x_max, "histogram range [0, x-max]")->capture_default_str()->check(CLI::PositiveNumber);
  sim_cmd->add_flag("--check", sim.check, "exit 1 if a bin deviates by more than --tolerance");
  sim_cmd->add_option("--tolerance", sim.tolerance, "bin tolerance for --check")->capture_default_str();
  sim_cmd->callback([&] { action = [&](auto& cfg, auto& out) { return gwtail::cmd_simulate(cfg, sim, out); }; });

  gwtail::JuliaOptions julia;
  std::string format = "csv";
  auto* julia_cmd = app.add_subcommand("julia", "escape-time raster of the filled Julia set of P");
  add_common(julia_cmd, common);
  julia_cmd->add_option("--re-min", julia.window.re_min)->capture_default_str();
  julia_cmd->add_option("--re-max", julia.window.re_max)->capture_default_str();
  julia_cmd->add_option("--im-min", julia.window.im_min)->capture_default_str();
  julia_cmd->add_option("--im-max", julia.window.im_max)->capture_default_str();
  julia_cmd->add_option("--width", julia.width)->capture_default_str()->check(CLI::Range(1, 4096));
  julia_cmd->add_option("--height", julia.height)->capture_default_str()->check(CLI::Range(1, 4096));
  julia_cmd->add_option("--max-iter", julia.max_iter)->capture_default_str()->check(CLI::Range(1, 1'000'000));
  julia_cmd->add_option("--format", format, "csv or pgm")->capture_default_str()->check(CLI::IsMember({"csv", "pgm"}));
  julia_cmd->callback([&] {
    julia.format = format == "pgm" ? gwtail::RasterFormat::Pgm : gwtail::RasterFormat::Csv;
    action = [&](auto& cfg, auto& out) { return gwtail::cmd_julia(cfg, julia, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gwtail::kExitConfigError;
  }

  if (common.threads > 0) omp_set_num_threads(common.threads);

  try {
    const auto cfg = gwtail::load_config(common.config);
    if (common.out.empty()) return action(cfg, std::cout);
    std::ofstream file(common.out);
    if (!file) throw gwtail::Error(gwtail::Errc::ConfigError, "cannot write " + common.out);
    return action(cfg, file);
  } catch (const gwtail::Error& err) {
    std::cerr << "gwtail: " << err.what() << '\n';
    return gwtail::exit_code_for(err);
  } catch (const std::exception& err) {
    std::cerr << "gwtail: " << err.what() << '\n';
    return gwtail::kExitNumericalError;
  }
}
