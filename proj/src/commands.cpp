#include "gwtail/commands.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "gwtail/schroeder.hpp"

namespace gwtail {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string display_name(const DistributionConfig& cfg) {
  return cfg.name.empty() ? "unnamed" : cfg.name;
}

// One-line CSV preamble: tool, version, command and its parameters.
class Header {
 public:
  Header(const DistributionConfig& cfg, std::string_view command) {
    line_ << "# gwtail " << GWTAIL_VERSION << ' ' << command << " config=" << display_name(cfg)
          << " p=[";
    auto c = cfg.probabilities;
    for (std::size_t j = 0; j < c.size(); ++j) line_ << (j ? "," : "") << format_double(c[j]);
    line_ << ']';
  }

  Header& add(std::string_view key, double v) {
    line_ << ' ' << key << '=' << format_double(v);
    return *this;
  }
  Header& add(std::string_view key, std::string_view v) {
    line_ << ' ' << key << '=' << v;
    return *this;
  }

  void write(std::ostream& out) const { out << line_.str() << '\n'; }

 private:
  std::ostringstream line_;
};

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

void write_profile(const DensityProfile& profile, std::string_view column, std::ostream& out) {
  out << "x," << column << '\n';
  for (std::size_t i = 0; i < profile.xs.size(); ++i) {
    out << format_double(profile.xs[i]) << ',' << format_double(profile.values[i]) << '\n';
  }
}

int density_impl(const DistributionConfig& cfg, const DensityOptions& opts, std::string_view command,
                 std::ostream& out) {
  const auto dist = cfg.distribution();
  const auto xs = opts.grid.make();
  PiEvaluator ev(dist);

  Header header(cfg, command);
  header.add("method", opts.method == DensityMethod::Oracle ? "oracle" : "series")
      .add("x_min", opts.grid.x_min)
      .add("x_max", opts.grid.x_max)
      .add("points", opts.grid.points)
      .add("grid", opts.grid.log_grid ? "log" : "linear");

  if (opts.method == DensityMethod::Oracle) {
    auto profile = oracle_profile(ev, xs);
    header.write(out);
    write_profile(profile, "p_oracle", out);
  } else {
    TailExpansion expansion(ev, opts.spectrum);
    auto profile = series_profile(expansion, xs, opts.n_terms);
    header.add("n_terms", opts.n_terms).add("m_max", opts.spectrum.m_max).add("samples", opts.spectrum.samples);
    header.write(out);
    write_profile(profile, "p_series", out);
  }
  return kExitOk;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exit_code_for(const Error& err) noexcept {
  return category(err.code()) == ErrorCategory::Config ? kExitConfigError : kExitNumericalError;
}

std::vector<double> GridOptions::make() const {
  if (points < 2) throw Error(Errc::InvalidArgument, "grid needs at least 2 points");
  if (!(x_min < x_max) || x_min < 0.0) throw Error(Errc::InvalidArgument, "grid needs 0 <= x_min < x_max");
  if (log_grid) return gwtail::log_grid(x_min, x_max, points);
  return linear_grid(x_min, x_max, points);
}

int cmd_info(const DistributionConfig& cfg, const InfoOptions& opts, std::ostream& out) {
  const auto dist = cfg.distribution();
  PiEvaluator ev(dist);
  const auto spec = spectrum(ev, opts.spectrum);
  const auto decay = check_strong_decay(ev, 1e4, 1e-2);

  ordered_json doc;
  doc["name"] = display_name(cfg);
  doc["version"] = GWTAIL_VERSION;
  doc["p"] = cfg.probabilities;
  doc["E"] = dist.mean();
  doc["alpha"] = dist.alpha();
  doc["beta"] = dist.beta();
  doc["log_ratio"] = dist.log_ratio();
  doc["kappa"] = kappa_coeffs(dist, opts.kappa_count);

  ordered_json theta;
  const int count = std::min(opts.theta_count, spec.m_max() + 1);
  for (int n = 1; n <= std::min(2, spec.n_max()); ++n) {
    ordered_json row = ordered_json::array();
    for (int m = 0; m < count; ++m) row.push_back(complex_json(spec.theta(n, m)));
    theta["n" + std::to_string(n)] = row;
  }
  doc["theta"] = theta;
  doc["spectrum"] = {{"window_start", spec.window_start},
                     {"samples", spec.samples_per_period},
                     {"line_shift", spec.line_shift},
                     {"doubling_delta", spec.doubling_delta},
                     {"tail_ratio", spec.tail_ratio},
                     {"real_axis_residual", spec.real_axis_residual}};
  doc["hypotheses"] = {{"log_ratio_below_minus_one", decay.ratio_ok},
                       {"strong_decay", decay.decay_ok},
                       {"decay_max_last_decade", decay.max_last_decade},
                       {"decay_fitted_slope", decay.fitted_slope},
                       {"julia_window_r5", julia_precondition(ev, 5.0)}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_validate(const DistributionConfig& cfg, const AcceptanceOptions& opts, std::ostream& out) {
  const auto dist = cfg.distribution();
  AcceptanceSuite suite(dist, opts);
  ordered_json checks = ordered_json::array();
  bool all = true;
  for (const auto& r : suite.run_all()) {
    ordered_json measures = ordered_json::object();
    for (const auto& [k, v] : r.measures) measures[k] = v;
    checks.push_back({{"criterion", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"seconds", r.seconds},
                      {"time_limit", r.time_limit},
                      {"measures", measures},
                      {"note", r.note}});
    all = all && r.passed;
  }
  ordered_json doc;
  doc["name"] = display_name(cfg);
  doc["version"] = GWTAIL_VERSION;
  doc["passed"] = all;
  doc["checks"] = checks;
  out << doc.dump(2) << '\n';
  return all ? kExitOk : kExitValidationFailed;
}

int cmd_coeffs(const DistributionConfig& cfg, const SpectrumOptions& opts, std::ostream& out) {
  const auto dist = cfg.distribution();
  PiEvaluator ev(dist);
  const auto spec = spectrum(ev, opts);

  ordered_json rows = ordered_json::array();
  for (int n = 1; n <= spec.n_max(); ++n) {
    ordered_json ms = ordered_json::array();
    ordered_json re = ordered_json::array();
    ordered_json im = ordered_json::array();
    for (int m = -spec.m_max(); m <= spec.m_max(); ++m) {
      ms.push_back(m);
      re.push_back(spec.theta(n, m).real());
      im.push_back(spec.theta(n, m).imag());
    }
    rows.push_back({{"n", n}, {"m", ms}, {"re", re}, {"im", im}});
  }
  ordered_json doc;
  doc["name"] = display_name(cfg);
  doc["version"] = GWTAIL_VERSION;
  doc["metadata"] = {{"window_start", spec.window_start},
                     {"samples", spec.samples_per_period},
                     {"line_shift", spec.line_shift},
                     {"doubling_delta", spec.doubling_delta},
                     {"tail_ratio", spec.tail_ratio},
                     {"tail_warning", spec.tail_warning},
                     {"real_axis_residual", spec.real_axis_residual}};
  doc["rows"] = rows;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_density(const DistributionConfig& cfg, const DensityOptions& opts, std::ostream& out) {
  return density_impl(cfg, opts, "density", out);
}

int cmd_asymptotic(const DistributionConfig& cfg, const DensityOptions& opts, std::ostream& out) {
  auto series = opts;
  series.method = DensityMethod::Series;
  return density_impl(cfg, series, "asymptotic", out);
}

int cmd_vn(const DistributionConfig& cfg, const VnOptions& opts, std::ostream& out) {
  const auto dist = cfg.distribution();
  if (opts.points < 1) throw Error(Errc::InvalidArgument, "vn needs at least one point");
  if (!(opts.x0 > 0.0)) throw Error(Errc::NonPositiveX, "x0 must be positive");
  PiEvaluator ev(dist);
  TailExpansion expansion(ev, opts.spectrum);
  if (opts.n < 1 || opts.n > expansion.n_max()) {
    throw Error(Errc::TruncationExceeded, "n must lie in 1.." + std::to_string(expansion.n_max()));
  }
  const auto& term = expansion.term(opts.n);

  Header(cfg, "vn").add("n", opts.n).add("x0", opts.x0).add("points", opts.points).write(out);
  out << "x,v_n\n";
  // one multiplicative period [x0, x0 E), uniform in log x
  for (int i = 0; i < opts.points; ++i) {
    const double x = opts.x0 * std::pow(dist.mean(), static_cast<double>(i) / opts.points);
    out << format_double(x) << ',' << format_double(v_n(term, x)) << '\n';
  }
  return kExitOk;
}

int cmd_simulate(const DistributionConfig& cfg, const SimulateOptions& opts, std::ostream& out) {
  const auto dist = cfg.distribution();
  if (!(opts.x_max > 0.0)) throw Error(Errc::InvalidArgument, "x_max must be positive");
  if (opts.profile_points < 2) throw Error(Errc::InvalidArgument, "profile needs at least 2 points");
  const auto samples = simulate_W(dist, opts.sim);

  PiEvaluator ev(dist);
  const auto xs = linear_grid(0.0, opts.x_max, opts.profile_points);
  const auto profile = oracle_profile(ev, xs);
  const auto report = histogram_compare(samples, profile, opts.bins, 0.0, opts.x_max);

  Header(cfg, "simulate")
      .add("samples", static_cast<double>(opts.sim.samples))
      .add("generations", opts.sim.generations)
      .add("seed", static_cast<double>(opts.sim.seed))
      .add("bins", opts.bins)
      .add("x_max", opts.x_max)
      .write(out);
  out << "x_lo,x_hi,freq,expected\n";
  for (const auto& b : report.bins) {
    out << format_double(b.lo) << ',' << format_double(b.hi) << ',' << format_double(b.freq) << ','
        << format_double(b.expected) << '\n';
  }
  if (opts.check && report.max_abs_diff > opts.tolerance) return kExitValidationFailed;
  return kExitOk;
}

int cmd_julia(const DistributionConfig& cfg, const JuliaOptions& opts, std::ostream& out) {
  const auto dist = cfg.distribution();
  const auto raster = julia_escape_grid(dist, opts.window, opts.width, opts.height, opts.max_iter);
  if (opts.format == RasterFormat::Pgm) {
    out << "P2\n";
    out << "# gwtail " << GWTAIL_VERSION << " julia config=" << display_name(cfg)
        << " re=[" << format_double(opts.window.re_min) << ',' << format_double(opts.window.re_max)
        << "] im=[" << format_double(opts.window.im_min) << ',' << format_double(opts.window.im_max)
        << "] max_iter=" << opts.max_iter << '\n';
    out << raster.width << ' ' << raster.height << '\n' << raster.max_iter << '\n';
    for (int row = 0; row < raster.height; ++row) {
      for (int col = 0; col < raster.width; ++col) out << (col ? " " : "") << raster.at(col, row);
      out << '\n';
    }
    return kExitOk;
  }
  Header(cfg, "julia")
      .add("re_min", opts.window.re_min)
      .add("re_max", opts.window.re_max)
      .add("im_min", opts.window.im_min)
      .add("im_max", opts.window.im_max)
      .add("width", opts.width)
      .add("height", opts.height)
      .add("max_iter", opts.max_iter)
      .add("escape_radius", raster.escape_radius)
      .write(out);
  out << "x,y,escape_iter\n";
  for (int row = 0; row < raster.height; ++row) {
    for (int col = 0; col < raster.width; ++col) {
      const cplx c = raster.pixel_center(col, row);
      out << format_double(c.real()) << ',' << format_double(c.imag()) << ',' << raster.at(col, row) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace gwtail
