#include "gwtail/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "gwtail/commands.hpp"
#include "gwtail/error.hpp"
#include "gwtail/oracle.hpp"
#include "gwtail/quadrature.hpp"
#include "gwtail/schroeder.hpp"
#include "gwtail/special.hpp"

namespace gwtail {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::string_view, kCriterionCount> kNames = {
    "functional equation residuals",
    "closed-form coefficients",
    "inverse composition",
    "main identity",
    "spectral vs contour amplitudes",
    "multiplicative periodicity",
    "density normalization and mean",
    "left-tail remainder decay",
    "Monte Carlo agreement",
    "Gamma function quality",
    "hypothesis diagnostics",
    "command determinism",
};

constexpr std::array<double, kCriterionCount> kTimeLimits = {5, 1, 0, 60, 60, 0, 60, 120, 120, 0, 0, 0};

cplx uniform_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

// log cosh for large arguments without overflow
double log_cosh(double t) {
  const double a = std::abs(t);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

DistributionConfig config_of(const OffspringDistribution& dist) {
  DistributionConfig cfg;
  cfg.name = "acceptance";
  auto c = dist.coefficients();
  cfg.probabilities.assign(c.begin(), c.end());
  return cfg;
}

}  // namespace

AcceptanceSuite::AcceptanceSuite(const OffspringDistribution& dist, AcceptanceOptions options)
    : dist_(dist), options_(std::move(options)), ev_(dist) {}

std::string_view AcceptanceSuite::criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) throw Error(Errc::InvalidArgument, "no such criterion");
  return kNames[static_cast<std::size_t>(id - 1)];
}

CheckResult AcceptanceSuite::run(int id) const {
  criterion_name(id);
  const auto start = Clock::now();
  CheckResult r;
  try {
    switch (id) {
      case 1: r = functional_equations(); break;
      case 2: r = closed_forms(); break;
      case 3: r = inverse_composition(); break;
      case 4: r = main_identity(); break;
      case 5: r = representation_agreement(); break;
      case 6: r = periodicity(); break;
      case 7: r = density_moments(); break;
      case 8: r = left_tail(); break;
      case 9: r = monte_carlo(); break;
      case 10: r = gamma_quality(); break;
      case 11: r = hypotheses(); break;
      default: r = determinism(); break;
    }
  } catch (const Error& err) {
    r.passed = false;
    r.note = err.what();
  }
  r.id = id;
  r.name = std::string(kNames[static_cast<std::size_t>(id - 1)]);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.time_limit = kTimeLimits[static_cast<std::size_t>(id - 1)];
  if (r.time_limit > 0.0 && r.seconds >= r.time_limit) {
    r.passed = false;
    r.note += (r.note.empty() ? "" : "; ") + std::string("runtime budget exceeded");
  }
  return r;
}

const TailExpansion& AcceptanceSuite::tail_expansion() const {
  if (!expansion_) expansion_ = std::make_unique<TailExpansion>(ev_);
  return *expansion_;
}

std::vector<CheckResult> AcceptanceSuite::run_all() const {
  std::vector<int> ids = options_.criteria;
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }
  std::vector<CheckResult> results;
  for (int id : ids) results.push_back(run(id));
  return results;
}

CheckResult AcceptanceSuite::functional_equations() const {
  CheckResult r;
  std::mt19937_64 rng(20240601);

  double phi_iter = 0.0;
  double phi_taylor = 0.0;
  const auto series = phi_series(dist_);
  for (int i = 0; i < 100; ++i) {
    const cplx z = uniform_in_disk(rng, 0.5);
    const cplx pz = dist_.eval(z);
    phi_iter = std::max(phi_iter, std::abs(phi_eval(dist_, pz) - dist_.p1() * phi_eval(dist_, z)));
    if (std::abs(z) <= series.trusted_radius) {
      phi_taylor = std::max(phi_taylor, std::abs(series(pz) - dist_.p1() * series(z)));
    }
  }

  double pi_res = 0.0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double rad = 100.0 * std::sqrt(u(rng));
    const double arg = std::numbers::pi * (u(rng) - 0.5);
    const cplx z = std::polar(rad, arg);
    pi_res = std::max(pi_res, std::abs(dist_.eval(ev_(z)) - ev_(dist_.mean() * z)));
  }

  r.measures = {{"phi_residual", phi_iter}, {"phi_series_residual", phi_taylor}, {"pi_residual", pi_res}};
  r.passed = phi_iter <= 1e-10 && phi_taylor <= 1e-10 && pi_res <= 1e-10;
  return r;
}

CheckResult AcceptanceSuite::closed_forms() const {
  CheckResult r;
  const double p1 = dist_.p1();
  const double p2 = dist_.p(2);
  const double p3 = dist_.p(3);
  const double e = dist_.mean();

  const auto kappa = kappa_coeffs(dist_, 3);
  const double k2 = p2 / (p1 * p1 - p1);
  const double k3 = (2.0 * p2 * k2 + p3) / (p1 * p1 * p1 - p1);
  const double err2 = relative_error(kappa[1], k2);
  const double err3 = relative_error(kappa[2], k3);

  // Pi''(0) by a central difference of the evaluator
  const double h = 1e-3;
  const double second = (ev_(cplx(h, 0.0)) - 2.0 * ev_(cplx(0.0, 0.0)) + ev_(cplx(-h, 0.0))).real() / (h * h);
  const double stated = dist_.eval(0.0, 2) / (e * e - e);
  const double from_mean = dist_.eval(1.0, 2) / (e * e - e);

  r.measures = {{"kappa2_rel_error", err2},
                {"kappa3_rel_error", err3},
                {"pi_second_derivative", second},
                {"stated_form_P2_at_0", stated},
                {"stated_form_error", std::abs(second - stated)},
                {"P2_at_1_form", from_mean},
                {"P2_at_1_form_error", std::abs(second - from_mean)}};
  r.passed = err2 <= 1e-12 && err3 <= 1e-12 && std::abs(second - stated) <= 1e-6;
  if (std::abs(second - stated) > 1e-6) {
    r.note = "Pi''(0) equals P''(1)/(E^2-E); the P''(0)/(E^2-E) form only agrees when P is quadratic";
  }
  return r;
}

CheckResult AcceptanceSuite::inverse_composition() const {
  CheckResult r;
  const auto inverse = phi_inverse_series(dist_);
  const double radius = 0.1 * inverse.trusted_radius;
  std::mt19937_64 rng(7);
  double res = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx z = uniform_in_disk(rng, radius);
    res = std::max(res, std::abs(phi_inverse_eval(inverse, phi_eval(dist_, z)) - z));
  }
  r.measures = {{"trusted_radius", inverse.trusted_radius}, {"max_residual", res}};
  r.passed = res <= 1e-9;
  return r;
}

CheckResult AcceptanceSuite::main_identity() const {
  CheckResult r;
  double worst_rel = 0.0;
  double worst_abs = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int m = -2; m <= 2; ++m) {
      const auto c = main_identity_check(dist_, m, n);
      worst_rel = std::max(worst_rel, c.rel_residual);
      worst_abs = std::max(worst_abs, c.abs_residual);
    }
  }
  r.measures = {{"max_rel_residual", worst_rel}, {"max_abs_residual", worst_abs}};
  r.passed = worst_rel <= 1e-6;
  r.note = "residual relative to max(1, |Gamma side|)";
  return r;
}

CheckResult AcceptanceSuite::representation_agreement() const {
  CheckResult r;
  const auto& expansion = tail_expansion();
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double x = 0.35 * std::pow(dist_.mean(), k / 5.0);
    for (int n = 1; n <= 3; ++n) {
      const double spectral = v_n(expansion.term(n), x);
      const double contour = v_n_contour_oracle(ev_, n, x);
      worst = std::max(worst, std::abs(spectral - contour));
    }
  }
  r.measures = {{"max_abs_difference", worst}};
  r.passed = worst <= 1e-5;
  return r;
}

CheckResult AcceptanceSuite::periodicity() const {
  CheckResult r;
  const auto& expansion = tail_expansion();
  const double e = dist_.mean();
  double contour = 0.0;
  double spectral = 0.0;
  for (double x : {0.9, 1.3}) {
    for (int n = 1; n <= 3; ++n) {
      contour = std::max(contour, std::abs(v_n_contour_oracle(ev_, n, x / e) - v_n_contour_oracle(ev_, n, x)));
      const double a = v_n(expansion.term(n), x / e);
      const double b = v_n(expansion.term(n), x);
      spectral = std::max(spectral, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
  }
  r.measures = {{"contour_max_difference", contour}, {"spectral_max_difference", spectral}};
  r.passed = contour <= 1e-6 && spectral <= 1e-12;
  return r;
}

CheckResult AcceptanceSuite::density_moments() const {
  CheckResult r;
  static constexpr std::array<double, 13> edges = {1e-3, 0.01, 0.1, 0.3, 0.6, 1.0, 1.5, 2.0,
                                                   3.0,  4.0,  6.0, 10.0, 20.0};
  // Fixed Gauss-Legendre panels. Adaptive refinement stalls on the oracle's
  // rounding floor where p is tiny, so the 20-point rule serves as the
  // convergence estimate instead.
  auto moments = [&](auto rule) {
    double mass = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      mass += rule.integrate([&](double x) { return oracle_density(ev_, x); }, edges[i], edges[i + 1]);
      mean += rule.integrate([&](double x) { return x * oracle_density(ev_, x); }, edges[i], edges[i + 1]);
    }
    return std::pair{mass, mean};
  };
  const auto [mass, mean] = moments(boost::math::quadrature::gauss<double, 30>());
  const auto [mass20, mean20] = moments(boost::math::quadrature::gauss<double, 20>());
  r.measures = {{"integral_p", mass},
                {"integral_xp", mean},
                {"rule_delta_p", std::abs(mass - mass20)},
                {"rule_delta_xp", std::abs(mean - mean20)}};
  r.passed = std::abs(mass - 1.0) <= 1e-4 && std::abs(mean - 1.0) <= 1e-3;
  return r;
}

CheckResult AcceptanceSuite::left_tail() const {
  CheckResult r;
  const auto& expansion = tail_expansion();
  std::array<std::array<double, 4>, 2> scaled{};
  std::array<std::array<double, 4>, 2> raw{};
  for (int j = 0; j < 4; ++j) {
    const double x = 0.4 * std::pow(dist_.mean(), -j);
    const double p = oracle_density(ev_, x);
    for (int N = 1; N <= 2; ++N) {
      const double rem = std::abs(p - density_series(expansion, x, N));
      raw[N - 1][j] = rem;
      scaled[N - 1][j] = rem / std::pow(x, dist_.alpha() + N * dist_.beta());
    }
  }
  bool ok = true;
  for (int N = 1; N <= 2; ++N) {
    const auto& s = scaled[N - 1];
    const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    const double spread = *lo > 0.0 ? *hi / *lo : INFINITY;
    r.measures.emplace_back("spread_N" + std::to_string(N), spread);
    for (int j = 0; j < 4; ++j) r.measures.emplace_back("scaled_N" + std::to_string(N) + "_j" + std::to_string(j), s[j]);
    ok = ok && spread <= 3.0;
  }
  r.measures.emplace_back("remainder_N1_j3", raw[0][3]);
  r.measures.emplace_back("remainder_N2_j3", raw[1][3]);
  r.passed = ok && raw[1][3] < raw[0][3];
  return r;
}

CheckResult AcceptanceSuite::monte_carlo() const {
  CheckResult r;
  SimulationConfig sim;
  sim.samples = options_.mc_samples;
  sim.generations = options_.mc_generations;
  sim.seed = options_.mc_seed;
  const auto samples = simulate_W(dist_, sim);
  double sum = 0.0;
  for (double w : samples) sum += w;
  const double mean = sum / static_cast<double>(samples.size());

  const auto xs = linear_grid(0.0, 4.0, 401);
  const auto profile = oracle_profile(ev_, xs);
  const auto report = histogram_compare(samples, profile, 50, 0.0, 4.0);
  r.measures = {{"sample_mean", mean}, {"max_bin_difference", report.max_abs_diff}, {"max_abs_z", report.max_abs_z}};
  r.passed = std::abs(mean - 1.0) <= 0.005 && report.max_abs_diff <= 0.01;
  return r;
}

CheckResult AcceptanceSuite::gamma_quality() const {
  CheckResult r;
  const double half = std::abs(gamma(cplx(0.5, 0.0)) - std::sqrt(std::numbers::pi));

  // the arguments entering the spectral amplitudes
  const int n_max = 8;
  const int m_max = 32;
  const double omega = 2.0 * std::numbers::pi / std::log(dist_.mean());
  double recurrence = 0.0;
  double reflection = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = -m_max; m <= m_max; ++m) {
      const cplx s(n * dist_.beta(), -omega * m);
      const cplx ratio = std::exp(log_gamma(s + 1.0) - std::log(s) - log_gamma(s));
      recurrence = std::max(recurrence, std::abs(ratio - 1.0));
      // |Gamma(1/2 + it)|^2 = pi / cosh(pi t) at the same heights
      const double t = s.imag();
      const double lhs = 2.0 * log_gamma(cplx(0.5, t)).real();
      const double rhs = std::log(std::numbers::pi) - log_cosh(std::numbers::pi * t);
      reflection = std::max(reflection, std::abs(lhs - rhs));
    }
  }
  r.measures = {{"gamma_half_error", half}, {"max_recurrence_residual", recurrence},
                {"max_reflection_residual", reflection}};
  r.passed = half <= 1e-12 && recurrence <= 1e-10 && reflection <= 1e-10;
  return r;
}

CheckResult AcceptanceSuite::hypotheses() const {
  CheckResult r;
  const bool window = julia_precondition(ev_, 5.0);
  const auto decay = check_strong_decay(ev_, 1e4, 1e-2);
  r.measures = {{"log_ratio", dist_.log_ratio()},
                {"julia_window_r5", window ? 1.0 : 0.0},
                {"decay_max_last_decade", decay.max_last_decade},
                {"decay_fitted_slope", decay.fitted_slope}};
  r.passed = dist_.log_ratio() < -1.0 && window;
  return r;
}

CheckResult AcceptanceSuite::determinism() const {
  CheckResult r;
  const auto cfg = config_of(dist_);
  auto twice = [](auto&& command) {
    std::ostringstream a;
    std::ostringstream b;
    command(a);
    command(b);
    return std::pair{a.str(), b.str()};
  };

  SimulateOptions sim;
  sim.sim.samples = 20'000;
  sim.profile_points = 101;
  const auto [s1, s2] = twice([&](std::ostream& out) { cmd_simulate(cfg, sim, out); });

  DensityOptions oracle;
  oracle.grid.points = 16;
  const auto [o1, o2] = twice([&](std::ostream& out) { cmd_density(cfg, oracle, out); });

  DensityOptions series = oracle;
  series.method = DensityMethod::Series;
  series.grid = {0.05, 1.0, 32, true};
  const auto [q1, q2] = twice([&](std::ostream& out) { cmd_density(cfg, series, out); });

  const bool sim_same = s1 == s2;
  const bool oracle_same = o1 == o2;
  const bool series_same = q1 == q2;
  r.measures = {{"simulate_identical", sim_same ? 1.0 : 0.0},
                {"density_oracle_identical", oracle_same ? 1.0 : 0.0},
                {"density_series_identical", series_same ? 1.0 : 0.0}};
  r.passed = sim_same && oracle_same && series_same;
  return r;
}

}  // namespace gwtail
