#include "gwtail/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "gwtail/error.hpp"

namespace gwtail {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double one_sample(std::span<const double> probs, double scale, const SimulationConfig& cfg,
                  std::uint64_t index) {
  Engine rng = sample_engine(cfg.seed, index);
  std::int64_t z = 1;
  for (int t = 0; t < cfg.generations; ++t) {
    z = multinomial_step(probs, z, rng);
    if (z > cfg.population_cap) {
      throw Error(Errc::PopulationCapExceeded,
                  "Z_" + std::to_string(t + 1) + " = " + std::to_string(z) + " exceeds the cap");
    }
  }
  return static_cast<double>(z) * scale;
}

void check_simulation(const SimulationConfig& cfg) {
  if (cfg.samples < 1 || cfg.generations < 1) {
    throw Error(Errc::InvalidArgument, "simulation needs samples >= 1 and generations >= 1");
  }
}

DensityProfile make_oracle_profile(std::span<const double> xs, const OscillatoryOptions& options) {
  DensityProfile profile;
  profile.method = ProfileMethod::Oracle;
  profile.xs.assign(xs.begin(), xs.end());
  profile.values.assign(xs.size(), 0.0);
  std::ostringstream cycles;
  cycles << options.cycles;
  profile.metadata = {{"cycles", cycles.str()}};
  for (double x : xs) {
    if (x < 0.0) throw Error(Errc::NonPositiveX, "oracle profile needs x >= 0");
  }
  return profile;
}

}  // namespace

double oracle_density(const PiEvaluator& ev, double x, const OscillatoryOptions& options) {
  if (!(x > 0.0)) throw Error(Errc::NonPositiveX, "oracle_density needs x > 0");
  using namespace std::complex_literals;
  const SmoothIntegrand h = [&](double y) -> std::pair<cplx, cplx> {
    const auto pi = ev.eval_with_derivative(cplx{0.0, y});
    return {pi.value, 1i * pi.derivative};
  };
  // Pi(-iy) = conj Pi(iy), so the full line is twice the half line.
  return fourier_half_line(h, x, options).value.real() / std::numbers::pi;
}

DensityProfile oracle_profile_serial(const PiEvaluator& ev, std::span<const double> xs,
                                     const OscillatoryOptions& options) {
  DensityProfile profile = make_oracle_profile(xs, options);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] > 0.0) profile.values[i] = oracle_density(ev, xs[i], options);
  }
  profile.check();
  return profile;
}

DensityProfile oracle_profile(const PiEvaluator& ev, std::span<const double> xs,
                              const OscillatoryOptions& options) {
  DensityProfile profile = make_oracle_profile(xs, options);
  bool failed = false;
  Errc code = Errc::SlowDecay;
  std::string message;
  const auto count = static_cast<long long>(xs.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    if (xs[i] <= 0.0) continue;
    try {
      profile.values[i] = oracle_density(ev, xs[i], options);
    } catch (const Error& err) {
#pragma omp critical(gwtail_oracle_error)
      {
        failed = true;
        code = err.code();
        message = err.what();
      }
    }
  }
  if (failed) throw Error(code, message);
  profile.check();
  return profile;
}

Engine sample_engine(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  const std::uint64_t a = splitmix64(state);
  state = a ^ (index * 0xD1B54A32D192ED03ULL);
  const std::uint64_t b = splitmix64(state);
  return Engine(b);
}

std::int64_t multinomial_step(std::span<const double> probs, std::int64_t population, Engine& rng) {
  std::int64_t remaining = population;
  double mass = 1.0;
  std::int64_t next = 0;
  const int d = static_cast<int>(probs.size()) - 1;
  for (int j = 1; j <= d && remaining > 0; ++j) {
    std::int64_t count = remaining;
    if (j < d) {
      const double q = std::clamp(probs[j] / mass, 0.0, 1.0);
      if (q <= 0.0) count = 0;
      else if (q < 1.0) count = std::binomial_distribution<std::int64_t>(remaining, q)(rng);
    }
    next += static_cast<std::int64_t>(j) * count;
    remaining -= count;
    mass -= probs[j];
  }
  return next;
}

std::vector<double> simulate_W_serial(const OffspringDistribution& dist, const SimulationConfig& cfg) {
  check_simulation(cfg);
  const double scale = std::pow(dist.mean(), -cfg.generations);
  std::vector<double> out(static_cast<std::size_t>(cfg.samples));
  for (std::int64_t i = 0; i < cfg.samples; ++i) {
    out[i] = one_sample(dist.coefficients(), scale, cfg, static_cast<std::uint64_t>(i));
  }
  return out;
}

std::vector<double> simulate_W(const OffspringDistribution& dist, const SimulationConfig& cfg) {
  check_simulation(cfg);
  const double scale = std::pow(dist.mean(), -cfg.generations);
  std::vector<double> out(static_cast<std::size_t>(cfg.samples));
  const auto probs = dist.coefficients();
  bool failed = false;
  std::string message;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < cfg.samples; ++i) {
    try {
      out[i] = one_sample(probs, scale, cfg, static_cast<std::uint64_t>(i));
    } catch (const Error& err) {
#pragma omp critical(gwtail_sim_error)
      {
        failed = true;
        message = err.what();
      }
    }
  }
  if (failed) throw Error(Errc::PopulationCapExceeded, message);
  return out;
}

Histogram make_histogram(std::span<const double> samples, double lo, double hi, int bins) {
  if (bins < 1) throw Error(Errc::InvalidArgument, "need at least one bin");
  if (!(hi > lo)) throw Error(Errc::SupportMismatch, "empty histogram range");
  Histogram hist{lo, hi, std::vector<double>(static_cast<std::size_t>(bins), 0.0),
                 static_cast<std::int64_t>(samples.size())};
  std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
  const double width = (hi - lo) / bins;
  for (double w : samples) {
    if (w < lo || w >= hi) continue;
    const int k = std::min(bins - 1, static_cast<int>((w - lo) / width));
    ++counts[k];
  }
  const double total = samples.empty() ? 1.0 : static_cast<double>(samples.size());
  for (int k = 0; k < bins; ++k) hist.mass[k] = static_cast<double>(counts[k]) / total;
  return hist;
}

Histogram profile_masses(const DensityProfile& profile, double lo, double hi, int bins) {
  if (bins < 1) throw Error(Errc::InvalidArgument, "need at least one bin");
  if (!(hi > lo)) throw Error(Errc::SupportMismatch, "empty histogram range");
  const auto& xs = profile.xs;
  const auto& ys = profile.values;
  if (xs.size() < 2 || xs.front() > lo || xs.back() < hi) {
    throw Error(Errc::SupportMismatch, "profile does not cover the histogram range");
  }
  auto value_at = [&](double x) {
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t i = std::clamp<std::size_t>(static_cast<std::size_t>(it - xs.begin()), 1, xs.size() - 1);
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
  };
  // Trapezoid on the profile nodes inside [a, b] plus the interpolated ends.
  auto mass = [&](double a, double b) {
    double acc = 0.0;
    double prev_x = a;
    double prev_y = value_at(a);
    for (auto it = std::upper_bound(xs.begin(), xs.end(), a); it != xs.end() && *it < b; ++it) {
      const double y = ys[static_cast<std::size_t>(it - xs.begin())];
      acc += 0.5 * (*it - prev_x) * (y + prev_y);
      prev_x = *it;
      prev_y = y;
    }
    acc += 0.5 * (b - prev_x) * (value_at(b) + prev_y);
    return acc;
  };
  Histogram hist{lo, hi, std::vector<double>(static_cast<std::size_t>(bins), 0.0), 0};
  for (int k = 0; k < bins; ++k) hist.mass[k] = mass(hist.edge(k), hist.edge(k + 1));
  return hist;
}

HistogramReport histogram_compare(const Histogram& empirical, const DensityProfile& profile) {
  if (empirical.bins() < 10) throw Error(Errc::InvalidArgument, "need at least 10 bins");
  const Histogram expected = profile_masses(profile, empirical.lo, empirical.hi, empirical.bins());
  HistogramReport report;
  for (int k = 0; k < empirical.bins(); ++k) {
    const double f = empirical.mass[k];
    const double e = expected.mass[k];
    double z = 0.0;
    if (empirical.sample_count > 0) {
      // floor at one expected sample so empty far-tail bins stay finite
      const double n = static_cast<double>(empirical.sample_count);
      const double var = std::max(e * (1.0 - e), 1.0 / n) / n;
      z = (f - e) / std::sqrt(var);
    }
    report.bins.push_back({empirical.edge(k), empirical.edge(k + 1), f, e, z});
    report.max_abs_diff = std::max(report.max_abs_diff, std::abs(f - e));
    report.max_abs_z = std::max(report.max_abs_z, std::abs(z));
  }
  return report;
}

HistogramReport histogram_compare(std::span<const double> samples, const DensityProfile& profile,
                                  int bins, double lo, double hi) {
  if (bins < 10) throw Error(Errc::InvalidArgument, "need at least 10 bins");
  return histogram_compare(make_histogram(samples, lo, hi, bins), profile);
}

}  // namespace gwtail
