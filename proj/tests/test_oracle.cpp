#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cases.hpp"
#include "gwtail/error.hpp"
#include "gwtail/oracle.hpp"

TEST_CASE("oracle density reference values") {
  const gwtail::PiEvaluator a(testing::case_a());
  CHECK(gwtail::oracle_density(a, 0.4) == doctest::Approx(0.347189551956808).epsilon(1e-11));
  CHECK(gwtail::oracle_density(a, 1.0) == doctest::Approx(1.0459038769315).epsilon(1e-11));
  const gwtail::PiEvaluator b(testing::case_b());
  CHECK(gwtail::oracle_density(b, 0.4) == doctest::Approx(0.4096921143238).epsilon(1e-11));
}

TEST_CASE("oracle is stable under refining the quadrature") {
  const gwtail::PiEvaluator ev(testing::case_a());
  gwtail::OscillatoryOptions finer;
  finer.cycles *= 2.0;
  finer.panel_fraction = 0.5;
  for (double x : {0.1, 0.9, 3.0}) {
    CHECK(std::abs(gwtail::oracle_density(ev, x) - gwtail::oracle_density(ev, x, finer)) < 1e-8);
  }
}

TEST_CASE("oracle profile: parallel equals serial, zero at the origin") {
  const gwtail::PiEvaluator ev(testing::case_b());
  const auto xs = gwtail::linear_grid(0.0, 2.0, 9);
  const auto par = gwtail::oracle_profile(ev, xs);
  const auto ser = gwtail::oracle_profile_serial(ev, xs);
  CHECK(par.values == ser.values);
  CHECK(par.values[0] == 0.0);
}

TEST_CASE("multinomial step keeps the mean growth") {
  const auto a = testing::case_a();
  auto probs = a.coefficients();
  double total = 0.0;
  const int draws = 10'000;
  for (int i = 0; i < draws; ++i) {
    auto rng = gwtail::sample_engine(5, static_cast<std::uint64_t>(i));
    total += static_cast<double>(gwtail::multinomial_step(probs, 1000, rng));
  }
  CHECK(std::abs(total / draws / (1000.0 * a.mean()) - 1.0) < 1e-2);
}

TEST_CASE("degenerate single-child law") {
  const std::array<double, 2> one = {0.0, 1.0};
  auto rng = gwtail::sample_engine(1, 0);
  std::int64_t z = 1;
  for (int t = 0; t < 20; ++t) z = gwtail::multinomial_step(one, z, rng);
  CHECK(z == 1);
}

TEST_CASE("simulation: parallel equals serial bit for bit") {
  gwtail::SimulationConfig cfg;
  cfg.samples = 2000;
  cfg.generations = 15;
  cfg.seed = 99;
  const auto a = testing::case_a();
  CHECK(gwtail::simulate_W(a, cfg) == gwtail::simulate_W_serial(a, cfg));
}

TEST_CASE("martingale means are flat in the generation count") {
  const auto b = testing::case_b();
  gwtail::SimulationConfig cfg;
  cfg.samples = 100'000;
  for (int t : {10, 15, 20, 25}) {
    cfg.generations = t;
    const auto w = gwtail::simulate_W(b, cfg);
    const double mean = std::accumulate(w.begin(), w.end(), 0.0) / w.size();
    double var = 0.0;
    for (double v : w) var += (v - mean) * (v - mean);
    const double se = std::sqrt(var / (w.size() - 1) / w.size());
    CHECK(std::abs(mean - 1.0) < 3.0 * se);
    CHECK(*std::min_element(w.begin(), w.end()) > 0.0);
  }
}

TEST_CASE("population cap") {
  gwtail::SimulationConfig cfg;
  cfg.samples = 4;
  cfg.generations = 60;
  CHECK_THROWS_AS(gwtail::simulate_W(testing::case_b(), cfg), gwtail::Error);
}

TEST_CASE("histogram comparison") {
  const gwtail::PiEvaluator ev(testing::case_a());
  const auto xs = gwtail::linear_grid(0.0, 4.0, 81);
  const auto profile = gwtail::oracle_profile(ev, xs);

  const auto self = gwtail::profile_masses(profile, 0.0, 4.0, 20);
  const auto report = gwtail::histogram_compare(self, profile);
  CHECK(report.max_abs_diff == 0.0);

  const std::vector<double> samples = {0.5, 1.0, 1.5};
  CHECK_THROWS_AS(gwtail::histogram_compare(samples, profile, 20, 1.0, 1.0), gwtail::Error);
  CHECK_THROWS_AS(gwtail::histogram_compare(samples, profile, 20, 0.0, 5.0), gwtail::Error);
  CHECK_THROWS_AS(gwtail::histogram_compare(samples, profile, 5, 0.0, 4.0), gwtail::Error);

  const auto hist = gwtail::make_histogram(samples, 0.0, 4.0, 10);
  CHECK(hist.sample_count == 3);
  CHECK(std::accumulate(hist.mass.begin(), hist.mass.end(), 0.0) == doctest::Approx(1.0));
}
