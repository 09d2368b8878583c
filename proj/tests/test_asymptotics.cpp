#include <doctest.h>

#include "cases.hpp"
#include "gwtail/asymptotics.hpp"
#include "gwtail/error.hpp"
#include "gwtail/oracle.hpp"

using gwtail::cplx;

TEST_CASE("spectral and contour amplitudes agree") {
  for (const auto& dist : {testing::case_a(), testing::case_b()}) {
    const gwtail::PiEvaluator ev(dist);
    const gwtail::TailExpansion expansion(ev);
    for (double x : {0.5, 0.8}) {
      for (int n = 1; n <= 3; ++n) {
        CHECK(std::abs(gwtail::v_n(expansion.term(n), x) - gwtail::v_n_contour_oracle(ev, n, x)) < 1e-9);
      }
    }
  }
}

TEST_CASE("known amplitude values for case A") {
  const gwtail::TailExpansion expansion(gwtail::PiEvaluator(testing::case_a()));
  CHECK(gwtail::v_n(expansion.term(1), 0.5) == doctest::Approx(1.69649881813476).epsilon(1e-11));
  CHECK(gwtail::v_n(expansion.term(2), 0.5) == doctest::Approx(-0.851032881006079).epsilon(1e-11));
}

TEST_CASE("amplitudes are multiplicatively periodic") {
  const gwtail::TailExpansion expansion(gwtail::PiEvaluator(testing::case_b()));
  for (int n = 1; n <= 4; ++n) {
    const double v = gwtail::v_n(expansion.term(n), 0.7);
    CHECK(gwtail::v_n(expansion.term(n), 0.7 * 3.0) == doctest::Approx(v).epsilon(1e-12));
    CHECK(gwtail::v_n(expansion.term(n), 0.7 / 9.0) == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("the series approaches the oracle density at small x") {
  for (const auto& dist : {testing::case_a(), testing::case_b()}) {
    const gwtail::PiEvaluator ev(dist);
    const gwtail::TailExpansion expansion(ev);
    for (double x : {0.02, 0.05}) {
      const double p = gwtail::oracle_density(ev, x);
      CHECK(std::abs(gwtail::density_series(expansion, x, 4) - p) < 1e-9 * p);
    }
  }
}

TEST_CASE("main identity for the zeroth harmonic") {
  const auto a = testing::case_a();
  for (int n = 1; n <= 3; ++n) {
    const auto c = gwtail::main_identity_check(a, 0, n, 0.7);
    CHECK(c.abs_residual < 1e-10);
    CHECK(std::abs(c.rhs.imag()) < 1e-15);
  }
}

TEST_CASE("series profile equals pointwise evaluation") {
  const gwtail::TailExpansion expansion(gwtail::PiEvaluator(testing::case_a()));
  const auto xs = gwtail::log_grid(0.01, 1.0, 17);
  const auto profile = gwtail::series_profile(expansion, xs, 3);
  profile.check();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(profile.values[i] == gwtail::density_series(expansion, xs[i], 3));
  }
}

TEST_CASE("argument errors") {
  const gwtail::PiEvaluator ev(testing::case_a());
  const gwtail::TailExpansion expansion(ev);
  CHECK_THROWS_AS(gwtail::density_series(expansion, 0.0, 1), gwtail::Error);
  CHECK_THROWS_AS(gwtail::density_series(expansion, 0.5, 9), gwtail::Error);
  CHECK(gwtail::density_series(expansion, 0.5, 0) == 0.0);
  CHECK_THROWS_AS(gwtail::v_n_contour_oracle(ev, 5, 0.5), gwtail::Error);

  // ln p1 / ln E = ln 0.5 / ln 2.5 > -1 here
  const std::array<double, 5> weak = {0.0, 0.5, 0.0, 0.0, 0.5};
  const gwtail::PiEvaluator ev_weak(gwtail::OffspringDistribution::validate(weak), 0.1);
  CHECK_THROWS_AS(gwtail::v_n_contour_oracle(ev_weak, 1, 0.5), gwtail::Error);
}
