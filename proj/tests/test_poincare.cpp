#include <doctest.h>

#include <random>

#include "cases.hpp"
#include "gwtail/error.hpp"
#include "gwtail/poincare.hpp"

using gwtail::cplx;

TEST_CASE("low-order Taylor coefficients from differentiating the functional equation") {
  for (const auto& dist : {testing::case_a(), testing::case_b()}) {
    const double e = dist.mean();
    const double d2 = dist.eval(1.0, 2);
    double d3 = 0.0;
    for (int j = 3; j <= dist.degree(); ++j) d3 += j * (j - 1) * (j - 2) * dist.p(j);
    const double pi2 = d2 / (e * e - e);
    const double pi3 = (-d3 - 3.0 * d2 * pi2) / (e * e * e - e);

    const auto t = gwtail::pi_taylor(dist);
    CHECK(t.coeffs[0].real() == 1.0);
    CHECK(t.coeffs[1].real() == -1.0);
    CHECK(testing::rel(t.coeffs[2].real(), pi2 / 2.0) < 1e-13);
    CHECK(testing::rel(t.coeffs[3].real(), pi3 / 6.0) < 1e-12);
  }
}

TEST_CASE("Poincare equation on the right half plane") {
  const auto b = testing::case_b();
  const gwtail::PiEvaluator ev(b);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(0.0, 60.0), im(-60.0, 60.0);
  for (int i = 0; i < 100; ++i) {
    const cplx z(re(rng), im(rng));
    CHECK(std::abs(b.eval(ev(z)) - ev(b.mean() * z)) < 1e-12);
  }
  CHECK_THROWS_AS(ev(cplx(-1.0, 0.0)), gwtail::Error);
}

TEST_CASE("Poincare derivative against a central difference") {
  const gwtail::PiEvaluator ev(testing::case_a());
  for (cplx z : {cplx(0.05, 0.0), cplx(2.0, 3.0), cplx(0.0, 17.0)}) {
    const double h = 1e-5;
    const cplx fd = (ev(z + h) - ev(z - h)) / (2.0 * h);
    CHECK(std::abs(ev.eval_with_derivative(z).derivative - fd) < 1e-8);
  }
}

TEST_CASE("Laplace transform bounds: Pi is real and decreasing on the positive axis") {
  const gwtail::PiEvaluator ev(testing::case_a());
  double prev = 1.0;
  for (double x = 0.5; x < 40.0; x += 0.5) {
    const cplx v = ev(cplx(x, 0.0));
    CHECK(std::abs(v.imag()) < 1e-15);
    CHECK(v.real() < prev);
    CHECK(v.real() > 0.0);
    prev = v.real();
  }
}

TEST_CASE("decay diagnostics and the Julia window test") {
  for (const auto& dist : {testing::case_a(), testing::case_b()}) {
    const gwtail::PiEvaluator ev(dist);
    const auto report = gwtail::check_strong_decay(ev, 1e4, 1e-2);
    CHECK(report.hypotheses_hold());
    CHECK(report.fitted_slope < -1.0);
    CHECK(gwtail::julia_precondition(ev, 5.0));
    CHECK_THROWS_AS(gwtail::julia_precondition(ev, 0.0), gwtail::Error);
  }
}

TEST_CASE("escape radius guarantees doubling") {
  for (const auto& dist : {testing::case_a(), testing::case_b()}) {
    const double r = gwtail::escape_radius(dist);
    for (int k = 0; k < 64; ++k) {
      for (double s : {1.0, 1.5, 4.0}) {
        const cplx w = std::polar(r * s, 0.1 * k);
        CHECK(std::abs(dist.eval(w)) >= 2.0 * std::abs(w) * (1.0 - 1e-12));
      }
    }
  }
}

TEST_CASE("escape raster: parallel equals serial, basin pixels never escape") {
  const auto a = testing::case_a();
  const gwtail::ComplexWindow window{-1.5, 1.5, -1.2, 1.2};
  const auto par = gwtail::julia_escape_grid(a, window, 61, 41, 80);
  const auto ser = gwtail::julia_escape_grid_serial(a, window, 61, 41, 80);
  CHECK(par.iterations == ser.iterations);
  // the centre pixel is 0, attracted to the fixed point
  const cplx c = par.pixel_center(30, 20);
  CHECK(std::abs(c) < 1e-12);
  CHECK(par.at(30, 20) == 80);
  // 1.45 lies beyond the repelling fixed point 1
  CHECK(gwtail::escape_time(a, cplx(1.45, 0.0), 80, par.escape_radius) < 80);
}
