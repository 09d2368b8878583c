#include <doctest.h>

#include <numbers>

#include "gwtail/quadrature.hpp"

using gwtail::cplx;

TEST_CASE("exponential damping has a closed-form transform") {
  for (double w : {0.3, 1.0, 7.0}) {
    auto h = [](double y) { return std::pair<cplx, cplx>{std::exp(-y), -std::exp(-y)}; };
    const auto r = gwtail::fourier_half_line(h, w);
    CHECK(std::abs(r.value - 1.0 / cplx(1.0, -w)) < 1e-12);
  }
}

TEST_CASE("algebraic decay: cosine transform of the Lorentzian") {
  for (double w : {0.5, 2.0, 5.0}) {
    auto h = [](double y) {
      const double d = 1.0 + y * y;
      return std::pair<cplx, cplx>{1.0 / d, -2.0 * y / (d * d)};
    };
    const auto r = gwtail::fourier_half_line(h, w);
    CHECK(std::abs(r.value.real() - 0.5 * std::numbers::pi * std::exp(-w)) < 1e-11);
    CHECK(r.cutoff >= 64.0);
  }
}

TEST_CASE("Gauss-Kronrod wrapper") {
  CHECK(gwtail::integrate([](double x) { return x * x; }, 0.0, 3.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(gwtail::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
        doctest::Approx(2.0).epsilon(1e-13));
}
