#include <doctest.h>

#include <random>
#include <vector>

#include "cases.hpp"
#include "gwtail/error.hpp"
#include "gwtail/schroeder.hpp"

using gwtail::cplx;

namespace {

// Reversion of Phi by the fixed point g = u - sum_{j>=2} phi_j g^j on
// truncated polynomials; each sweep fixes one more coefficient.
std::vector<cplx> revert(const std::vector<cplx>& phi, int order) {
  std::vector<cplx> g(static_cast<std::size_t>(order) + 1, 0.0);
  g[1] = 1.0;
  for (int sweep = 0; sweep < order; ++sweep) {
    std::vector<cplx> next(g.size(), 0.0);
    next[1] = 1.0;
    std::vector<cplx> power = g;  // g^j
    for (int j = 2; j <= order; ++j) {
      power = gwtail::series::multiply(power, g, order);
      for (int k = 0; k <= order; ++k) next[k] -= phi[j] * power[k];
    }
    g = next;
  }
  return g;
}

}  // namespace

TEST_CASE("kappa matches reversion of the Schroeder series") {
  for (const auto& dist : {testing::case_a(), testing::case_b()}) {
    const auto phi = gwtail::phi_series(dist, 12);
    const auto g = revert(phi.coeffs, 12);
    const auto kappa = gwtail::kappa_coeffs(dist, 10);
    CHECK(kappa[0] == 1.0);
    for (int n = 2; n <= 10; ++n) {
      CHECK(testing::rel(kappa[n - 1], g[n].real()) < 1e-10);
    }
  }
}

TEST_CASE("kappa closed forms for the first coefficients") {
  const auto a = testing::case_a();
  const auto kappa = gwtail::kappa_coeffs(a, 4);
  CHECK(kappa[1] == doctest::Approx(-5.555556).epsilon(1e-6));
  CHECK(kappa[2] == doctest::Approx(52.076323).epsilon(1e-6));
  const auto b = testing::case_b();
  CHECK(gwtail::kappa_coeffs(b, 2)[1] == doctest::Approx(0.1 / (0.01 - 0.1)).epsilon(1e-14));
}

TEST_CASE("Schroeder equation by iteration and by series") {
  const auto a = testing::case_a();
  const auto series = gwtail::phi_series(a);
  CHECK(series.trusted_radius >= 0.25);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.35, 0.35);
  for (int i = 0; i < 50; ++i) {
    const cplx z(u(rng), u(rng));
    const cplx it = gwtail::phi_eval(a, z);
    CHECK(std::abs(gwtail::phi_eval(a, a.eval(z)) - a.p1() * it) < 1e-13);
    CHECK(std::abs(series(z) - it) < 1e-9);
  }
  CHECK(std::abs(gwtail::phi_eval(a, 0.0)) == 0.0);
}

TEST_CASE("Schroeder derivative against a central difference") {
  const auto b = testing::case_b();
  const cplx z(0.2, 0.1);
  const double h = 1e-5;
  const cplx fd = (gwtail::phi_eval(b, z + h) - gwtail::phi_eval(b, z - h)) / (2.0 * h);
  CHECK(std::abs(gwtail::phi_eval_with_derivative(b, z).derivative - fd) < 1e-8);
}

TEST_CASE("points outside the basin do not converge") {
  const auto a = testing::case_a();
  CHECK_THROWS_AS(gwtail::phi_eval(a, cplx(3.0, 0.0)), gwtail::Error);
}

TEST_CASE("inverse series round trip") {
  for (const auto& dist : {testing::case_a(), testing::case_b()}) {
    const auto inv = gwtail::phi_inverse_series(dist);
    const double r = 0.5 * inv.trusted_radius;
    for (int k = 0; k < 16; ++k) {
      const cplx u = std::polar(r, 0.4 * k);
      CHECK(std::abs(gwtail::phi_eval(dist, gwtail::phi_inverse_eval(inv, u)) - u) < 1e-10);
    }
    CHECK_THROWS_AS(inv(cplx(2.0 * inv.trusted_radius, 0.0)), gwtail::Error);
  }
}
