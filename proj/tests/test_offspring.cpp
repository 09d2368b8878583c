#include <doctest.h>

#include <vector>

#include "cases.hpp"
#include "gwtail/error.hpp"
#include "gwtail/offspring.hpp"

using gwtail::Errc;
using gwtail::OffspringDistribution;

namespace {

Errc error_of(std::vector<double> p) {
  try {
    OffspringDistribution::validate(p);
  } catch (const gwtail::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("derived constants of the two example laws") {
  const auto a = testing::case_a();
  CHECK(a.mean() == doctest::Approx(2.3).epsilon(1e-15));
  CHECK(a.beta() == doctest::Approx(std::log(10.0) / std::log(2.3)).epsilon(1e-14));
  CHECK(a.alpha() == doctest::Approx(a.beta() - 1.0).epsilon(1e-14));
  CHECK(a.log_ratio() == doctest::Approx(-2.764509).epsilon(1e-6));
  CHECK(a.degree() == 3);

  const auto b = testing::case_b();
  CHECK(b.mean() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(b.beta() == doctest::Approx(2.095903).epsilon(1e-6));
}

TEST_CASE("validation errors") {
  CHECK(error_of({}) == Errc::EmptyDistribution);
  CHECK(error_of({0.1, 0.4, 0.5}) == Errc::NonzeroP0);
  CHECK(error_of({0.0, 0.0, 1.0}) == Errc::P1OutOfRange);
  CHECK(error_of({0.0, 1.0}) == Errc::DegenerateP1One);
  CHECK(error_of({0.0, 0.5, 0.7, -0.2}) == Errc::NegativeProbability);
  CHECK(error_of({0.0, 0.1, 0.5}) == Errc::NotNormalized);
  std::vector<double> long_tail(70, 0.0);
  long_tail[1] = 0.5;
  long_tail[69] = 0.5;
  CHECK(error_of(long_tail) == Errc::DegreeTooLarge);
  CHECK(gwtail::category(Errc::NonzeroP0) == gwtail::ErrorCategory::Config);
  CHECK(gwtail::category(Errc::NoConvergence) == gwtail::ErrorCategory::Numerical);
}

TEST_CASE("trailing zeros are dropped") {
  std::vector<double> p = {0.0, 0.1, 0.5, 0.4, 0.0, 0.0};
  CHECK(OffspringDistribution::validate(p).degree() == 3);
}

TEST_CASE("Horner evaluation against direct sums") {
  const auto b = testing::case_b();
  const gwtail::cplx z(0.3, -0.7);
  gwtail::cplx p = 0.0, dp = 0.0, d2p = 0.0;
  for (int j = 1; j <= 4; ++j) {
    p += b.p(j) * std::pow(z, j);
    dp += static_cast<double>(j) * b.p(j) * std::pow(z, j - 1);
    if (j >= 2) d2p += static_cast<double>(j * (j - 1)) * b.p(j) * std::pow(z, j - 2);
  }
  CHECK(std::abs(b.eval(z) - p) < 1e-15);
  CHECK(std::abs(b.eval(z, 1) - dp) < 1e-15);
  CHECK(std::abs(b.eval(z, 2) - d2p) < 1e-14);
  const auto [v, d] = b.eval_with_derivative(z);
  CHECK(std::abs(v - p) < 1e-15);
  CHECK(std::abs(d - dp) < 1e-15);
  CHECK(b.eval(1.0) == doctest::Approx(1.0));
}
