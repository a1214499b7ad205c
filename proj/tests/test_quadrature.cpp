#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bergman/quadrature.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

LogValue positive(double v) { return LogValue::fromReal(v); }

}  // namespace

TEST_CASE("polynomials integrate exactly") {
  QuadratureSpec spec;
  for (int p = 0; p <= 12; ++p) {
    const auto res = integrate1D(
        [p](double x) { return positive(std::pow(x, p)); }, 0.0, 1.0, spec);
    CHECK(res.converged);
    CHECK(res.value.toReal() ==
          doctest::Approx(1.0 / (p + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("oscillating integrand with sign changes") {
  QuadratureSpec spec;
  // int_0^pi cos(3x) sin(x) dx = ... known: int cos(3x) sin(x) = -1/4? Use
  // int_0^1 (x - 0.5) dx = 0 exactly (signed cancellation), and
  // int_0^pi sin(x) dx = 2.
  const auto zero = integrate1D(
      [](double x) { return LogValue::fromReal(x - 0.5); }, 0.0, 1.0, spec);
  CHECK(std::fabs(zero.value.toReal()) < 1e-12);
  const auto two = integrate1D(
      [](double x) { return positive(std::sin(x)); }, 0.0, oracles::kPi, spec);
  CHECK(two.value.toReal() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("essential boundary singularity exp(-1/(1-r))") {
  QuadratureSpec spec;
  const auto res = integrate1D(
      [](double r) -> LogValue {
        if (r <= 0.0 || r >= 1.0) return {};
        return LogValue::fromLog(1, -1.0 / (1.0 - r));
      },
      0.0, 1.0, spec);
  CHECK(res.converged);
  // I(0) = E_2(1), independently by the exponential-integral oracle.
  CHECK(res.value.toReal() ==
        doctest::Approx(oracles::expIntEn(2, 1.0)).epsilon(1e-10));
  CHECK(res.value.toReal() == doctest::Approx(oracles::kE2At1).epsilon(1e-10));
}

TEST_CASE("huge monomial powers stay in the log domain") {
  QuadratureSpec spec;
  // int_0^1 r^y exp(-1/(1-r)) dr at y = 1e5: magnitude ~ e^{-2 sqrt(y)}.
  const auto res = integrate1D(
      [](double r) -> LogValue {
        if (r <= 0.0 || r >= 1.0) return {};
        return LogValue::fromLog(1, 1e5 * std::log(r) - 1.0 / (1.0 - r));
      },
      0.0, 1.0, spec);
  CHECK(res.converged);
  // Laplace approximation: log I(y) = -2 sqrt(y) + (3/4) log(1/y) + ...;
  // assert the leading term brackets the result.
  CHECK(res.value.logmag < -2.0 * std::sqrt(1e5) + 0.0);
  CHECK(res.value.logmag > -2.0 * std::sqrt(1e5) - 20.0);
  CHECK(res.value.sign == 1);
}

TEST_CASE("requested tolerance is achieved") {
  QuadratureSpec spec;
  spec.relTol = 1e-8;
  const auto res = integrate1D(
      [](double x) { return positive(std::exp(x)); }, 0.0, 2.0, spec);
  const double exact = std::exp(2.0) - 1.0;
  const double actual = std::fabs(res.value.toReal() - exact) / exact;
  CHECK(res.converged);
  CHECK(actual <= spec.relTol);
  CHECK(res.relErrEst <= spec.relTol);
}

TEST_CASE("spec validation") {
  QuadratureSpec bad;
  bad.relTol = 0.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.relTol = 1e-10;
  bad.maxDepth = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  QuadratureSpec good;
  CHECK_NOTHROW(good.validate());
  CHECK_THROWS_AS(
      integrate1D([](double) { return LogValue::one(); }, 1.0, 0.0, good),
      std::invalid_argument);
}

TEST_CASE("2D radial integral over the ball") {
  QuadratureSpec spec;
  const auto ball = DomainSpec::ball(2);
  // int over {r1^2 + r2^2 < 1, r_i > 0} of r1 r2 equals 1/8.
  const auto res = integrate2DRadial(
      [](double r1, double r2) {
        return LogValue::fromReal(r1 * r2);
      },
      ball, spec);
  CHECK(res.converged);
  CHECK(res.value.toReal() == doctest::Approx(0.125).epsilon(1e-10));
}

TEST_CASE("2D radial integral with outer restriction") {
  QuadratureSpec spec;
  const auto ball = DomainSpec::ball(2);
  // int_{a<r1<1} r1 r2 = (1/2) int_a^1 r1 (1 - r1^2) dr1.
  const double a = 0.5;
  const auto res = integrate2DRadial(
      [](double r1, double r2) { return LogValue::fromReal(r1 * r2); }, ball,
      spec, a);
  const double exact =
      0.5 * (0.5 * (1.0 - a * a) - 0.25 * (1.0 - a * a * a * a));
  CHECK(res.value.toReal() == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("non-convergence is reported, not silently returned") {
  QuadratureSpec spec;
  spec.maxDepth = 10;
  spec.boundaryTransform = false;
  // 1/sqrt(x) near 0 at depth 10 without endpoint refinement cannot reach
  // 1e-10 relative accuracy.
  const auto res = integrate1D(
      [](double x) -> LogValue {
        if (x <= 0.0) return {};
        return LogValue::fromLog(1, -0.5 * std::log(x));
      },
      0.0, 1.0, spec);
  CHECK_FALSE(res.converged);
  CHECK_THROWS_AS(res.valueOrThrow(), std::runtime_error);
}
