#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bergman/blowup.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

MomentTable table(WeightSpec w) {
  return MomentTable(DomainSpec::ball(2), w, QuadratureSpec{});
}

}  // namespace

TEST_CASE("minimal k solves p(k+1) < 2(k-1)") {
  CHECK(minimalK(1.5) == 8);
  // (2+p)/(2-p) = 39 exactly at p = 1.9; the inequality is strict, so the
  // first admissible k is 40.
  CHECK(minimalK(1.9) == 40);
  CHECK(minimalK(1.1) == 4);
  for (double p : {1.05, 1.3, 1.7, 1.95}) {
    const int k = minimalK(p);
    CHECK(p * (k + 1) < 2.0 * (k - 1));
    CHECK_FALSE(p * k < 2.0 * (k - 2));
  }
  CHECK_THROWS_AS(minimalK(2.0), std::domain_error);
  CHECK_THROWS_AS(minimalK(0.9), std::domain_error);
}

TEST_CASE("predicted slope formula and signs") {
  CHECK(predictedBlowupSlope(WeightSpec::exponential(), 1.5, 8) ==
        doctest::Approx(oracles::blowupSlope(1.5, 8)).epsilon(1e-15));
  CHECK(oracles::blowupSlope(1.5, 8) == doctest::Approx(0.0655493).epsilon(1e-5));
  CHECK(predictedBlowupSlope(WeightSpec::exponential(), 1.5, 8) > 0.0);
  CHECK(predictedBlowupSlope(WeightSpec::exponential(), 2.0, 8) < 0.0);
  CHECK(predictedBlowupSlope(WeightSpec::unweighted(), 1.5, 8) == 0.0);
  CHECK(predictedBlowupSlope(WeightSpec::polynomial(2.0), 1.5, 8) == 0.0);
}

TEST_CASE("norm-ratio log grows like c(p,k) sqrt(m) for the exponential weight") {
  auto t = table(WeightSpec::exponential());
  const auto pts = blowupSweep(t, 1.5, 8, 1e4, 12);
  REQUIRE(pts.size() > 10);
  for (size_t i = 1; i < pts.size(); ++i) {
    CHECK(pts[i].m > pts[i - 1].m);
    if (pts[i - 1].m >= 100.0) CHECK(pts[i].logRatio > pts[i - 1].logRatio);
  }
  const auto fit =
      fitBlowupSlope(pts, predictedBlowupSlope(t.weight(), 1.5, 8));
  CHECK(fit.relativeGap < 0.2);
  CHECK(fit.measuredSlope > 0.0);
}

TEST_CASE("p = 2 never exceeds ratio 1") {
  auto t = table(WeightSpec::exponential());
  for (const auto& pt : blowupSweep(t, 2.0, 8, 1e3, 12))
    CHECK(pt.logRatio <= 1e-9);
}

TEST_CASE("unweighted oracle weight stays bounded at p = 1.5") {
  auto t = table(WeightSpec::unweighted());
  const auto pts = blowupSweep(t, 1.5, 8, 1e4, 8);
  const double limit = oracles::unweightedLogRatioLimit(1.5, 8);
  for (const auto& pt : pts) CHECK(pt.logRatio < limit + 0.1);
  // and the tail actually settles at the closed-form limit
  CHECK(pts.back().logRatio == doctest::Approx(limit).epsilon(1e-2));
}

TEST_CASE("sweep m values are log-spaced unique integers") {
  auto t = table(WeightSpec::unweighted());
  const auto pts = blowupSweep(t, 1.5, 8, 100.0, 24);
  for (const auto& pt : pts) CHECK(pt.m == std::round(pt.m));
  for (size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].m > pts[i - 1].m);
  CHECK(pts.front().m == 1.0);
  CHECK(pts.back().m == 100.0);
}

TEST_CASE("parallel and serial sweeps agree bitwise") {
  auto ts = table(WeightSpec::exponential());
  auto tp = table(WeightSpec::exponential());
  const auto serial = blowupSweep(ts, 1.5, 8, 500.0, 8, /*parallel=*/false);
  const auto parallel = blowupSweep(tp, 1.5, 8, 500.0, 8, /*parallel=*/true);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i)
    CHECK(serial[i].logRatio == parallel[i].logRatio);
}

TEST_CASE("slope fit input validation") {
  auto t = table(WeightSpec::exponential());
  const auto shortSweep = blowupSweep(t, 1.5, 8, 100.0, 8);
  CHECK_THROWS_AS(fitBlowupSlope(shortSweep, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(blowupRatio(t, 0.5, 8, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(blowupRatio(t, 1.5, 1, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(blowupSweep(t, 1.5, 8, 5.0), std::invalid_argument);
}
