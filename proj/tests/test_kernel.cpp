#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <memory>

#include "bergman/kernel.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

std::shared_ptr<MomentTable> make(DomainSpec d, WeightSpec w) {
  return std::make_shared<MomentTable>(std::move(d), w, QuadratureSpec{});
}

}  // namespace

TEST_CASE("unweighted disc kernel matches 1/pi (1 - z wbar)^{-2}") {
  auto t = make(DomainSpec::disc(), WeightSpec::unweighted());
  TruncatedKernel k(t, 80);
  for (double z : {0.1, 0.3, -0.4})
    for (double w : {0.2, 0.5}) {
      const auto ev = k.eval({z}, {w});
      const double exact = 1.0 / oracles::kPi / ((1 - z * w) * (1 - z * w));
      CHECK(ev.value.real() == doctest::Approx(exact).epsilon(1e-10));
      CHECK(std::fabs(ev.value.imag()) < 1e-12);
      CHECK_FALSE(ev.tailWarning);
    }
}

TEST_CASE("weighted disc kernels (1-|z|^2)^q match the closed form") {
  for (int q : {1, 2, 3}) {
    auto t = make(DomainSpec::disc(), WeightSpec::polynomial(q));
    TruncatedKernel k(t, 80);
    for (double z : {0.15, 0.45})
      for (double w : {0.3, -0.25}) {
        const auto ev = k.eval({z}, {w});
        CHECK(ev.value.real() ==
              doctest::Approx(oracles::discPolyKernel(q, z, w)).epsilon(1e-9));
      }
  }
}

TEST_CASE("complex arguments: kernel is Hermitian and rotation-covariant") {
  auto t = make(DomainSpec::ball(2), WeightSpec::exponential());
  TruncatedKernel k(t, 30);
  const std::vector<std::complex<double>> z{{0.3, 0.1}, {0.2, -0.2}};
  const std::vector<std::complex<double>> w{{0.1, 0.2}, {-0.3, 0.1}};
  const auto zw = k.eval(z, w);
  const auto wz = k.eval(w, z);
  CHECK(zw.value.real() == doctest::Approx(wz.value.real()).epsilon(1e-12));
  CHECK(zw.value.imag() == doctest::Approx(-wz.value.imag()).epsilon(1e-12));
  // Reinhardt rotation invariance: z_j -> e^{i t_j} z_j, w_j -> e^{i t_j} w_j.
  const std::complex<double> ph1 = std::polar(1.0, 0.7);
  const std::complex<double> ph2 = std::polar(1.0, -1.3);
  const auto rot = k.eval({ph1 * z[0], ph2 * z[1]}, {ph1 * w[0], ph2 * w[1]});
  CHECK(rot.value.real() == doctest::Approx(zw.value.real()).epsilon(1e-12));
  CHECK(rot.value.imag() == doctest::Approx(zw.value.imag()).epsilon(1e-12));
}

TEST_CASE("kernel coefficient lookup and tail accounting") {
  auto t = make(DomainSpec::ball(2), WeightSpec::exponential());
  TruncatedKernel k(t, 10);
  const LogValue c = k.coefficient(MultiIndex{2, 1});
  const LogValue direct =
      LogValue::one() / t->generalizedMoment({4.0, 2.0});
  CHECK(c.logmag == direct.logmag);
  CHECK_THROWS_AS(k.coefficient(MultiIndex{11, 0}), std::out_of_range);
  // Tail bound shrinks as the truncation degree grows.
  TruncatedKernel k30(t, 30);
  const auto lo = k.eval({0.4, 0.3}, {0.4, 0.3});
  const auto hi = k30.eval({0.4, 0.3}, {0.4, 0.3});
  CHECK(hi.tailBound < lo.tailBound);
  CHECK(hi.value.real() == doctest::Approx(lo.value.real())
                               .epsilon(10 * lo.tailBound /
                                        std::fabs(lo.value.real())));
}

TEST_CASE("parallel and serial coefficient builds are bit-identical") {
  auto t = make(DomainSpec::ball(2), WeightSpec::exponential());
  TruncatedKernel serial(t, 25, /*parallelBuild=*/false);
  TruncatedKernel parallel(t, 25, /*parallelBuild=*/true);
  const auto all = enumerateMultiIndices(2, 25);
  for (const auto& a : all) {
    CHECK(serial.coefficient(a).logmag == parallel.coefficient(a).logmag);
  }
}

TEST_CASE("projection of monomials via moment ratios") {
  auto t = make(DomainSpec::disc(), WeightSpec::unweighted());
  // B(z^2 zbar) = (G(4)/G(2)) z = ((2pi/6)/(2pi/4)) z = (2/3) z.
  const auto out = projectMonomial(
      *t, MonomialFunction{MultiIndex{2}, MultiIndex{1}, LogValue::one()});
  CHECK(out.holo == MultiIndex{1});
  CHECK(out.anti == MultiIndex{0});
  CHECK(out.scale.toReal() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // Annihilation when the antiholomorphic degree dominates anywhere.
  const auto zero = projectMonomial(
      *t, MonomialFunction{MultiIndex{1}, MultiIndex{2}, LogValue::one()});
  CHECK(zero.isZero());
  // Holomorphic inputs are reproduced identically.
  const auto fixed = projectMonomial(
      *t, MonomialFunction{MultiIndex{3}, MultiIndex{0}, LogValue::one()});
  CHECK(fixed.holo == MultiIndex{3});
  CHECK(fixed.scale.toReal() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("projection scale carries through") {
  auto t = make(DomainSpec::ball(2), WeightSpec::exponential());
  const LogValue s = LogValue::fromReal(-2.5);
  const auto out = projectMonomial(
      *t, MonomialFunction{MultiIndex{3, 1}, MultiIndex{1, 1}, s});
  const LogValue expected = s * (t->generalizedMoment({6.0, 2.0}) /
                                 t->generalizedMoment({4.0, 0.0}));
  CHECK(out.holo == MultiIndex{2, 0});
  CHECK(out.scale.sign == expected.sign);
  CHECK(out.scale.logmag == doctest::Approx(expected.logmag).epsilon(1e-15));
}

TEST_CASE("slice identity on the ball") {
  auto t = make(DomainSpec::ball(2), WeightSpec::exponential());
  const double err = verifySliceIdentity(t, {0.3, 0.0}, {0.4, 0.0}, 40);
  CHECK(err < 1e-8);
}
