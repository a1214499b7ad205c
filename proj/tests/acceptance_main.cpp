// Acceptance suite: one PASS/FAIL line per criterion, exit code 0 only if
// every criterion passes. Each criterion exercises the library end to end
// against independently derived reference values (see oracles.hpp).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/blowup.hpp"
#include "bergman/kernel.hpp"
#include "bergman/moments.hpp"
#include "bergman/report.hpp"
#include "bergman/sobolev.hpp"
#include "oracles.hpp"

#ifndef BERGMAN_CLI_PATH
#define BERGMAN_CLI_PATH ""
#endif

namespace {

using namespace bergman;

int failures = 0;

void criterion(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0,
                double d = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b, c, d);
  return buf;
}

std::shared_ptr<MomentTable> gBallExp;

// ---------------------------------------------------------------------------
// 1. Quadrature oracle: disc moments and classical weighted disc kernels.
void criterion1() {
  MomentTable disc(DomainSpec::disc(), WeightSpec::unweighted(),
                   QuadratureSpec{});
  double worstMoment = 0.0;
  for (int x = 0; x <= 100; ++x) {
    const double got = disc.generalizedMomentQuadrature({double(x)}).toReal();
    const double exact = oracles::discUnweightedPhi(x);
    worstMoment = std::max(worstMoment, std::fabs(got / exact - 1.0));
  }

  double worstKernel = 0.0;
  const double pts[10][2] = {{0.1, 0.2},  {0.3, 0.4},   {0.5, 0.5},
                             {-0.4, 0.6}, {0.25, -0.3}, {0.0, 0.7},
                             {0.6, 0.1},  {-0.2, -0.2}, {0.45, 0.35},
                             {0.15, 0.55}};
  for (int q = 0; q <= 3; ++q) {
    auto t = std::make_shared<MomentTable>(
        DomainSpec::disc(), WeightSpec::polynomial(q), QuadratureSpec{});
    TruncatedKernel k(t, 90);
    for (const auto& p : pts) {
      const double got = k.eval({p[0]}, {p[1]}).value.real();
      const double exact = oracles::discPolyKernel(q, p[0], p[1]);
      worstKernel = std::max(worstKernel, std::fabs(got / exact - 1.0));
    }
  }
  criterion(1, "disc moment and weighted-kernel oracles",
            worstMoment <= 1e-10 && worstKernel <= 1e-8,
            fmt("moment rel err %.2e, kernel rel err %.2e", worstMoment,
                worstKernel));
}

// ---------------------------------------------------------------------------
// 2. Integration-by-parts chain Phi(x) = 4 pi^2 Phi_n(x) / ((x+2)...(x+n+1)).
void criterion2() {
  double worst = 0.0;
  for (int n : {1, 2})
    for (double x : {10.0, 100.0, 1000.0}) {
      const double phi = gBallExp->phiLog(x);
      double reconstructed =
          std::log(4.0 * oracles::kPi * oracles::kPi) +
          gBallExp->phiN(n, x).logmag;
      for (int j = 2; j <= n + 1; ++j) reconstructed -= std::log(x + j);
      worst = std::max(worst, std::fabs(std::expm1(reconstructed - phi)));
    }
  criterion(2, "integration-by-parts identity (n = 1, 2)", worst <= 1e-6,
            fmt("worst rel err %.2e", worst));
}

// ---------------------------------------------------------------------------
// 3. Deficit Phi_n/Phi~_n - 1 shrinks along x and ends below 0.05.
void criterion3() {
  bool pass = true;
  std::string detail;
  for (int n : {1, 2}) {
    const double a = gBallExp->positivityThreshold(n);
    double prev = std::numeric_limits<double>::infinity();
    double last = 0.0;
    for (double x = 50.0; x <= 3200.0; x *= 2.0) {
      const LogValue tilde = gBallExp->phiTildeN(n, x, a);
      const LogValue rest = gBallExp->phiRestN(n, x, a);
      // Phi_n/Phi~_n - 1 computed without cancellation as rest/tilde.
      const double deficit =
          rest.sign == 0 ? 0.0 : std::exp(rest.logmag - tilde.logmag);
      if (!(deficit <= prev)) pass = false;
      prev = deficit;
      last = deficit;
    }
    if (last > 0.05) pass = false;
    detail += fmt("n=%.0f: a=%.4f, deficit(3200)=%.2e  ", n, a, last);
  }
  criterion(3, "restricted moment integrals dominate", pass, detail);
}

// ---------------------------------------------------------------------------
// 4. Asymptotic fit of log I(x): sqrt coefficient ~ 2, exponent reported.
void criterion4() {
  std::vector<double> grid;
  for (int i = 0; i < 40; ++i) grid.push_back(1e2 * std::pow(1e3, i / 39.0));
  const AsymptoticFit fit = fitKappaExponent(grid, QuadratureSpec{});
  criterion(4, "boundary moment asymptotics",
            fit.sqrtCoeff >= 1.98 && fit.sqrtCoeff <= 2.02,
            fmt("a = %.5f, fitted q = %.4f (reference exponent 1/3; "
                "Laplace expansion gives 3/4)",
                fit.sqrtCoeff, fit.polyExponent));
}

// ---------------------------------------------------------------------------
// 5. L^p norm-ratio blowup for p in (1,2), contraction at p = 2, bounded
//    ratio for the unweighted oracle weight.
void criterion5() {
  const double p = 1.5;
  const int k = 8;

  const auto pts = blowupSweep(*gBallExp, p, k, 1e4, 24);
  bool increasing = true;
  std::vector<BlowupPoint> window;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].m >= 1e2) {
      window.push_back(pts[i]);
      if (i > 0 && pts[i - 1].m >= 1e2 &&
          pts[i].logRatio <= pts[i - 1].logRatio)
        increasing = false;
    }
  }
  const double predicted = predictedBlowupSlope(gBallExp->weight(), p, k);
  const auto fit = fitBlowupSlope(window, predicted);

  MomentTable ball2(DomainSpec::ball(2), WeightSpec::exponential(),
                    QuadratureSpec{});
  double worstP2 = -std::numeric_limits<double>::infinity();
  for (const auto& pt : blowupSweep(ball2, 2.0, k, 1e4, 24))
    worstP2 = std::max(worstP2, pt.logRatio);

  MomentTable flat(DomainSpec::ball(2), WeightSpec::unweighted(),
                   QuadratureSpec{});
  const double limit = oracles::unweightedLogRatioLimit(p, k);
  double worstFlat = -std::numeric_limits<double>::infinity();
  for (const auto& pt : blowupSweep(flat, p, k, 1e4, 24))
    worstFlat = std::max(worstFlat, pt.logRatio);

  criterion(5, "norm-ratio blowup mechanism",
            increasing && fit.relativeGap <= 0.2 && worstP2 <= 1e-9 &&
                worstFlat <= limit + 0.1,
            fmt("slope %.5f vs predicted %.5f (gap %.1f%%)",
                fit.measuredSlope, predicted, 100.0 * fit.relativeGap) +
                fmt(", p=2 max log ratio %.1e, unweighted max %.4f", worstP2,
                    worstFlat));
}

// ---------------------------------------------------------------------------
// 6. Fiberwise slice identity between the 2D kernel and the mu-weighted
//    disc kernel.
void criterion6() {
  const double configs[5][2] = {
      {0.3, 0.4}, {0.2, 0.6}, {0.5, 0.3}, {0.1, 0.7}, {0.45, 0.45}};
  double worst = 0.0;
  for (const auto& c : configs) {
    const double err =
        verifySliceIdentity(gBallExp, {c[0], 0.0}, {c[1], 0.0}, 60);
    worst = std::max(worst, err);
  }
  criterion(6, "slice identity at J = 60", worst <= 1e-6,
            fmt("worst rel err %.2e", worst));
}

// ---------------------------------------------------------------------------
// 7. Lift isometry and projection/lift commutation.
void criterion7() {
  double worst = 0.0;
  for (int a = 0; a <= 4; ++a) {
    // ||z1^a||^2 on the 2D domain with weight lambda ...
    const LogValue lifted = gBallExp->generalizedMoment({2.0 * a, 0.0});
    // ... equals the disc norm against the pushed-forward weight mu.
    QuadratureSpec spec = gBallExp->quadSpec();
    const LogIntegrand f = [a, this_ = gBallExp.get()](double r) -> LogValue {
      if (r <= 0.0 || r >= 1.0) return {};
      const LogValue mu = this_->muWeight(r);
      if (mu.sign == 0) return {};
      return LogValue::fromLog(mu.sign,
                               (2.0 * a + 1.0) * std::log(r) + mu.logmag);
    };
    const LogValue slice =
        LogValue::fromLog(1, std::log(2.0 * oracles::kPi)) *
        integrate1D(f, 0.0, 1.0, spec).valueOrThrow();
    // Norm (not squared-norm) relative error.
    worst = std::max(worst,
                     std::fabs(std::expm1(0.5 * (lifted.logmag - slice.logmag))));
  }

  bool exact = true;
  for (int a = 1; a <= 5; ++a)
    for (int b = 0; b <= a; ++b) {
      // Lifted projection of z1^a zbar1^b ...
      const auto proj = projectMonomial(
          *gBallExp,
          MonomialFunction{MultiIndex{a, 0}, MultiIndex{b, 0},
                           LogValue::one()});
      // ... against the disc-mu projection coefficient Phi(2a)/Phi(2(a-b)),
      // with Phi read off the same moment table (Phi(x) = G((x, 0))).
      const LogValue coeff = gBallExp->phi(2.0 * a) /
                             gBallExp->phi(2.0 * (a - b));
      if (proj.holo != MultiIndex{a - b, 0} ||
          proj.scale.logmag != coeff.logmag || proj.scale.sign != coeff.sign)
        exact = false;
    }
  criterion(7, "lift isometry and projection-lift commutation",
            worst <= 1e-8 && exact,
            fmt("worst norm rel err %.2e, coefficient form ", worst) +
                (exact ? "exact" : "MISMATCH"));
}

// ---------------------------------------------------------------------------
// 8. Normalized monomial-norm band and exchange symmetry.
void criterion8() {
  const double spreadRef = dseBandSpread(*gBallExp, 100, 200, 1.0 / 3.0);
  std::vector<double> grid;
  for (int i = 0; i < 24; ++i) grid.push_back(1e2 * std::pow(1e3, i / 23.0));
  const double fittedQ =
      fitKappaExponent(grid, QuadratureSpec{}).polyExponent;
  const double spreadFit = dseBandSpread(*gBallExp, 100, 200, fittedQ);

  bool symmetric = true;
  for (int a = 0; a <= 30 && symmetric; ++a)
    for (int b = 0; b < a; ++b) {
      const LogValue ab = dGamma2(*gBallExp, MultiIndex{a, b});
      const LogValue ba = dGamma2(*gBallExp, MultiIndex{b, a});
      if (ab.logmag != ba.logmag || ab.sign != ba.sign) {
        symmetric = false;
        break;
      }
    }
  criterion(8, "monomial norm asymptotic band",
            spreadRef <= 2.0 && spreadFit <= 1.2 && symmetric,
            fmt("spread %.3f (q = 1/3), %.3f (q = %.3f), symmetry ", spreadRef,
                spreadFit, fittedQ) +
                (symmetric ? "exact" : "BROKEN"));
}

// ---------------------------------------------------------------------------
// 9. Reverse Cauchy-Schwarz ratio, sqrt expression bound, binomial log-ratio.
void criterion9() {
  double minRatio = std::numeric_limits<double>::infinity();
  double supHead = 0.0, supTail = 0.0;
  bool binomOk = true;
  const auto betas = enumerateMultiIndices(2, 3);
  for (int total = 0; total <= 300; ++total)
    for (int a1 = 0; a1 <= total; ++a1) {
      const MultiIndex alpha{a1, total - a1};
      for (const auto& beta : betas) {
        if (beta.total() == 0) continue;
        const double r = reverseCS(*gBallExp, alpha, beta);
        minRatio = std::min(minRatio, r);
        (total <= 150 ? supHead : supTail) = std::max(
            total <= 150 ? supHead : supTail, r);
        if (mBetaCoeff(*gBallExp, alpha, beta).binomPart > 1e-12)
          binomOk = false;
      }
    }
  // Uniform boundedness: along rays where some alpha_i stays fixed the ratio
  // increases toward prod_i sqrt(Gamma(2 beta_i + 1)) / Gamma(beta_i + 1)
  // (its |alpha| -> infinity limit), so the honest check is that every
  // sampled value stays below the largest such limit over the beta window.
  double bound = 0.0;
  for (const auto& beta : betas) {
    if (beta.total() == 0) continue;
    double lg = 0.0;
    for (int i = 0; i < 2; ++i)
      lg += 0.5 * std::lgamma(2.0 * beta[i] + 1.0) -
            std::lgamma(beta[i] + 1.0);
    bound = std::max(bound, std::exp(lg));
  }
  const bool bounded = supHead <= bound * (1.0 + 1e-9) &&
                       supTail <= bound * (1.0 + 1e-9);

  bool sqrtOk = true;
  for (int total = 0; total <= 500 && sqrtOk; ++total)
    for (int a1 = 0; a1 <= total && sqrtOk; ++a1)
      for (int bt = 1; bt <= 5 && sqrtOk; ++bt)
        for (int b1 = 0; b1 <= bt; ++b1) {
          const double s =
              sqrtExprBound(MultiIndex{a1, total - a1}, MultiIndex{b1, bt - b1});
          if (s < 0.0 || s > 2.0 * bt + 1e-12) {
            sqrtOk = false;
            break;
          }
        }
  criterion(9, "reverse Cauchy-Schwarz and exponent bounds",
            minRatio >= 1.0 - 1e-12 && bounded && sqrtOk && binomOk,
            fmt("ratio in [%.6f, %.3f], tail sup %.4f vs limit %.4f", minRatio,
                supHead, supTail, bound));
}

// ---------------------------------------------------------------------------
// 10. Adjoint identity and stability of the multiplier norm sup.
void criterion10() {
  double worstAdj = 0.0;
  for (const auto& gamma : enumerateMultiIndices(2, 12))
    for (const auto& beta : enumerateMultiIndices(2, 3)) {
      if (beta.total() == 0 || !beta.leq(gamma)) continue;
      worstAdj =
          std::max(worstAdj, adjointIdentityRelErr(*gBallExp, gamma, beta));
    }

  auto supNormRatio = [&](int maxTotal) {
    double sup = 0.0;
    for (const auto& alpha : enumerateMultiIndices(2, maxTotal))
      for (const auto& beta : enumerateMultiIndices(2, 3)) {
        if (beta.total() == 0) continue;
        sup = std::max(sup, mBetaCoeff(*gBallExp, alpha, beta).normRatio);
      }
    return sup;
  };
  const double sup1 = supNormRatio(60);
  const double sup2 = supNormRatio(120);
  criterion(10, "adjoint identity and multiplier norm stability",
            worstAdj <= 1e-8 && sup2 <= sup1 * 1.05,
            fmt("adjoint rel err %.2e, sup %.4f -> %.4f on doubling", worstAdj,
                sup1, sup2));
}

// ---------------------------------------------------------------------------
// 11. Projection Sobolev-ratio sweep: bounded, stable, contractive at k = 0.
void criterion11() {
  bool pass = true;
  std::string detail;
  for (int k = 0; k <= 2; ++k) {
    const auto base = sobolevRatioSweep(*gBallExp, k, 40);
    const auto extended = sobolevRatioSweep(*gBallExp, k, 48);
    const bool stable = extended.supRatio <= base.supRatio * 1.05;
    if (!stable) pass = false;
    if (k == 0 && base.supRatio > 1.0 + 1e-9) pass = false;
    detail += fmt("k=%.0f: sup %.6f -> %.6f  ", k, base.supRatio,
                  extended.supRatio);
  }
  criterion(11, "projection Sobolev ratio sweep", pass, detail);
}

// ---------------------------------------------------------------------------
// 12. CLI determinism: byte-identical repeated runs of every subcommand.
void criterion12() {
  const std::string cli = BERGMAN_CLI_PATH;
  if (cli.empty() || !std::filesystem::exists(cli)) {
    criterion(12, "CLI determinism", false, "CLI binary not found");
    return;
  }
  const std::vector<std::string> commands = {
      " moment --domain disc --weight none --x-grid 1e1:1e3:10 --out csv",
      " moment --domain ball:2 --weight exp --exponents 4,2 --out json",
      " kernel --domain ball:2 --weight exp --at 0.3,0.2,0.3,0.2 --degree 20",
      " project --domain disc --weight none --monomial 2:1",
      " blowup --p 1.5 --k auto --m-max 100 --points-per-decade 8 --out csv",
      " sobolev --check key --max-degree 20 --out csv",
      " sobolev --check adjoint --max-degree 8 --out json",
      " kappa-fit --x-grid 1e2:1e5:20 --out json",
      " slice-check --z 0.3 --w1 0.4 --degree 15 --out csv",
  };
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const auto dir = std::filesystem::temp_directory_path();
  bool allSame = true;
  std::string offender;
  for (const auto& cmd : commands) {
    std::string outs[2], errs[2];
    for (int run = 0; run < 2; ++run) {
      const auto so = dir / ("acc12_out_" + std::to_string(run));
      const auto se = dir / ("acc12_err_" + std::to_string(run));
      const std::string full =
          cli + cmd + " > " + so.string() + " 2> " + se.string();
      if (std::system(full.c_str()) != 0) {
        allSame = false;
        offender = "exit failure:" + cmd;
        break;
      }
      outs[run] = slurp(so);
      errs[run] = slurp(se);
    }
    if (outs[0] != outs[1] || errs[0] != errs[1] || outs[0].empty()) {
      allSame = false;
      if (offender.empty()) offender = "drift:" + cmd;
    }
    if (!allSame) break;
  }
  criterion(12, "CLI determinism across repeated runs", allSame,
            allSame ? fmt("%0.f of 9 subcommand invocations byte-identical",
                          9.0)
                    : offender);
}

}  // namespace

int main() {
  gBallExp = std::make_shared<MomentTable>(
      DomainSpec::ball(2), WeightSpec::exponential(), QuadratureSpec{});
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED"
                                    : "SOME CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
