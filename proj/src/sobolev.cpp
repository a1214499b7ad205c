#include "bergman/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergman/sweep.hpp"

namespace bergman {

namespace {

// log of a! / (a-g)! componentwise (falling factorial product); requires g <= a.
double logFallingFactorial(const MultiIndex& a, const MultiIndex& g) {
  double s = 0.0;
  for (int i = 0; i < a.dimension(); ++i)
    s += logFactorial(a[i]) - logFactorial(a[i] - g[i]);
  return s;
}

}  // namespace

LogValue dGamma2(const MomentTable& table, const MultiIndex& gamma) {
  return table.generalizedMoment(gamma.asReal(2.0));
}

LogValue trigMoment(const MultiIndex& gamma) {
  if (gamma.dimension() != 2)
    throw std::invalid_argument("trigMoment: n = 2 only");
  const double lm = -std::log(2.0) + gamma.logFactorialProduct() -
                    logFactorial(gamma.total() + 1);
  return LogValue::fromLog(1, lm);
}

NormalizedDGamma dseBandRatio(const MomentTable& table,
                              const MultiIndex& gamma, double q) {
  NormalizedDGamma out;
  out.gamma = gamma;
  out.qUsed = q;
  const LogValue d2 = dGamma2(table, gamma);
  if (d2.sign <= 0) throw std::runtime_error("dseBandRatio: d^2 not positive");
  out.logD2 = d2.logmag;
  const double gp1 = gamma.total() + 1.0;
  out.normalized = out.logD2 + 2.0 * std::sqrt(gp1) + q * std::log(gp1) +
                   logFactorial(gamma.total() + 1) -
                   gamma.logFactorialProduct();
  return out;
}

double dseBandSpread(const MomentTable& table, int totalLo, int totalHi,
                     double q, bool parallel) {
  const int n = table.domain().dimension();
  std::vector<MultiIndex> window;
  for (const auto& g : enumerateMultiIndices(n, totalHi))
    if (g.total() >= totalLo) window.push_back(g);
  std::vector<double> vals(window.size());
  parallelFor(
      window.size(),
      [&](std::size_t i) {
        vals[i] = dseBandRatio(table, window[i], q).normalized;
      },
      parallel);
  const auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
  return std::exp(*mx - *mn);
}

double reverseCS(const MomentTable& table, const MultiIndex& alpha,
                 const MultiIndex& beta) {
  const double la = dGamma2(table, alpha).logmag;
  const double lab2 = dGamma2(table, alpha + beta.scaled(2)).logmag;
  const double lab = dGamma2(table, alpha + beta).logmag;
  return std::exp(0.5 * (la + lab2) - lab);
}

double sqrtExprBound(const MultiIndex& alpha, const MultiIndex& beta) {
  const double a = alpha.total(), b = beta.total();
  return -2.0 * (std::sqrt(a + 1.0) + std::sqrt(a + 2.0 * b + 1.0) -
                 2.0 * std::sqrt(a + b + 1.0));
}

MBetaCoefficient mBetaCoeff(const MomentTable& table, const MultiIndex& alpha,
                            const MultiIndex& beta) {
  MBetaCoefficient out;
  out.alpha = alpha;
  out.beta = beta;
  const MultiIndex ab = alpha + beta;
  const MultiIndex ab2 = alpha + beta.scaled(2);
  out.binomPart = 2.0 * ab.logFactorialProduct() -
                  alpha.logFactorialProduct() - ab2.logFactorialProduct();
  out.momentPart =
      dGamma2(table, alpha).logmag - dGamma2(table, ab).logmag;
  out.total = out.binomPart + out.momentPart;
  out.normRatio = std::exp(out.binomPart) * reverseCS(table, alpha, beta);
  return out;
}

double adjointIdentityRelErr(const MomentTable& table, const MultiIndex& gamma,
                             const MultiIndex& beta) {
  if (!beta.leq(gamma))
    throw std::invalid_argument("adjointIdentityRelErr: need beta <= gamma");
  const MultiIndex gmb = gamma - beta;
  // <z^{g-b}, d^b z^g> = (g!/(g-b)!) d^2_{g-b}
  const double lhs =
      logFallingFactorial(gamma, beta) + dGamma2(table, gmb).logmag;
  // <d^b M_b z^{g-b}, z^g> = coeff(M_b z^{g-b}) ((g+b)!/g!) d^2_g
  const MBetaCoefficient c = mBetaCoeff(table, gmb, beta);
  const MultiIndex gpb = gamma + beta;
  const double rhs = c.total + logFallingFactorial(gpb, beta) +
                     dGamma2(table, gamma).logmag;
  return std::fabs(std::expm1(lhs - rhs));
}

LogValue sobolevNormSquared(const MomentTable& table,
                            const MonomialFunction& f, int k) {
  if (k < 0) throw std::invalid_argument("sobolevNormSquared: k >= 0");
  if (f.isZero()) return {};
  const int n = table.domain().dimension();
  LogValue sum{};
  // All derivative pairs (beta on zbar exponents, gamma on z exponents)
  // with |beta| + |gamma| <= k, in deterministic enumeration order.
  for (const auto& beta : enumerateMultiIndices(n, k)) {
    if (!beta.leq(f.anti)) continue;
    for (const auto& gamma : enumerateMultiIndices(n, k - beta.total())) {
      if (!gamma.leq(f.holo)) continue;
      const double lc = logFallingFactorial(f.holo, gamma) +
                        logFallingFactorial(f.anti, beta);
      const MultiIndex rem = (f.holo - gamma) + (f.anti - beta);
      const LogValue norm2 = table.generalizedMoment(rem.asReal(2.0));
      sum = sum + LogValue::fromLog(1, 2.0 * lc) * norm2;
    }
  }
  return pow(abs(f.scale), 2.0) * sum;
}

SobolevSweepResult sobolevRatioSweep(const MomentTable& table, int k,
                                     int maxTotal, bool parallel) {
  const int n = table.domain().dimension();
  // Monomial family z^a zbar^b with |a| + |b| <= maxTotal.
  std::vector<std::pair<MultiIndex, MultiIndex>> family;
  const auto all = enumerateMultiIndices(n, maxTotal);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.total() + b.total() > maxTotal) continue;
      family.emplace_back(a, b);
    }
  std::vector<double> ratios(family.size(), 0.0);
  parallelFor(
      family.size(),
      [&](std::size_t i) {
        const MonomialFunction f{family[i].first, family[i].second,
                                 LogValue::one()};
        const MonomialFunction bf = projectMonomial(table, f);
        if (bf.isZero()) return;  // ratio 0
        const LogValue nf = sobolevNormSquared(table, f, k);
        const LogValue nbf = sobolevNormSquared(table, bf, k);
        ratios[i] = std::exp(0.5 * (nbf.logmag - nf.logmag));
      },
      parallel);
  SobolevSweepResult out;
  out.monomialCount = static_cast<int>(family.size());
  out.argHolo = MultiIndex::zeros(n);
  out.argAnti = MultiIndex::zeros(n);
  for (size_t i = 0; i < family.size(); ++i) {
    if (ratios[i] > out.supRatio) {
      out.supRatio = ratios[i];
      out.argHolo = family[i].first;
      out.argAnti = family[i].second;
    }
  }
  return out;
}

}  // namespace bergman
