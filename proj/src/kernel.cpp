#include "bergman/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bergman/sweep.hpp"

namespace bergman {

TruncatedKernel::TruncatedKernel(std::shared_ptr<const MomentTable> table,
                                 int maxDegree, bool parallelBuild)
    : table_(std::move(table)), maxDegree_(maxDegree) {
  if (maxDegree_ < 0) throw std::invalid_argument("kernel: negative degree");
  indices_ = enumerateMultiIndices(table_->domain().dimension(), maxDegree_);
  coeffs_.resize(indices_.size());
  parallelFor(
      indices_.size(),
      [&](std::size_t i) {
        const LogValue norm2 = table_->generalizedMoment(indices_[i].asReal(2.0));
        coeffs_[i] = LogValue::one() / norm2;
      },
      parallelBuild);
}

LogValue TruncatedKernel::coefficient(const MultiIndex& alpha) const {
  for (size_t i = 0; i < indices_.size(); ++i)
    if (indices_[i] == alpha) return coeffs_[i];
  throw std::out_of_range("kernel coefficient: |alpha| exceeds truncation");
}

TruncatedKernel::Eval TruncatedKernel::eval(
    const std::vector<std::complex<double>>& z,
    const std::vector<std::complex<double>>& w) const {
  const int n = table_->domain().dimension();
  if (static_cast<int>(z.size()) != n || static_cast<int>(w.size()) != n)
    throw std::invalid_argument("kernel eval: dimension mismatch");

  // Per-term log magnitude and phase; max-shift before the complex sum.
  std::vector<double> termLog(indices_.size());
  std::vector<double> termPhase(indices_.size());
  std::vector<double> shellLog(maxDegree_ + 1,
                               -std::numeric_limits<double>::infinity());
  double maxLog = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < indices_.size(); ++i) {
    const MultiIndex& a = indices_[i];
    double lm = coeffs_[i].logmag;
    double ph = 0.0;
    bool zero = false;
    for (int d = 0; d < n; ++d) {
      if (a[d] == 0) continue;
      const double mz = std::abs(z[d]), mw = std::abs(w[d]);
      if (mz == 0.0 || mw == 0.0) {
        zero = true;
        break;
      }
      lm += a[d] * (std::log(mz) + std::log(mw));
      ph += a[d] * (std::arg(z[d]) - std::arg(w[d]));
    }
    termLog[i] = zero ? -std::numeric_limits<double>::infinity() : lm;
    termPhase[i] = ph;
    maxLog = std::max(maxLog, termLog[i]);
  }

  Eval out;
  out.degree = maxDegree_;
  if (maxLog == -std::numeric_limits<double>::infinity()) {
    out.value = 0.0;
    return out;
  }
  std::complex<double> acc = 0.0;
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (termLog[i] == -std::numeric_limits<double>::infinity()) continue;
    const double mag = std::exp(termLog[i] - maxLog);
    acc += mag * std::polar(1.0, termPhase[i]);
    const int deg = indices_[i].total();
    shellLog[deg] = shellLog[deg] == -std::numeric_limits<double>::infinity()
                        ? termLog[i]
                        : shellLog[deg] + std::log1p(std::exp(termLog[i] -
                                                              shellLog[deg]));
  }
  out.value = acc * std::exp(maxLog);

  // Geometric tail estimate from the decay of the last shells.
  const int back = std::min(4, maxDegree_);
  const double last = shellLog[maxDegree_];
  const double earlier = shellLog[maxDegree_ - back];
  if (last == -std::numeric_limits<double>::infinity()) {
    out.tailBound = 0.0;
  } else if (earlier == -std::numeric_limits<double>::infinity() ||
             last >= earlier) {
    out.tailBound = std::numeric_limits<double>::infinity();
  } else {
    const double logRatio = (last - earlier) / back;  // < 0
    const double ratio = std::exp(logRatio);
    out.tailBound = std::exp(last + logRatio) / (1.0 - ratio);
  }
  out.tailWarning = !(out.tailBound <= 0.1 * std::abs(out.value));
  return out;
}

MonomialFunction projectMonomial(const MomentTable& table,
                                 const MonomialFunction& f) {
  const int n = table.domain().dimension();
  if (f.holo.dimension() != n || f.anti.dimension() != n)
    throw std::invalid_argument("projectMonomial: dimension mismatch");
  if (f.isZero() || !f.anti.leq(f.holo))
    return {MultiIndex::zeros(n), MultiIndex::zeros(n), LogValue::zero()};
  const MultiIndex target = f.holo - f.anti;
  const LogValue num = table.generalizedMoment(f.holo.asReal(2.0));
  const LogValue den = table.generalizedMoment(target.asReal(2.0));
  return {target, MultiIndex::zeros(n), f.scale * (num / den)};
}

double verifySliceIdentity(const std::shared_ptr<const MomentTable>& table,
                           std::complex<double> z1, std::complex<double> w1,
                           int maxDegree) {
  const MomentTable& t = *table;
  if (t.domain().dimension() != 2)
    throw std::invalid_argument("verifySliceIdentity: n = 2 domains only");
  const double r1 = std::abs(w1);
  if (!(r1 < 1.0))
    throw std::invalid_argument("verifySliceIdentity: w1 must be interior");

  // Slice weight by quadrature (shared by both sides; the degenerate
  // w1 -> 1 limit needs it on both).
  const LogValue mu = t.muWeight(r1);

  // LHS: Omega-kernel series; the angular integral in w_2 kills every
  // alpha_2 != 0 term, leaving sum_a c^2_{(a,0)} (z1 wbar1)^a mu(w1).
  // Coefficients come from the table's reduction path.
  const std::complex<double> zw = z1 * std::conj(w1);
  std::complex<double> lhsSeries = 0.0;
  for (int a = 0; a <= maxDegree; ++a) {
    const LogValue g = t.generalizedMoment({2.0 * a, 0.0});
    lhsSeries += std::exp(-g.logmag) * std::pow(zw, a);
  }
  const std::complex<double> lhs = lhsSeries * mu.toReal();

  // RHS: disc kernel for the auxiliary weight mu, every coefficient from
  // nested quadrature  Phi(2m) = 2 pi int r^{2m+1} mu(r) dr.
  QuadratureSpec outerSpec = t.quadSpec();
  std::complex<double> rhsSeries = 0.0;
  for (int m = 0; m <= maxDegree; ++m) {
    const LogIntegrand f = [&t, m](double r) -> LogValue {
      if (r <= 0.0 || r >= 1.0) return {};
      const LogValue muR = t.muWeight(r);
      if (muR.sign == 0) return {};
      return LogValue::fromLog(muR.sign,
                               (2.0 * m + 1.0) * std::log(r) + muR.logmag);
    };
    const LogValue phi2m =
        LogValue::fromLog(1, std::log(2.0 * std::numbers::pi)) *
        integrate1D(f, 0.0, 1.0, outerSpec).valueOrThrow();
    rhsSeries += std::exp(-phi2m.logmag) * std::pow(zw, m);
  }
  const std::complex<double> rhs = rhsSeries * mu.toReal();

  const double diff = std::abs(lhs - rhs);
  const double denom = std::abs(rhs);
  return denom > 1e-300 ? diff / denom : diff;
}

}  // namespace bergman
