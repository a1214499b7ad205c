#include "bergman/moments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "bergman/special_functions.hpp"

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

LogValue boundaryMomentI(double y, const QuadratureSpec& spec) {
  if (!(y >= 0.0)) throw std::domain_error("boundaryMomentI: y must be >= 0");
  const LogIntegrand f = [y](double r) -> LogValue {
    if (r <= 0.0 || r >= 1.0) return {};
    return LogValue::fromLog(1, y * std::log(r) - 1.0 / (1.0 - r));
  };
  return integrate1D(f, 0.0, 1.0, spec).valueOrThrow();
}

AsymptoticFit fitKappaExponent(const std::vector<double>& xGrid,
                               const QuadratureSpec& spec) {
  if (xGrid.size() < 20)
    throw std::invalid_argument("fitKappaExponent: need >= 20 grid points");
  double lo = xGrid.front(), hi = xGrid.front();
  for (double x : xGrid) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (lo > 1e2 || hi < 1e5)
    throw std::invalid_argument(
        "fitKappaExponent: grid must span at least [1e2, 1e5]");

  // Normal equations for y ~ -a sqrt(x) - q log(x) + C.
  double A[3][3] = {};
  double b[3] = {};
  std::vector<double> basis(3), ys(xGrid.size());
  for (size_t i = 0; i < xGrid.size(); ++i) {
    const double x = xGrid[i];
    const LogValue v = boundaryMomentI(x, spec);
    ys[i] = v.logmag;
    basis = {-std::sqrt(x), -std::log(x), 1.0};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) A[r][c] += basis[r] * basis[c];
      b[r] += basis[r] * ys[i];
    }
  }
  // Gaussian elimination with partial pivoting.
  double M[3][4];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) M[r][c] = A[r][c];
    M[r][3] = b[r];
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(M[r][col]) > std::fabs(M[piv][col])) piv = r;
    if (std::fabs(M[piv][col]) < 1e-12)
      throw std::runtime_error("fitKappaExponent: ill-conditioned fit");
    if (piv != col)
      for (int c = 0; c < 4; ++c) std::swap(M[piv][c], M[col][c]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double fct = M[r][col] / M[col][col];
      for (int c = 0; c < 4; ++c) M[r][c] -= fct * M[col][c];
    }
  }
  AsymptoticFit fit;
  fit.sqrtCoeff = M[0][3] / M[0][0];
  fit.polyExponent = M[1][3] / M[1][1];
  fit.constant = M[2][3] / M[2][2];
  double ss = 0.0;
  for (size_t i = 0; i < xGrid.size(); ++i) {
    const double x = xGrid[i];
    const double pred = -fit.sqrtCoeff * std::sqrt(x) -
                        fit.polyExponent * std::log(x) + fit.constant;
    ss += (ys[i] - pred) * (ys[i] - pred);
  }
  fit.residual = std::sqrt(ss / xGrid.size());
  return fit;
}

MomentTable::MomentTable(DomainSpec domain, WeightSpec weight,
                         QuadratureSpec quad)
    : domain_(std::move(domain)), weight_(weight), quad_(quad) {
  quad_.validate();
}

bool MomentTable::hasReductionFastPath() const {
  return domain_.kind() == DomainKind::Ball ||
         domain_.kind() == DomainKind::Disc;
}

LogValue MomentTable::boundaryMomentI(double y) const {
  {
    std::shared_lock lk(mutex_);
    auto it = iCache_.find(y);
    if (it != iCache_.end()) return it->second;
  }
  const LogValue v = bergman::boundaryMomentI(y, quad_);
  std::unique_lock lk(mutex_);
  return iCache_.emplace(y, v).first->second;
}

LogValue MomentTable::computeMoment(const std::vector<double>& s) const {
  const int n = domain_.dimension();
  if (!hasReductionFastPath()) return generalizedMomentQuadrature(s);
  // Dirichlet reduction on the ball/disc. The per-coordinate Gamma terms are
  // accumulated in sorted order so that G is exactly symmetric under
  // exponent permutations.
  std::vector<double> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  double half = 0.0;
  std::vector<double> gammaTerms(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i) {
    gammaTerms[i] = logGamma(sorted[i] / 2.0 + 1.0);
    half += sorted[i] / 2.0;
  }
  double logPre = n * std::log(kPi);
  for (double t : gammaTerms) logPre += t;
  logPre -= logGamma(n + half);
  const double y = half + n - 1.0;
  LogValue boundary;
  switch (weight_.form) {
    case WeightForm::Exponential:
      boundary = boundaryMomentI(y);
      break;
    case WeightForm::Polynomial:
      boundary = LogValue::fromLog(1, logBeta(y + 1.0, weight_.q + 1.0));
      break;
    case WeightForm::Unweighted:
      boundary = LogValue::fromLog(1, -std::log(y + 1.0));
      break;
  }
  return LogValue::fromLog(1, logPre) * boundary;
}

LogValue MomentTable::generalizedMoment(const std::vector<double>& s) const {
  if (static_cast<int>(s.size()) != domain_.dimension())
    throw std::invalid_argument("generalizedMoment: dimension mismatch");
  for (double si : s)
    if (!(si >= 0.0))
      throw std::domain_error("generalizedMoment: exponents must be >= 0");
  {
    std::shared_lock lk(mutex_);
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
  }
  const LogValue v = computeMoment(s);
  std::unique_lock lk(mutex_);
  return cache_.emplace(s, v).first->second;
}

LogValue MomentTable::generalizedMomentQuadrature(
    const std::vector<double>& s) const {
  const int n = domain_.dimension();
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("generalizedMomentQuadrature: dimension");
  if (n == 1) {
    const double s0 = s[0];
    const LogIntegrand f = [&, s0](double r) -> LogValue {
      if (r <= 0.0 || r >= 1.0) return {};
      const double rr[1] = {r};
      return LogValue::fromLog(
          1, (s0 + 1.0) * std::log(r) + logWeight(domain_, weight_, rr));
    };
    return LogValue::fromLog(1, std::log(2.0 * kPi)) *
           integrate1D(f, 0.0, 1.0, quad_).valueOrThrow();
  }
  if (n != 2)
    throw std::invalid_argument(
        "generalizedMomentQuadrature: only n <= 2 supported");
  const LogIntegrand2D f = [&](double r1, double r2) -> LogValue {
    if (r1 <= 0.0 || r2 <= 0.0) return {};
    const double rr[2] = {r1, r2};
    if (domain_.rho(rr) >= 0.0) return {};
    return LogValue::fromLog(1, (s[0] + 1.0) * std::log(r1) +
                                    (s[1] + 1.0) * std::log(r2) +
                                    logWeight(domain_, weight_, rr));
  };
  return LogValue::fromLog(1, 2.0 * std::log(2.0 * kPi)) *
         integrate2DRadial(f, domain_, quad_).valueOrThrow();
}

LogValue MomentTable::phi(double x) const {
  std::vector<double> s(domain_.dimension(), 0.0);
  s[0] = x;
  return generalizedMoment(s);
}

double MomentTable::phiLog(double x) const {
  const LogValue v = phi(x);
  if (v.sign <= 0) throw std::runtime_error("phiLog: Phi(x) not positive");
  return v.logmag;
}

LogValue MomentTable::muWeight(double r1) const {
  if (domain_.dimension() != 2)
    throw std::invalid_argument("muWeight: requires a 2-dimensional domain");
  if (!(r1 >= 0.0 && r1 < 1.0))
    throw std::out_of_range("muWeight: r1 must be in [0, 1)");
  {
    std::shared_lock lk(mutex_);
    auto it = muCache_.find(r1);
    if (it != muCache_.end()) return it->second;
  }
  const double sr = domain_.sliceRadius(r1);
  LogValue v;
  if (sr > 0.0) {
    const LogIntegrand f = [&](double r2) -> LogValue {
      if (r2 <= 0.0) return {};
      const double rr[2] = {r1, r2};
      if (domain_.rho(rr) >= 0.0) return {};
      return LogValue::fromLog(
          1, std::log(r2) + logWeight(domain_, weight_, rr));
    };
    v = LogValue::fromLog(1, std::log(2.0 * kPi)) *
        integrate1D(f, 0.0, sr, quad_).valueOrThrow();
  }
  std::unique_lock lk(mutex_);
  return muCache_.emplace(r1, v).first->second;
}

LogValue MomentTable::deltaSliceIntegral(int n, double r1) const {
  {
    std::shared_lock lk(mutex_);
    auto it = deltaInnerCache_.find({n, r1});
    if (it != deltaInnerCache_.end()) return it->second;
  }
  LogValue v;
  const double s = r1 < 1.0 ? domain_.sliceRadius(r1) : 0.0;
  if (r1 > 0.0 && s > 0.0) {
    QuadratureSpec inner = quad_;
    inner.relTol = quad_.relTol / 10.0;
    const LogIntegrand f = [&](double r2) -> LogValue {
      if (r2 <= 0.0) return {};
      const double rr[2] = {r1, r2};
      if (domain_.rho(rr) >= 0.0) return {};
      try {
        return deltaN(domain_, n, rr);
      } catch (const std::domain_error&) {
        // FD cutoff band: exp(1/rho) there is below e^{-1e6}, negligible.
        return {};
      }
    };
    v = integrate1D(f, 0.0, s, inner).valueOrThrow();
  }
  std::unique_lock lk(mutex_);
  return deltaInnerCache_.emplace(std::make_pair(n, r1), v).first->second;
}

// Phi_n(x) = int r1^{x+n+1} delta_n(r1, r2) dr1 dr2: the power of r1 is
// constant on each slice, so the inner integral J_n(r1) factors out and is
// shared (cached) across every exponent x.
LogValue MomentTable::phiN(int n, double x) const {
  if (weight_.form != WeightForm::Exponential)
    throw std::invalid_argument("phiN: exponential weight only");
  const LogIntegrand outer = [&](double r1) -> LogValue {
    if (r1 <= 0.0 || r1 >= 1.0) return {};
    return LogValue::fromLog(1, (x + n + 1.0) * std::log(r1)) *
           deltaSliceIntegral(n, r1);
  };
  return integrate1D(outer, 0.0, 1.0, quad_).valueOrThrow();
}

LogValue MomentTable::phiTildeN(int n, double x, double a) const {
  if (weight_.form != WeightForm::Exponential)
    throw std::invalid_argument("phiTildeN: exponential weight only");
  if (!(a >= 0.0 && a < 1.0))
    throw std::invalid_argument("phiTildeN: threshold must be in [0,1)");
  const LogIntegrand outer = [&](double r1) -> LogValue {
    if (r1 <= 0.0 || r1 >= 1.0) return {};
    return LogValue::fromLog(1, (x + n + 1.0) * std::log(r1)) *
           deltaSliceIntegral(n, r1);
  };
  return integrate1D(outer, a, 1.0, quad_).valueOrThrow();
}

LogValue MomentTable::phiRestN(int n, double x, double a) const {
  if (a <= 0.0) return {};
  const LogIntegrand outer = [&](double r1) -> LogValue {
    if (r1 <= 0.0 || r1 >= 1.0) return {};
    return LogValue::fromLog(1, (x + n + 1.0) * std::log(r1)) *
           deltaSliceIntegral(n, r1);
  };
  // No boundary degeneracy at r1 = a.
  QuadratureSpec outerSpec = quad_;
  outerSpec.boundaryTransform = false;
  return integrate1D(outer, 0.0, a, outerSpec).valueOrThrow();
}

double MomentTable::thetaN(int n, double x, double a) const {
  const LogValue t = phiTildeN(n, x, a);
  if (t.sign <= 0) throw std::runtime_error("thetaN: Phi~_n not positive");
  double logs = 0.0;
  for (int j = 2; j <= n + 1; ++j) logs += std::log(x + j);
  return t.logmag - logs;
}

double MomentTable::positivityThreshold(int n) const {
  {
    std::shared_lock lk(mutex_);
    auto it = thresholdCache_.find(n);
    if (it != thresholdCache_.end()) return it->second;
  }
  const double a = deltaPositivityThreshold(domain_, n);
  std::unique_lock lk(mutex_);
  return thresholdCache_.emplace(n, a).first->second;
}

std::map<std::vector<double>, LogValue> MomentTable::momentCacheSnapshot()
    const {
  std::shared_lock lk(mutex_);
  return cache_;
}

std::map<double, LogValue> MomentTable::iCacheSnapshot() const {
  std::shared_lock lk(mutex_);
  return iCache_;
}

void MomentTable::preloadMomentCache(
    const std::map<std::vector<double>, LogValue>& c) {
  std::unique_lock lk(mutex_);
  for (const auto& [k, v] : c) cache_.emplace(k, v);
}

void MomentTable::preloadICache(const std::map<double, LogValue>& c) {
  std::unique_lock lk(mutex_);
  for (const auto& [k, v] : c) iCache_.emplace(k, v);
}

}  // namespace bergman
