#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/log_value.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

// The boundary moment I(y) = int_0^1 R^y exp(-1/(1-R)) dR, the scalar that
// carries the e^{-2 sqrt(y)} asymptotics of every exponential-weight moment.
LogValue boundaryMomentI(double y, const QuadratureSpec& spec);

// Least-squares fit of log I(x) = -a sqrt(x) - q log(x) + C.
struct AsymptoticFit {
  double sqrtCoeff = 0.0;     // a; the e^{-2 sqrt x} factor gives a ~ 2
  double polyExponent = 0.0;  // q; reported, not asserted
  double constant = 0.0;
  double residual = 0.0;      // RMS residual of the fit
};

// Requires a log-spaced grid of >= 20 points spanning at least [1e2, 1e5].
AsymptoticFit fitKappaExponent(const std::vector<double>& xGrid,
                               const QuadratureSpec& spec);

// Computes and caches moment-type quantities for one (domain, weight) pair:
// generalized moments G(s), the moment function Phi(x) = G((x,0,...)), the
// auxiliary slice weight mu(r1), and the integration-by-parts integrals
// Phi_n / Phi~_n. Concurrent reads and insert-if-absent writes are safe;
// repeated lookups return bit-identical values.
class MomentTable {
 public:
  MomentTable(DomainSpec domain, WeightSpec weight, QuadratureSpec quad);

  const DomainSpec& domain() const { return domain_; }
  const WeightSpec& weight() const { return weight_; }
  const QuadratureSpec& quadSpec() const { return quad_; }

  // G(s) = int_Omega |z_1|^{s_1} ... |z_n|^{s_n} lambda dV, s_i >= 0.
  // Ball/disc use the Dirichlet reduction
  //   G(s) = pi^n [prod Gamma(s_i/2+1) / Gamma(n + sum s_i/2)] W(sum s_i/2 + n - 1)
  // with W the 1-dimensional boundary factor of the weight; ellipsoids go
  // through 2D radial quadrature. Results are cached.
  LogValue generalizedMoment(const std::vector<double>& s) const;

  // Direct 2D radial quadrature path (n <= 2), bypassing the reduction and
  // the cache; the self-consistency oracle against generalizedMoment.
  LogValue generalizedMomentQuadrature(const std::vector<double>& s) const;

  // Phi(x) = G((x, 0, ..., 0)); phiLog is its natural log.
  LogValue phi(double x) const;
  double phiLog(double x) const;

  // mu(r1) = lambda-weighted area of the slice over |z_1| = r1 (n = 2).
  LogValue muWeight(double r1) const;

  // Phi_n(x) = int_R r1^{x+n+1} delta_n dr1 dr2 over the full radial image;
  // Phi~_n restricts to {a < r1 < 1}; the rest integral covers {r1 < a}.
  // Exponential weight only.
  LogValue phiN(int n, double x) const;
  LogValue phiTildeN(int n, double x, double a) const;
  LogValue phiRestN(int n, double x, double a) const;

  // theta_n(x) = log Phi~_n(x) - sum_{j=2}^{n+1} log(x+j).
  double thetaN(int n, double x, double a) const;

  // Cached grid scan for the delta_n positivity threshold a_n.
  double positivityThreshold(int n) const;

  LogValue boundaryMomentI(double y) const;  // cached

  // Cache persistence hooks.
  std::map<std::vector<double>, LogValue> momentCacheSnapshot() const;
  std::map<double, LogValue> iCacheSnapshot() const;
  void preloadMomentCache(const std::map<std::vector<double>, LogValue>& c);
  void preloadICache(const std::map<double, LogValue>& c);

  bool hasReductionFastPath() const;

 private:
  LogValue computeMoment(const std::vector<double>& s) const;

  DomainSpec domain_;
  WeightSpec weight_;
  QuadratureSpec quad_;

  mutable std::shared_mutex mutex_;
  mutable std::map<std::vector<double>, LogValue> cache_;
  mutable std::map<double, LogValue> iCache_;
  // J_n(r1) = int_0^{sliceRadius(r1)} delta_n(r1, r2) dr2; the inner slice
  // integral of the Phi_n family is independent of x and shared across every
  // exponent through this cache.
  LogValue deltaSliceIntegral(int n, double r1) const;

  mutable std::map<double, LogValue> muCache_;
  mutable std::map<std::pair<int, double>, LogValue> deltaInnerCache_;
  mutable std::map<int, double> thresholdCache_;
};

}  // namespace bergman
