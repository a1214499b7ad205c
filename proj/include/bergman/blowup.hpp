#pragma once

#include <vector>

#include "bergman/moments.hpp"

namespace bergman {

// Smallest integer k with p(k+1) < 2(k-1), the test-family parameter for
// 1 < p < 2. Throws std::domain_error outside (1,2) (p > 2 is handled by
// duality, p = 2 needs no k).
int minimalK(double p);

// One point of the L^p norm-ratio sweep for the test functions z^{km} zbar^m:
//   log ratio = p (phi(2km) - phi(2(k-1)m)) - (phi(p(k+1)m) - phi(p(k-1)m)).
struct BlowupPoint {
  double p = 0.0;
  int k = 0;
  double m = 0.0;
  double logRatio = 0.0;
  double phi2km = 0.0;     // phi(2km)
  double phi2k1m = 0.0;    // phi(2(k-1)m)
  double phiPk1m = 0.0;    // phi(p(k+1)m)
  double phiPk_1m = 0.0;   // phi(p(k-1)m)
};

BlowupPoint blowupRatio(const MomentTable& table, double p, int k, double m);

// Log-spaced integer m sweep up to mMax (default 24 points per decade).
std::vector<BlowupPoint> blowupSweep(const MomentTable& table, double p, int k,
                                     double mMax, int pointsPerDecade = 24,
                                     bool parallel = true);

// For the exponential weight, phi(x) ~ -2 sqrt(x/2 + 1) + lower order (the
// boundary moment enters at argument x/2 + 1), so the log ratio grows like
// c(p,k) sqrt(m) with
//   c(p,k) = sqrt(2p) (sqrt(k+1) - sqrt(k-1)) - 2p (sqrt(k) - sqrt(k-1)).
// Positive for p in (1,2) with k = minimalK(p); negative at p = 2.
// Zero for bounded (polynomial/unweighted) oracle weights.
double predictedBlowupSlope(const WeightSpec& w, double p, int k);

struct BlowupSlopeFit {
  double measuredSlope = 0.0;
  double intercept = 0.0;
  double predictedSlope = 0.0;
  double relativeGap = 0.0;  // |measured - predicted| / |predicted|
};

// Least-squares slope of logRatio against sqrt(m). Requires the sweep to
// reach m >= 5e3.
BlowupSlopeFit fitBlowupSlope(const std::vector<BlowupPoint>& points,
                              double predictedSlope);

}  // namespace bergman
