#include "bergman/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergman/sweep.hpp"

namespace bergman {

int minimalK(double p) {
  if (!(p > 1.0 && p < 2.0))
    throw std::domain_error("minimalK: requires 1 < p < 2");
  for (int k = 2;; ++k)
    if (p * (k + 1) < 2.0 * (k - 1)) return k;
}

BlowupPoint blowupRatio(const MomentTable& table, double p, int k, double m) {
  if (!(p > 1.0) || k < 2 || !(m >= 1.0))
    throw std::invalid_argument("blowupRatio: need p > 1, k >= 2, m >= 1");
  BlowupPoint pt;
  pt.p = p;
  pt.k = k;
  pt.m = m;
  pt.phi2km = table.phiLog(2.0 * k * m);
  pt.phi2k1m = table.phiLog(2.0 * (k - 1) * m);
  pt.phiPk1m = table.phiLog(p * (k + 1) * m);
  pt.phiPk_1m = table.phiLog(p * (k - 1) * m);
  pt.logRatio = p * (pt.phi2km - pt.phi2k1m) - (pt.phiPk1m - pt.phiPk_1m);
  return pt;
}

std::vector<BlowupPoint> blowupSweep(const MomentTable& table, double p, int k,
                                     double mMax, int pointsPerDecade,
                                     bool parallel) {
  if (!(mMax >= 10.0))
    throw std::invalid_argument("blowupSweep: mMax must be >= 10");
  std::vector<double> ms;
  const double step = 1.0 / pointsPerDecade;
  long long prev = 0;
  for (double e = 0.0;; e += step) {
    const double m = std::round(std::pow(10.0, e));
    if (m > mMax) break;
    const long long mi = static_cast<long long>(m);
    if (mi != prev) {
      ms.push_back(static_cast<double>(mi));
      prev = mi;
    }
  }
  std::vector<BlowupPoint> out(ms.size());
  parallelFor(
      ms.size(), [&](std::size_t i) { out[i] = blowupRatio(table, p, k, ms[i]); },
      parallel);
  return out;
}

double predictedBlowupSlope(const WeightSpec& w, double p, int k) {
  if (w.form != WeightForm::Exponential) return 0.0;
  return std::sqrt(2.0 * p) * (std::sqrt(k + 1.0) - std::sqrt(k - 1.0)) -
         2.0 * p * (std::sqrt(static_cast<double>(k)) - std::sqrt(k - 1.0));
}

BlowupSlopeFit fitBlowupSlope(const std::vector<BlowupPoint>& points,
                              double predictedSlope) {
  double mTop = 0.0;
  for (const auto& pt : points) mTop = std::max(mTop, pt.m);
  if (points.size() < 4 || mTop < 5e3)
    throw std::invalid_argument("fitBlowupSlope: sweep must reach m >= 5e3");
  double sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0;
  for (const auto& pt : points) {
    const double x = std::sqrt(pt.m);
    sx += x;
    sxx += x * x;
    sy += pt.logRatio;
    sxy += x * pt.logRatio;
  }
  const double nPts = static_cast<double>(points.size());
  const double det = nPts * sxx - sx * sx;
  if (std::fabs(det) < 1e-12)
    throw std::runtime_error("fitBlowupSlope: ill-conditioned fit");
  BlowupSlopeFit fit;
  fit.measuredSlope = (nPts * sxy - sx * sy) / det;
  fit.intercept = (sy * sxx - sx * sxy) / det;
  fit.predictedSlope = predictedSlope;
  fit.relativeGap =
      predictedSlope != 0.0
          ? std::fabs(fit.measuredSlope - predictedSlope) /
                std::fabs(predictedSlope)
          : std::fabs(fit.measuredSlope);
  return fit;
}

}  // namespace bergman
