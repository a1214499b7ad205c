#include "bergman/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

DomainSpec DomainSpec::disc() { return DomainSpec(DomainKind::Disc, 1, 1, 1); }

DomainSpec DomainSpec::ball(int n) {
  if (n < 1) throw std::invalid_argument("ball: dimension must be >= 1");
  return DomainSpec(DomainKind::Ball, n, 1, 1);
}

DomainSpec DomainSpec::ellipsoid(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("ellipsoid: exponents must be >= 1");
  return DomainSpec(DomainKind::Ellipsoid, 2, a, b);
}

double DomainSpec::rho(std::span<const double> r) const {
  switch (kind_) {
    case DomainKind::Disc:
      return r[0] * r[0] - 1.0;
    case DomainKind::Ball: {
      double s = 0.0;
      for (double ri : r) s += ri * ri;
      return s - 1.0;
    }
    case DomainKind::Ellipsoid:
      return std::pow(r[0], 2 * a_) + std::pow(r[1], 2 * b_) - 1.0;
  }
  return 0.0;
}

double DomainSpec::rhoR1(std::span<const double> r) const {
  switch (kind_) {
    case DomainKind::Disc:
    case DomainKind::Ball:
      return 2.0 * r[0];
    case DomainKind::Ellipsoid:
      return 2.0 * a_ * std::pow(r[0], 2 * a_ - 1);
  }
  return 0.0;
}

double DomainSpec::rhoR1R1(std::span<const double> r) const {
  switch (kind_) {
    case DomainKind::Disc:
    case DomainKind::Ball:
      return 2.0;
    case DomainKind::Ellipsoid:
      return 2.0 * a_ * (2 * a_ - 1) * std::pow(r[0], 2 * a_ - 2);
  }
  return 0.0;
}

bool DomainSpec::contains(std::span<const double> r) const {
  for (double ri : r)
    if (ri < 0.0) return false;
  return rho(r) < 0.0;
}

double DomainSpec::sliceRadius(double r1) const {
  if (r1 < 0.0 || r1 > 1.0)
    throw std::out_of_range("sliceRadius: r1 outside the radial projection");
  switch (kind_) {
    case DomainKind::Disc:
      throw std::logic_error("sliceRadius: undefined for n = 1");
    case DomainKind::Ball:
      return std::sqrt(std::max(0.0, 1.0 - r1 * r1));
    case DomainKind::Ellipsoid:
      return std::pow(std::max(0.0, 1.0 - std::pow(r1, 2 * a_)),
                      1.0 / (2.0 * b_));
  }
  return 0.0;
}

std::string DomainSpec::name() const {
  switch (kind_) {
    case DomainKind::Disc:
      return "disc";
    case DomainKind::Ball:
      return "ball";
    case DomainKind::Ellipsoid:
      return "ellipsoid(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
  }
  return "?";
}

std::string WeightSpec::name() const {
  switch (form) {
    case WeightForm::Exponential:
      return "exp";
    case WeightForm::Polynomial:
      return "poly:" + std::to_string(q);
    case WeightForm::Unweighted:
      return "none";
  }
  return "?";
}

double logWeight(const DomainSpec& d, const WeightSpec& w,
                 std::span<const double> r) {
  const double rho = d.rho(r);
  if (rho >= 0.0)
    throw std::domain_error("logWeight: point not strictly inside");
  switch (w.form) {
    case WeightForm::Exponential:
      return 1.0 / rho;
    case WeightForm::Polynomial:
      return w.q * std::log(-rho);
    case WeightForm::Unweighted:
      return 0.0;
  }
  return 0.0;
}

namespace {

// Central-difference stencils for f^(3), f^(4); O(h^2) truncation.
double stencil(int n, std::span<const double> f, double h) {
  // f holds f(x-2h), f(x-h), f(x), f(x+h), f(x+2h)
  if (n == 3)
    return (f[4] - 2.0 * f[3] + 2.0 * f[1] - f[0]) / (2.0 * h * h * h);
  return (f[4] - 4.0 * f[3] + 6.0 * f[2] - 4.0 * f[1] + f[0]) / (h * h * h * h);
}

// d^n/dr1^n of g(r1) = r2 exp(1/rho), scaled by exp(-1/rho(center)).
double fdDerivativeScaled(const DomainSpec& d, int n, double r1, double r2,
                          double h, double centerExponent) {
  double f[5];
  for (int j = -2; j <= 2; ++j) {
    const double rr[2] = {r1 + j * h, r2};
    const double rho = d.rho(rr);
    f[j + 2] = rho < 0.0 ? r2 * std::exp(1.0 / rho - centerExponent) : 0.0;
  }
  return stencil(n, f, h);
}

}  // namespace

LogValue deltaN(const DomainSpec& d, int n, std::span<const double> r,
                double boundaryCutoff) {
  if (d.dimension() != 2)
    throw std::invalid_argument("deltaN: requires a 2-dimensional domain");
  if (n < 1 || n > 4) throw std::invalid_argument("deltaN: n must be in 1..4");
  const double rho = d.rho(r);
  if (rho >= 0.0) throw std::domain_error("deltaN: point not strictly inside");
  const double r2 = r[1];
  const double rho1 = d.rhoR1(r);
  const double expPart = 1.0 / rho;  // log of exp(1/rho)
  if (n == 1) {
    const double pre = rho1 * r2 / (rho * rho);
    return LogValue::fromReal(pre) * LogValue::fromLog(1, expPart);
  }
  if (n == 2) {
    const double rho11 = d.rhoR1R1(r);
    const double bracket =
        rho1 * rho1 + rho * (2.0 * rho1 * rho1 - rho11 * rho);
    const double pre = bracket * r2 / (rho * rho * rho * rho);
    return LogValue::fromReal(pre) * LogValue::fromLog(1, expPart);
  }
  if (-rho < boundaryCutoff)
    throw std::domain_error("deltaN: too close to the boundary for FD");
  // distance to the outer boundary along r1 at fixed r2
  const double r1Edge = [&] {
    double rr[2] = {0.0, r[1]};
    // bisect rho(r1, r2) = 0 in r1
    double lo = r[0], hi = 1.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      rr[0] = mid;
      (d.rho(rr) < 0.0 ? lo : hi) = mid;
    }
    return lo;
  }();
  const double dist = std::max(r1Edge - r[0], boundaryCutoff);
  const double h = std::min(1e-3, dist / 10.0);
  const double coarse = fdDerivativeScaled(d, n, r[0], r[1], h, expPart);
  const double fine = fdDerivativeScaled(d, n, r[0], r[1], h / 2.0, expPart);
  const double richardson = (4.0 * fine - coarse) / 3.0;
  const double signFlip = (n % 2 == 0) ? 1.0 : -1.0;
  return LogValue::fromReal(signFlip * richardson) *
         LogValue::fromLog(1, expPart);
}

double deltaPositivityThreshold(const DomainSpec& d, int n, int gridSize) {
  // Scan the interior grid row by row in r1, from the boundary inward,
  // and report the smallest r1 row beyond which every sample is positive.
  const double cutoff = 2e-3;
  double threshold = 1.0;
  for (int i = gridSize - 1; i >= 1; --i) {
    const double r1 = static_cast<double>(i) / gridSize;
    bool rowPositive = true;
    const double s = d.sliceRadius(r1);
    for (int j = 1; j < gridSize; ++j) {
      const double r2 = s * j / gridSize;
      const double rr[2] = {r1, r2};
      if (-d.rho(rr) < cutoff) continue;  // FD cutoff band near the boundary
      LogValue v;
      try {
        v = deltaN(d, n, rr, cutoff);
      } catch (const std::domain_error&) {
        continue;
      }
      if (v.sign <= 0) {
        rowPositive = false;
        break;
      }
    }
    if (!rowPositive) return threshold;
    threshold = r1;
  }
  return threshold;
}

}  // namespace bergman
