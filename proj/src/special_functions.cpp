#include "bergman/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

namespace {

// B_{2n} / (2n (2n-1)), the Stirling asymptotic coefficients.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;

// Valid for x >= 12; the omitted term is below 1e-16 relative there.
double stirling(double x) {
  double s = kHalfLogTwoPi + (x - 0.5) * std::log(x) - x;
  const double r2 = 1.0 / (x * x);
  double p = 1.0 / x;
  for (double c : kStirling) {
    s += c * p;
    p *= r2;
  }
  return s;
}

}  // namespace

double logGamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("logGamma: argument must be > 0");
  // Shift into the Stirling regime: Gamma(x) = Gamma(x+m) / (x (x+1) ... ).
  double shift = 0.0;
  while (x < 12.0) {
    shift += std::log(x);
    x += 1.0;
  }
  return stirling(x) - shift;
}

double logBeta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("logBeta: arguments must be > 0");
  return logGamma(a) + logGamma(b) - logGamma(a + b);
}

double logFactorial(int n) {
  if (n < 0) throw std::domain_error("logFactorial: negative argument");
  return logGamma(static_cast<double>(n) + 1.0);
}

}  // namespace bergman
