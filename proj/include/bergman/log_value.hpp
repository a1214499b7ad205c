#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace bergman {

// Sign + log-magnitude scalar. Exponentially small quantities (the weight
// exp(1/rho) gets as small as e^{-2 sqrt(x)} with x ~ 1e5) never leave the
// log domain until a report boundary.
struct LogValue {
  int sign = 0;           // -1, 0, +1
  double logmag = -std::numeric_limits<double>::infinity();

  constexpr bool isZero() const { return sign == 0; }

  static LogValue zero() { return {}; }

  static LogValue one() { return {1, 0.0}; }

  static LogValue fromReal(double x) {
    if (x == 0.0) return {};
    return {x > 0.0 ? 1 : -1, std::log(std::fabs(x))};
  }

  // sgn * e^{lm}
  static LogValue fromLog(int sgn, double lm) {
    if (sgn == 0) return {};
    return {sgn, lm};
  }

  // May under/overflow; callers convert only at report boundaries.
  double toReal() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(logmag);
  }
};

inline LogValue operator*(const LogValue& a, const LogValue& b) {
  if (a.sign == 0 || b.sign == 0) return {};
  return {a.sign * b.sign, a.logmag + b.logmag};
}

inline LogValue operator/(const LogValue& a, const LogValue& b) {
  if (a.sign == 0) return {};
  return {a.sign * b.sign, a.logmag - b.logmag};
}

inline LogValue operator-(const LogValue& a) {
  return {-a.sign, a.logmag};
}

// Max-shift accumulation: the larger magnitude is factored out so no
// intermediate can overflow or underflow.
inline LogValue logAdd(LogValue a, LogValue b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  if (a.logmag < b.logmag) {
    LogValue t = a;
    a = b;
    b = t;
  }
  const double d = b.logmag - a.logmag;  // <= 0
  if (a.sign == b.sign) return {a.sign, a.logmag + std::log1p(std::exp(d))};
  if (d == 0.0) return {};  // exact cancellation
  return {a.sign, a.logmag + std::log(-std::expm1(d))};
}

inline LogValue operator+(const LogValue& a, const LogValue& b) {
  return logAdd(a, b);
}

inline LogValue operator-(const LogValue& a, const LogValue& b) {
  return logAdd(a, -b);
}

inline LogValue abs(const LogValue& a) {
  return {a.sign == 0 ? 0 : 1, a.logmag};
}

// a^e for real e; requires a >= 0.
inline LogValue pow(const LogValue& a, double e) {
  if (a.sign == 0) return e == 0.0 ? LogValue::one() : LogValue::zero();
  return {1, a.logmag * e};
}

inline bool operator==(const LogValue& a, const LogValue& b) {
  if (a.sign != b.sign) return false;
  if (a.sign == 0) return true;
  return a.logmag == b.logmag;
}

// Signed-value ordering.
inline bool operator<(const LogValue& a, const LogValue& b) {
  if (a.sign != b.sign) return a.sign < b.sign;
  if (a.sign == 0) return false;
  return a.sign > 0 ? a.logmag < b.logmag : a.logmag > b.logmag;
}

}  // namespace bergman
