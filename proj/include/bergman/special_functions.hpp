#pragma once

#include <span>

namespace bergman {

// log Gamma(x) for x > 0, Stirling series with recurrence shift for small
// arguments. Relative error <= 1e-12 on [0.5, 1e6] (checked against the
// recurrence logGamma(x+1) = logGamma(x) + log x in the tests).
// Throws std::domain_error for x <= 0.
double logGamma(double x);

// log B(a,b) = logGamma(a) + logGamma(b) - logGamma(a+b), a,b > 0.
double logBeta(double a, double b);

// log n! for integer n >= 0.
double logFactorial(int n);

}  // namespace bergman
