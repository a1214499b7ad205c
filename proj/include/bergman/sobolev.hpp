#pragma once

#include <vector>

#include "bergman/kernel.hpp"
#include "bergman/moments.hpp"
#include "bergman/multi_index.hpp"

namespace bergman {

// d_gamma^2 = G(2 gamma), the weighted L2 norm square of z^gamma.
LogValue dGamma2(const MomentTable& table, const MultiIndex& gamma);

// int_0^{pi/2} cos^{2g1+1} sin^{2g2+1} = (1/2) g1! g2! / (|g|+1)!   (n = 2).
LogValue trigMoment(const MultiIndex& gamma);

// The normalized band quantity for the monomial-norm asymptotics: log d^2
// with the e^{-2 sqrt(|g|+1)}, (|g|+1)^{-q} and factorial factors divided
// out. Flat in |gamma| exactly when the asymptotic estimate holds with
// exponent q.
struct NormalizedDGamma {
  MultiIndex gamma;
  double logD2 = 0.0;
  double normalized = 0.0;
  double qUsed = 0.0;
};

NormalizedDGamma dseBandRatio(const MomentTable& table,
                              const MultiIndex& gamma, double q);

// Band width sweep: max - min of the normalized value over |gamma| in
// [totalLo, totalHi]; returns exp(max - min).
double dseBandSpread(const MomentTable& table, int totalLo, int totalHi,
                     double q, bool parallel = true);

// d_alpha d_{alpha+2beta} / d_{alpha+beta}^2, the reverse Cauchy-Schwarz
// ratio. Always >= 1 by log-convexity; bounded per beta.
double reverseCS(const MomentTable& table, const MultiIndex& alpha,
                 const MultiIndex& beta);

// -2 (sqrt(|a|+1) + sqrt(|a+2b|+1) - 2 sqrt(|a+b|+1)); lies in [0, 2|b|].
double sqrtExprBound(const MultiIndex& alpha, const MultiIndex& beta);

// The coefficient of z^{alpha+2beta} in M_beta(z^alpha), split into the
// binomial-ratio part (always <= 0 in log) and the moment part.
struct MBetaCoefficient {
  MultiIndex alpha, beta;
  double binomPart = 0.0;   // log of (a+b)!(a+b)! / (a! (a+2b)!)
  double momentPart = 0.0;  // log of d_alpha^2 / d_{alpha+beta}^2
  double total = 0.0;
  double normRatio = 0.0;   // ||M_beta z^alpha|| / ||z^alpha||
};

MBetaCoefficient mBetaCoeff(const MomentTable& table, const MultiIndex& alpha,
                            const MultiIndex& beta);

// Relative error of the adjoint identity
//   <z^{gamma-beta}, d^beta z^gamma> = <d^beta M_beta z^{gamma-beta}, z^gamma>
// with both sides reduced to falling factorials times d^2 values.
double adjointIdentityRelErr(const MomentTable& table, const MultiIndex& gamma,
                             const MultiIndex& beta);

// Squared Sobolev norm ||f||_{k,mu}^2 = sum_{|beta+gamma| <= k} of the
// weighted L2 norms of the mixed derivatives; exact finite sum for
// monomial-type f.
LogValue sobolevNormSquared(const MomentTable& table,
                            const MonomialFunction& f, int k);

struct SobolevSweepResult {
  double supRatio = 0.0;
  MultiIndex argHolo, argAnti;  // monomial attaining the sup
  int monomialCount = 0;
};

// sup over monomials z^a zbar^b, |a+b| <= maxTotal, of
// ||B f||_{k,mu} / ||f||_{k,mu}.
SobolevSweepResult sobolevRatioSweep(const MomentTable& table, int k,
                                     int maxTotal, bool parallel = true);

}  // namespace bergman
