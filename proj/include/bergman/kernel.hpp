#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "bergman/moments.hpp"
#include "bergman/multi_index.hpp"

namespace bergman {

// z^a zbar^b times a scalar.
struct MonomialFunction {
  MultiIndex holo;
  MultiIndex anti;
  LogValue scale = LogValue::one();

  bool isZero() const { return scale.isZero(); }
};

// Weighted Bergman kernel as a truncated monomial series,
//   B(z,w) = sum_{|alpha| <= J} c_alpha^2 z^alpha wbar^alpha,
// with c_alpha^2 = 1 / G(2 alpha). Immutable after construction.
class TruncatedKernel {
 public:
  TruncatedKernel(std::shared_ptr<const MomentTable> table, int maxDegree,
                  bool parallelBuild = true);

  int maxDegree() const { return maxDegree_; }
  const MomentTable& table() const { return *table_; }

  // c_alpha^2 for |alpha| <= maxDegree.
  LogValue coefficient(const MultiIndex& alpha) const;

  struct Eval {
    std::complex<double> value;
    double tailBound = 0.0;  // absolute geometric tail estimate
    int degree = 0;
    bool tailWarning = false;  // tail bound exceeds 10% of the partial sum
  };

  // Partial sum at interior points; |z_i w_i| must stay away from the
  // boundary for the geometric tail estimate to be meaningful.
  Eval eval(const std::vector<std::complex<double>>& z,
            const std::vector<std::complex<double>>& w) const;

 private:
  std::shared_ptr<const MomentTable> table_;
  int maxDegree_;
  std::vector<MultiIndex> indices_;  // (degree, lex) order
  std::vector<LogValue> coeffs_;
};

// Projection of a monomial-type function: radial symmetry makes the
// projection exact through moment ratios,
//   B(z^a zbar^b) = (G(2a) / G(2(a-b))) z^{a-b}   when a >= b componentwise,
// and zero otherwise.
MonomialFunction projectMonomial(const MomentTable& table,
                                 const MonomialFunction& f);

// Numerical check of the slice identity
//   int_{S_{w1}} B_Omega(z,w) lambda(w) dA(w_2) = mu(w1) B_D^mu(z_1, w_1).
// The left side combines the Omega kernel coefficients (reduction path) with
// a quadrature slice weight; the right side rebuilds the disc-mu kernel
// coefficients by nested quadrature against mu. Returns |LHS-RHS| / |RHS|,
// or the absolute difference when RHS is degenerate (slice weight -> 0).
double verifySliceIdentity(const std::shared_ptr<const MomentTable>& table,
                           std::complex<double> z1, std::complex<double> w1,
                           int maxDegree);

}  // namespace bergman
