#pragma once

#include <span>
#include <string>
#include <vector>

#include "bergman/log_value.hpp"

namespace bergman {

enum class DomainKind { Disc, Ball, Ellipsoid };

// A smooth complete Reinhardt domain given by a multi-radial defining
// function rho(r_1,...,r_n): negative inside the radial image, zero on its
// outer boundary. Shipped domains: the unit disc (n=1), the unit ball (any
// n), and complex ellipsoids |z_1|^{2a} + |z_2|^{2b} < 1 with integer
// exponents a,b >= 1. Immutable after construction.
class DomainSpec {
 public:
  static DomainSpec disc();
  static DomainSpec ball(int n);
  static DomainSpec ellipsoid(int a, int b);

  DomainKind kind() const { return kind_; }
  int dimension() const { return n_; }
  int ellipsoidA() const { return a_; }
  int ellipsoidB() const { return b_; }

  double rho(std::span<const double> r) const;
  // First and second radial partials in r_1.
  double rhoR1(std::span<const double> r) const;
  double rhoR1R1(std::span<const double> r) const;

  // r strictly inside the radial image (all radii >= 0, rho < 0).
  bool contains(std::span<const double> r) const;

  // Radius of the slice over |z_1| = r1 (the remaining coordinates form a
  // disc/ball of this radius). Throws std::out_of_range for r1 outside the
  // projection of the radial image onto the first axis, which is [0,1] for
  // all shipped domains.
  double sliceRadius(double r1) const;

  std::string name() const;

 private:
  DomainSpec(DomainKind k, int n, int a, int b) : kind_(k), n_(n), a_(a), b_(b) {}

  DomainKind kind_;
  int n_;
  int a_ = 1, b_ = 1;  // ellipsoid exponents
};

enum class WeightForm { Exponential, Polynomial, Unweighted };

// Weight lambda on the domain: exp(1/rho), (-rho)^q, or 1.
struct WeightSpec {
  WeightForm form = WeightForm::Exponential;
  double q = 0.0;  // polynomial exponent

  static WeightSpec exponential() { return {WeightForm::Exponential, 0.0}; }
  static WeightSpec polynomial(double q) { return {WeightForm::Polynomial, q}; }
  static WeightSpec unweighted() { return {WeightForm::Unweighted, 0.0}; }

  std::string name() const;
};

// log lambda(r). Throws std::domain_error when rho(r) >= 0.
double logWeight(const DomainSpec& d, const WeightSpec& w,
                 std::span<const double> r);

// delta_n(r1,r2) = (-1)^n d^n/dr1^n ( r2 exp(1/rho) ) for the exponential
// weight on a 2-dimensional domain. Closed forms for n = 1,2:
//   delta_1 = rho_{r1} r2 / rho^2 exp(1/rho)
//   delta_2 = [rho_{r1}^2 + rho (2 rho_{r1}^2 - rho_{r1r1} rho)] r2 / rho^4 exp(1/rho)
// n = 3,4 by Richardson-extrapolated central differences of the exponent
// increment, with exp(1/rho) at the center factored out so the stencil
// never underflows. Throws std::domain_error within boundaryCutoff of the
// boundary (finite differences unreliable there).
LogValue deltaN(const DomainSpec& d, int n, std::span<const double> r,
                double boundaryCutoff = 1e-6);

// Grid scan (gridSize x gridSize over the radial image) for the smallest
// threshold a < 1 such that delta_n > 0 on {a < r1 < 1}. Returns 1.0 when
// no such threshold is found on the grid.
double deltaPositivityThreshold(const DomainSpec& d, int n,
                                int gridSize = 400);

}  // namespace bergman
