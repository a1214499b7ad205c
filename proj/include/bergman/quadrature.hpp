#pragma once

#include <functional>

#include "bergman/domain.hpp"
#include "bergman/log_value.hpp"

namespace bergman {

struct QuadratureSpec {
  double relTol = 1e-10;
  int maxDepth = 60;
  bool boundaryTransform = true;  // geometric refinement toward endpoints

  void validate() const;
};

// Integrand given as a LogValue (sign + log magnitude) so boundary-degenerate
// factors like exp(1/rho) stay representable everywhere.
using LogIntegrand = std::function<LogValue(double)>;
using LogIntegrand2D = std::function<LogValue(double, double)>;

struct IntegralResult {
  LogValue value;
  double relErrEst = 0.0;  // achieved relative error estimate
  bool converged = true;
  double worstPanelAt = 0.0;  // location of the least-converged panel

  LogValue valueOrThrow() const;  // throws on non-convergence
};

// Adaptive Gauss-Kronrod 7-15 over (lo, hi), panel sums accumulated in the
// log domain in a fixed order. With boundaryTransform on, the interval is
// first split into geometrically shrinking segments toward hi so that the
// essential decay of exp(-1/(hi-r))-type integrands is resolved at fixed
// depth; segments stop once their contribution falls below the tolerance.
IntegralResult integrate1D(const LogIntegrand& f, double lo, double hi,
                           const QuadratureSpec& spec);

// Iterated radial integral over the radial image of a 2-dimensional domain:
// outer in r1 over (0,1), inner in r2 over (0, sliceRadius(r1)) at relTol/10.
// outerLo > 0 restricts the outer integral to (outerLo, 1).
IntegralResult integrate2DRadial(const LogIntegrand2D& f, const DomainSpec& d,
                                 const QuadratureSpec& spec,
                                 double outerLo = 0.0);

}  // namespace bergman
