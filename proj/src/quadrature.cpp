#include "bergman/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

void QuadratureSpec::validate() const {
  if (!(relTol > 0.0) || relTol > 1e-2)
    throw std::invalid_argument("quadrature: relTol must be in (0, 1e-2]");
  if (maxDepth < 10)
    throw std::invalid_argument("quadrature: maxDepth must be >= 10");
}

LogValue IntegralResult::valueOrThrow() const {
  if (!converged)
    throw std::runtime_error("quadrature: did not converge (rel err est " +
                             std::to_string(relErrEst) + " near " +
                             std::to_string(worstPanelAt) + ")");
  return value;
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelState {
  LogValue total;
  LogValue errSum;      // absolute error estimate, accumulated
  bool converged = true;
  double worstAt = 0.0;
  double worstErrLog = -std::numeric_limits<double>::infinity();
};

void gk15(const LogIntegrand& f, double a, double b, LogValue& kronrod,
          LogValue& gauss) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double logH = std::log(h);
  LogValue k{}, g{};
  for (int i = 0; i < 8; ++i) {
    const double off = h * kXgk[i];
    const LogValue fp = f(c + off);
    const LogValue fm = i < 7 ? f(c - off) : LogValue{};
    const double lwk = std::log(kWgk[i]) + logH;
    k = k + LogValue{fp.sign, fp.logmag + lwk};
    if (i < 7) k = k + LogValue{fm.sign, fm.logmag + lwk};
    if (i % 2 == 1 && i < 7) {
      const double lwg = std::log(kWg[i / 2]) + logH;
      g = g + LogValue{fp.sign, fp.logmag + lwg};
      g = g + LogValue{fm.sign, fm.logmag + lwg};
    }
    if (i == 7) {
      const double lwg = std::log(kWg[3]) + logH;
      g = g + LogValue{fp.sign, fp.logmag + lwg};
    }
  }
  kronrod = k;
  gauss = g;
}

// scaleLog is the log of a rough estimate of the enclosing segment's
// integral: panels whose error is negligible on that scale are accepted even
// when their own relative error stalls (integrands like r^x near r = 0 span
// thousands of orders of magnitude and never converge panel-relatively).
void adaptivePanel(const LogIntegrand& f, double a, double b, double relTol,
                   int depth, double scaleLog, PanelState& st) {
  LogValue k, g;
  gk15(f, a, b, k, g);
  const LogValue err = abs(k - g);
  // A log-magnitude representation carries relative rounding noise of order
  // eps * |log| from the log-domain sums, and integrands built from exact
  // doubles (e.g. exp(1/rho) with rho formed by cancellation) add noise of
  // order eps * log^2. For values like e^{-5000} that floor sits far above
  // any fixed relTol, |K - G| stalls there, and subdividing cannot reduce it.
  const double lm = std::max(1.0, std::fabs(k.logmag));
  const double noiseLog = std::log(4e-16 * std::max(lm, lm * lm));
  const double logTol = std::max(std::log(relTol), noiseLog);
  const bool small =
      err.sign == 0 ||
      (k.sign != 0 && err.logmag <= k.logmag + logTol) ||
      err.logmag <= scaleLog + std::log(relTol) - 4.0;
  if (small || depth <= 0) {
    st.total = st.total + k;
    st.errSum = st.errSum + err;
    if (!small) {
      st.converged = false;
      if (err.logmag > st.worstErrLog) {
        st.worstErrLog = err.logmag;
        st.worstAt = 0.5 * (a + b);
      }
    }
    return;
  }
  const double mid = 0.5 * (a + b);
  adaptivePanel(f, a, mid, relTol, depth - 1, scaleLog, st);
  adaptivePanel(f, mid, b, relTol, depth - 1, scaleLog, st);
}

// One non-adaptive pass over (a, b) to seed the absolute error floor. The
// scale is the integral of |f|, not of f: for signed integrands whose total
// nearly cancels, errors below relTol * int |f| are at the rounding level of
// the cancellation itself and refining panels further cannot recover them.
double roughScaleLog(const LogIntegrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double logH = std::log(h);
  LogValue mass{};
  for (int i = 0; i < 8; ++i) {
    const double off = h * kXgk[i];
    const double lwk = std::log(kWgk[i]) + logH;
    const LogValue fp = f(c + off);
    mass = mass + LogValue{fp.sign == 0 ? 0 : 1, fp.logmag + lwk};
    if (i < 7) {
      const LogValue fm = f(c - off);
      mass = mass + LogValue{fm.sign == 0 ? 0 : 1, fm.logmag + lwk};
    }
  }
  return mass.sign == 0 ? -std::numeric_limits<double>::infinity()
                        : mass.logmag;
}

}  // namespace

IntegralResult integrate1D(const LogIntegrand& f, double lo, double hi,
                           const QuadratureSpec& spec) {
  spec.validate();
  if (!(hi > lo)) throw std::invalid_argument("integrate1D: empty interval");
  PanelState st;
  if (!spec.boundaryTransform) {
    adaptivePanel(f, lo, hi, spec.relTol, spec.maxDepth,
                  roughScaleLog(f, lo, hi), st);
  } else {
    // Geometric segments shrinking toward hi. Contributions of
    // exp(-1/(hi-r))-type integrands first grow toward the interior peak,
    // then collapse; stop after two consecutive segments that are both
    // negligible against the running total and decreasing.
    const double width = hi - lo;
    const double logStopGap = std::log(spec.relTol) - 7.0;
    int negligibleStreak = 0;
    double prevSegLog = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 2 * spec.maxDepth; ++j) {
      const double a = j == 0 ? lo : hi - width * std::ldexp(1.0, -j);
      const double b = hi - width * std::ldexp(1.0, -(j + 1));
      if (!(b > a)) break;
      PanelState seg;
      adaptivePanel(f, a, b, spec.relTol, spec.maxDepth,
                    roughScaleLog(f, a, b), seg);
      st.total = st.total + seg.total;
      st.errSum = st.errSum + seg.errSum;
      if (!seg.converged) {
        st.converged = false;
        if (seg.worstErrLog > st.worstErrLog) {
          st.worstErrLog = seg.worstErrLog;
          st.worstAt = seg.worstAt;
        }
      }
      const double segLog = seg.total.sign == 0
                                ? -std::numeric_limits<double>::infinity()
                                : seg.total.logmag;
      const bool negligible = st.total.sign != 0 &&
                              segLog < st.total.logmag + logStopGap &&
                              segLog <= prevSegLog;
      negligibleStreak = negligible ? negligibleStreak + 1 : 0;
      prevSegLog = segLog;
      if (j >= 6 && negligibleStreak >= 2) break;
    }
  }
  IntegralResult res;
  res.value = st.total;
  res.converged = st.converged;
  res.worstPanelAt = st.worstAt;
  if (st.errSum.sign == 0) {
    res.relErrEst = 0.0;
  } else if (st.total.sign == 0) {
    res.relErrEst = std::numeric_limits<double>::infinity();
    res.converged = false;
  } else {
    res.relErrEst = std::exp(st.errSum.logmag - st.total.logmag);
  }
  return res;
}

IntegralResult integrate2DRadial(const LogIntegrand2D& f, const DomainSpec& d,
                                 const QuadratureSpec& spec, double outerLo) {
  spec.validate();
  if (d.dimension() != 2)
    throw std::invalid_argument("integrate2DRadial: 2-dimensional domains only");
  QuadratureSpec inner = spec;
  inner.relTol = spec.relTol / 10.0;
  bool innerConverged = true;
  double innerWorstR1 = 0.0;
  double innerWorstErr = 0.0;
  const LogIntegrand outer = [&](double r1) -> LogValue {
    const double s = d.sliceRadius(r1);
    if (!(s > 0.0)) return {};
    IntegralResult in = integrate1D(
        [&](double r2) { return f(r1, r2); }, 0.0, s, inner);
    if (!in.converged && in.relErrEst > innerWorstErr) {
      innerConverged = false;
      innerWorstErr = in.relErrEst;
      innerWorstR1 = r1;
    }
    return in.value;
  };
  IntegralResult res = integrate1D(outer, outerLo, 1.0, spec);
  if (!innerConverged) {
    res.converged = false;
    res.worstPanelAt = innerWorstR1;
    res.relErrEst = std::max(res.relErrEst, innerWorstErr);
  }
  return res;
}

}  // namespace bergman
