// Timing comparison of the OpenMP sweep kernels against the serial reference
// paths, verifying along the way that both produce identical results.

#include <chrono>
#include <cstdio>
#include <memory>

#include "bergman/blowup.hpp"
#include "bergman/moments.hpp"
#include "bergman/sobolev.hpp"
#include "bergman/sweep.hpp"

namespace {

using namespace bergman;
using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timeIt(F&& f) {
  const auto t0 = Clock::now();
  f();
  return seconds(t0, Clock::now());
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", threadCount());

  MomentTable warm(DomainSpec::ball(2), WeightSpec::exponential(),
                   QuadratureSpec{});

  // Blowup sweep: fresh tables so neither run reuses the other's cache.
  {
    MomentTable serialTable(DomainSpec::ball(2), WeightSpec::exponential(),
                            QuadratureSpec{});
    MomentTable parallelTable(DomainSpec::ball(2), WeightSpec::exponential(),
                              QuadratureSpec{});
    std::vector<BlowupPoint> serialPts, parallelPts;
    const double ts = timeIt([&] {
      serialPts = blowupSweep(serialTable, 1.5, 8, 1e4, 12, /*parallel=*/false);
    });
    const double tp = timeIt([&] {
      parallelPts =
          blowupSweep(parallelTable, 1.5, 8, 1e4, 12, /*parallel=*/true);
    });
    bool identical = serialPts.size() == parallelPts.size();
    for (size_t i = 0; identical && i < serialPts.size(); ++i)
      identical = serialPts[i].logRatio == parallelPts[i].logRatio;
    std::printf("blowup sweep (49 points, m <= 1e4):\n");
    std::printf("  serial   %8.3f s\n", ts);
    std::printf("  parallel %8.3f s   speedup %.2fx   results %s\n\n", tp,
                ts / tp, identical ? "identical" : "DIFFER");
    if (!identical) return 1;
  }

  // Sobolev ratio sweep: moments are cached after the serial pass, so the
  // parallel pass measures the sweep overhead itself on a warm cache.
  {
    MomentTable table(DomainSpec::ball(2), WeightSpec::exponential(),
                      QuadratureSpec{});
    SobolevSweepResult s, p;
    const double ts = timeIt(
        [&] { s = sobolevRatioSweep(table, 1, 24, /*parallel=*/false); });
    const double tp = timeIt(
        [&] { p = sobolevRatioSweep(table, 1, 24, /*parallel=*/true); });
    const bool identical =
        s.supRatio == p.supRatio && s.argHolo == p.argHolo &&
        s.argAnti == p.argAnti && s.monomialCount == p.monomialCount;
    std::printf("sobolev ratio sweep (k = 1, degree <= 24):\n");
    std::printf("  serial (cold cache) %8.3f s\n", ts);
    std::printf("  parallel (warm)     %8.3f s   results %s\n\n", tp,
                identical ? "identical" : "DIFFER");
    if (!identical) return 1;
  }

  // dse band: same table, cold vs warm is symmetric because the window
  // moments are disjoint between halves of the band.
  {
    MomentTable serialTable(DomainSpec::ball(2), WeightSpec::exponential(),
                            QuadratureSpec{});
    MomentTable parallelTable(DomainSpec::ball(2), WeightSpec::exponential(),
                              QuadratureSpec{});
    double s = 0.0, p = 0.0;
    const double ts = timeIt(
        [&] { s = dseBandSpread(serialTable, 100, 160, 1.0 / 3.0, false); });
    const double tp = timeIt(
        [&] { p = dseBandSpread(parallelTable, 100, 160, 1.0 / 3.0, true); });
    std::printf("dse band spread (|gamma| in [100,160]):\n");
    std::printf("  serial   %8.3f s\n", ts);
    std::printf("  parallel %8.3f s   speedup %.2fx   results %s\n", tp,
                ts / tp, s == p ? "identical" : "DIFFER");
    if (s != p) return 1;
  }

  return 0;
}
