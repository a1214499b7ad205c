// Command-line laboratory for weighted Bergman moment experiments.
//
// Subcommands: moment, kernel, project, blowup, sobolev, kappa-fit,
// slice-check. Data goes to --out-file (or stdout); a one-line summary goes
// to stderr. Exit codes: 0 success, 1 usage error, 2 validation failure,
// 3 numerical non-convergence.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bergman/blowup.hpp"
#include "bergman/domain.hpp"
#include "bergman/kernel.hpp"
#include "bergman/moments.hpp"
#include "bergman/report.hpp"
#include "bergman/sobolev.hpp"
#include "bergman/sweep.hpp"

namespace {

using namespace bergman;

DomainSpec parseDomain(const std::string& s) {
  if (s == "disc") return DomainSpec::disc();
  if (s.rfind("ball", 0) == 0) {
    const std::string rest = s.substr(4);
    const int n = rest.empty() ? 2 : std::stoi(rest[0] == ':' ? rest.substr(1) : rest);
    return DomainSpec::ball(n);
  }
  if (s.rfind("ellipsoid:", 0) == 0) {
    const std::string rest = s.substr(10);
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("domain: expected ellipsoid:a,b");
    return DomainSpec::ellipsoid(std::stoi(rest.substr(0, comma)),
                                 std::stoi(rest.substr(comma + 1)));
  }
  throw std::invalid_argument("domain: unknown '" + s +
                              "' (disc | ball[:n] | ellipsoid:a,b)");
}

WeightSpec parseWeight(const std::string& s) {
  if (s == "exp") return WeightSpec::exponential();
  if (s == "none") return WeightSpec::unweighted();
  if (s.rfind("poly:", 0) == 0) return WeightSpec::polynomial(std::stod(s.substr(5)));
  throw std::invalid_argument("weight: unknown '" + s + "' (exp | poly:q | none)");
}

std::vector<double> parseCommaList(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  if (out.empty()) throw std::invalid_argument("expected comma-separated numbers");
  return out;
}

MultiIndex parseIndex(const std::string& s) {
  std::vector<int> v;
  for (double d : parseCommaList(s)) v.push_back(static_cast<int>(d));
  return MultiIndex(v);
}

// "lo:hi:steps" -> log-spaced grid, endpoints included.
std::vector<double> parseGrid(const std::string& s) {
  std::stringstream ss(s);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') ||
      !std::getline(ss, c, ':'))
    throw std::invalid_argument("grid: expected lo:hi:steps");
  const double lo = std::stod(a), hi = std::stod(b);
  const int steps = std::stoi(c);
  if (!(lo > 0.0 && hi > lo && steps >= 2))
    throw std::invalid_argument("grid: need 0 < lo < hi and steps >= 2");
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i)
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (steps - 1));
  return g;
}

std::string resolveCachePath(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  if (const char* dir = std::getenv("BERGMAN_CACHE_DIR"))
    return std::string(dir) + "/" + path;
  return path;
}

void emit(const ExperimentReport& report, const std::string& format,
          const std::string& outFile) {
  const std::string text = format == "json" ? report.toJson() : report.toCsv();
  if (outFile.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(outFile);
    if (!out) throw std::runtime_error("cannot write " + outFile);
    out << text;
  }
}

struct CommonOpts {
  std::string domain = "ball:2";
  std::string weight = "exp";
  std::string format = "csv";
  std::string outFile;
  std::string cacheFile;
  double relTol = 1e-10;
  bool serial = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--domain", domain, "disc | ball[:n] | ellipsoid:a,b");
    cmd->add_option("--weight", weight, "exp | poly:q | none");
    cmd->add_option("--out", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out-file", outFile, "write the report here (default stdout)");
    cmd->add_option("--cache", cacheFile,
                    "moment cache file (relative to $BERGMAN_CACHE_DIR)");
    cmd->add_option("--rel-tol", relTol, "quadrature relative tolerance");
    cmd->add_flag("--serial", serial, "disable parallel sweeps");
  }

  std::shared_ptr<MomentTable> makeTable() const {
    QuadratureSpec q;
    q.relTol = relTol;
    q.validate();
    auto table = std::make_shared<MomentTable>(parseDomain(domain),
                                               parseWeight(weight), q);
    const std::string path = resolveCachePath(cacheFile);
    if (!path.empty() && std::ifstream(path).good())
      loadMomentCache(*table, path);
    return table;
  }

  void saveCache(const MomentTable& table) const {
    const std::string path = resolveCachePath(cacheFile);
    if (!path.empty()) saveMomentCache(table, path);
  }

  void baseConfig(ExperimentReport& r) const {
    r.config["domain"] = domain;
    r.config["weight"] = weight;
    r.config["rel_tol"] = formatDouble(relTol);
    r.config["parallel"] = serial ? "0" : "1";
  }
};

int runMoment(const CommonOpts& common, const std::string& exponents,
              const std::string& xGrid) {
  auto table = common.makeTable();
  ExperimentReport r;
  r.command = "moment";
  common.baseConfig(r);
  if (!exponents.empty()) {
    r.config["exponents"] = exponents;
    const auto s = parseCommaList(exponents);
    const LogValue g = table->generalizedMoment(s);
    r.columns = {"log_moment", "sign"};
    r.rows.push_back({g.logmag, static_cast<double>(g.sign)});
    r.summary["log_moment"] = formatDouble(g.logmag);
    std::cerr << "moment: log G = " << formatDouble(g.logmag) << "\n";
  } else {
    const auto grid = parseGrid(xGrid);
    r.config["x_grid"] = xGrid;
    r.columns = {"x", "log_phi", "rel_err_est"};
    std::vector<double> phis(grid.size());
    parallelFor(
        grid.size(), [&](std::size_t i) { phis[i] = table->phiLog(grid[i]); },
        !common.serial);
    for (size_t i = 0; i < grid.size(); ++i)
      r.rows.push_back({grid[i], phis[i], common.relTol});
    r.summary["points"] = std::to_string(grid.size());
    r.summary["log_phi_last"] = formatDouble(phis.back());
    std::cerr << "moment: " << grid.size() << " points, log Phi("
              << formatDouble(grid.back()) << ") = " << formatDouble(phis.back())
              << "\n";
  }
  emit(r, common.format, common.outFile);
  common.saveCache(*table);
  return 0;
}

int runKernel(const CommonOpts& common, const std::string& at, int degree) {
  auto table = common.makeTable();
  const auto v = parseCommaList(at);
  const int n = table->domain().dimension();
  if (static_cast<int>(v.size()) != 2 * n)
    throw std::invalid_argument("kernel: --at needs z1..zn,w1..wn (real parts)");
  std::vector<std::complex<double>> z(n), w(n);
  for (int i = 0; i < n; ++i) {
    z[i] = v[i];
    w[i] = v[n + i];
  }
  TruncatedKernel kernel(table, degree, !common.serial);
  const auto ev = kernel.eval(z, w);
  ExperimentReport r;
  r.command = "kernel";
  common.baseConfig(r);
  r.config["at"] = at;
  r.config["degree"] = std::to_string(degree);
  r.columns = {"value_re", "value_im", "tail_bound", "degree"};
  r.rows.push_back({ev.value.real(), ev.value.imag(), ev.tailBound,
                    static_cast<double>(ev.degree)});
  r.summary["value_re"] = formatDouble(ev.value.real());
  r.summary["value_im"] = formatDouble(ev.value.imag());
  r.summary["tail_bound"] = formatDouble(ev.tailBound);
  r.summary["tail_warning"] = ev.tailWarning ? "1" : "0";
  std::cerr << "kernel: value = " << formatDouble(ev.value.real()) << " + "
            << formatDouble(ev.value.imag()) << "i, tail <= "
            << formatDouble(ev.tailBound) << "\n";
  emit(r, "json", common.outFile);
  common.saveCache(*table);
  return 0;
}

int runProject(const CommonOpts& common, const std::string& monomial) {
  const auto colon = monomial.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("project: --monomial needs a1,..:b1,..");
  const MultiIndex a = parseIndex(monomial.substr(0, colon));
  const MultiIndex b = parseIndex(monomial.substr(colon + 1));
  auto table = common.makeTable();
  const MonomialFunction out =
      projectMonomial(*table, MonomialFunction{a, b, LogValue::one()});
  ExperimentReport r;
  r.command = "project";
  common.baseConfig(r);
  r.config["monomial"] = monomial;
  r.columns = {"coeff", "coeff_log", "coeff_sign"};
  r.rows.push_back({out.scale.toReal(), out.scale.logmag,
                    static_cast<double>(out.scale.sign)});
  std::string exps;
  if (!out.isZero())
    for (int i = 0; i < out.holo.dimension(); ++i)
      exps += (i ? "," : "") + std::to_string(out.holo[i]);
  r.summary["projection_exponents"] = out.isZero() ? "zero" : exps;
  r.summary["coeff"] = formatDouble(out.scale.toReal());
  std::cerr << "project: B(z^a zbar^b) = " << formatDouble(out.scale.toReal())
            << " * z^(" << (out.isZero() ? "-" : exps) << ")\n";
  emit(r, "json", common.outFile);
  common.saveCache(*table);
  return 0;
}

int runBlowup(const CommonOpts& common, double p, const std::string& kArg,
              double mMax, int pointsPerDecade) {
  auto table = common.makeTable();
  const int k = kArg == "auto" ? minimalK(p) : std::stoi(kArg);
  const auto points = blowupSweep(*table, p, k, mMax, pointsPerDecade,
                                  !common.serial);
  ExperimentReport r;
  r.command = "blowup";
  common.baseConfig(r);
  r.config["p"] = formatDouble(p);
  r.config["k"] = std::to_string(k);
  r.config["m_max"] = formatDouble(mMax);
  r.config["points_per_decade"] = std::to_string(pointsPerDecade);
  r.columns = {"m",        "sqrt_m",   "log_ratio", "phi_2km",
               "phi_2k1m", "phi_pk1m", "phi_pk_1m"};
  double maxLog = -std::numeric_limits<double>::infinity();
  for (const auto& pt : points) {
    r.rows.push_back({pt.m, std::sqrt(pt.m), pt.logRatio, pt.phi2km,
                      pt.phi2k1m, pt.phiPk1m, pt.phiPk_1m});
    maxLog = std::max(maxLog, pt.logRatio);
  }
  r.summary["max_ratio"] = formatDouble(std::exp(maxLog));
  const double predicted = predictedBlowupSlope(table->weight(), p, k);
  r.summary["predicted_slope"] = formatDouble(predicted);
  if (mMax >= 5e3) {
    const BlowupSlopeFit fit = fitBlowupSlope(points, predicted);
    r.summary["measured_slope"] = formatDouble(fit.measuredSlope);
    r.summary["relative_gap"] = formatDouble(fit.relativeGap);
  }
  std::cerr << "blowup: p = " << p << ", k = " << k << ", max ratio = "
            << formatDouble(std::exp(maxLog)) << "\n";
  emit(r, common.format, common.outFile);
  common.saveCache(*table);
  return 0;
}

int runKappaFit(const CommonOpts& common, const std::string& xGrid) {
  QuadratureSpec q;
  q.relTol = common.relTol;
  q.validate();
  const AsymptoticFit fit = fitKappaExponent(parseGrid(xGrid), q);
  ExperimentReport r;
  r.command = "kappa-fit";
  common.baseConfig(r);
  r.config["x_grid"] = xGrid;
  r.columns = {"sqrt_coeff", "poly_exponent", "constant", "residual"};
  r.rows.push_back({fit.sqrtCoeff, fit.polyExponent, fit.constant, fit.residual});
  r.summary["sqrt_coeff"] = formatDouble(fit.sqrtCoeff);
  r.summary["poly_exponent"] = formatDouble(fit.polyExponent);
  r.summary["residual"] = formatDouble(fit.residual);
  std::cerr << "kappa-fit: a = " << formatDouble(fit.sqrtCoeff)
            << ", q = " << formatDouble(fit.polyExponent) << "\n";
  emit(r, common.format, common.outFile);
  return 0;
}

int runSliceCheck(const CommonOpts& common, const std::string& zArg, double w1,
                  int degree) {
  auto table = common.makeTable();
  const auto zv = parseCommaList(zArg);
  if (zv.empty()) throw std::invalid_argument("slice-check: --z needs z1[,z2]");
  const double relErr =
      verifySliceIdentity(table, std::complex<double>(zv[0], 0.0),
                          std::complex<double>(w1, 0.0), degree);
  ExperimentReport r;
  r.command = "slice-check";
  common.baseConfig(r);
  r.config["z"] = zArg;
  r.config["w1"] = formatDouble(w1);
  r.config["degree"] = std::to_string(degree);
  r.columns = {"rel_err"};
  r.rows.push_back({relErr});
  r.summary["rel_err"] = formatDouble(relErr);
  std::cerr << "slice-check: rel err = " << formatDouble(relErr) << "\n";
  emit(r, common.format, common.outFile);
  common.saveCache(*table);
  return 0;
}

int runSobolev(const CommonOpts& common, const std::string& check,
               const std::string& qMode, int maxDegree) {
  auto table = common.makeTable();
  const int n = table->domain().dimension();
  ExperimentReport r;
  r.command = "sobolev";
  common.baseConfig(r);
  r.config["check"] = check;
  r.config["max_degree"] = std::to_string(maxDegree);
  const bool parallel = !common.serial;

  if (check == "dse") {
    double q = 1.0 / 3.0;
    if (qMode == "fitted") {
      QuadratureSpec qs;
      qs.relTol = common.relTol;
      q = fitKappaExponent(parseGrid("1e2:1e5:24"), qs).polyExponent;
    }
    r.config["q"] = formatDouble(q);
    r.config["q_mode"] = qMode;
    const int hi = maxDegree, lo = maxDegree / 2;
    r.columns = {"g1", "g2", "log_d2", "normalized"};
    std::vector<MultiIndex> window;
    for (const auto& g : enumerateMultiIndices(n, hi))
      if (g.total() >= lo) window.push_back(g);
    std::vector<NormalizedDGamma> vals(window.size());
    parallelFor(
        window.size(),
        [&](std::size_t i) { vals[i] = dseBandRatio(*table, window[i], q); },
        parallel);
    for (const auto& v : vals)
      r.rows.push_back({static_cast<double>(v.gamma[0]),
                        static_cast<double>(v.gamma[1]), v.logD2, v.normalized});
    r.summary["band_spread"] =
        formatDouble(dseBandSpread(*table, lo, hi, q, parallel));
    std::cerr << "sobolev dse: band spread = " << r.summary["band_spread"]
              << " (q = " << formatDouble(q) << ")\n";
  } else if (check == "key") {
    r.columns = {"alpha1", "alpha2", "beta1",     "beta2",
                 "ratio",  "sqrt_expr", "binom_part"};
    std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
    for (const auto& a : enumerateMultiIndices(n, maxDegree))
      for (const auto& b : enumerateMultiIndices(n, 3))
        if (b.total() > 0) pairs.emplace_back(a, b);
    std::vector<std::vector<double>> rows(pairs.size());
    parallelFor(
        pairs.size(),
        [&](std::size_t i) {
          const auto& [a, b] = pairs[i];
          rows[i] = {static_cast<double>(a[0]),
                     static_cast<double>(a[1]),
                     static_cast<double>(b[0]),
                     static_cast<double>(b[1]),
                     reverseCS(*table, a, b),
                     sqrtExprBound(a, b),
                     mBetaCoeff(*table, a, b).binomPart};
        },
        parallel);
    double maxRatio = 0.0, minRatio = std::numeric_limits<double>::infinity();
    for (auto& row : rows) {
      maxRatio = std::max(maxRatio, row[4]);
      minRatio = std::min(minRatio, row[4]);
      r.rows.push_back(std::move(row));
    }
    r.summary["max_ratio"] = formatDouble(maxRatio);
    r.summary["min_ratio"] = formatDouble(minRatio);
    std::cerr << "sobolev key: reverse-CS ratio in ["
              << formatDouble(minRatio) << ", " << formatDouble(maxRatio)
              << "]\n";
  } else if (check == "mbeta") {
    r.columns = {"alpha1", "alpha2", "beta1", "beta2", "norm_ratio"};
    std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
    for (const auto& a : enumerateMultiIndices(n, maxDegree))
      for (const auto& b : enumerateMultiIndices(n, 3))
        if (b.total() > 0) pairs.emplace_back(a, b);
    std::vector<double> ratios(pairs.size());
    parallelFor(
        pairs.size(),
        [&](std::size_t i) {
          ratios[i] =
              mBetaCoeff(*table, pairs[i].first, pairs[i].second).normRatio;
        },
        parallel);
    double sup = 0.0;
    for (size_t i = 0; i < pairs.size(); ++i) {
      const auto& [a, b] = pairs[i];
      r.rows.push_back({static_cast<double>(a[0]), static_cast<double>(a[1]),
                        static_cast<double>(b[0]), static_cast<double>(b[1]),
                        ratios[i]});
      sup = std::max(sup, ratios[i]);
    }
    r.summary["sup_norm_ratio"] = formatDouble(sup);
    std::cerr << "sobolev mbeta: sup norm ratio = " << formatDouble(sup) << "\n";
  } else if (check == "adjoint") {
    r.columns = {"g1", "g2", "b1", "b2", "rel_err"};
    double worst = 0.0;
    for (const auto& g : enumerateMultiIndices(n, maxDegree))
      for (const auto& b : enumerateMultiIndices(n, 3)) {
        if (b.total() == 0 || !b.leq(g)) continue;
        const double e = adjointIdentityRelErr(*table, g, b);
        r.rows.push_back({static_cast<double>(g[0]), static_cast<double>(g[1]),
                          static_cast<double>(b[0]), static_cast<double>(b[1]),
                          e});
        worst = std::max(worst, e);
      }
    r.summary["max_rel_err"] = formatDouble(worst);
    std::cerr << "sobolev adjoint: max rel err = " << formatDouble(worst) << "\n";
  } else if (check == "ratio") {
    r.columns = {"k", "sup_ratio", "arg_a1", "arg_a2", "arg_b1", "arg_b2"};
    for (int k = 0; k <= 2; ++k) {
      const SobolevSweepResult sw =
          sobolevRatioSweep(*table, k, maxDegree, parallel);
      r.rows.push_back({static_cast<double>(k), sw.supRatio,
                        static_cast<double>(sw.argHolo[0]),
                        static_cast<double>(sw.argHolo[1]),
                        static_cast<double>(sw.argAnti[0]),
                        static_cast<double>(sw.argAnti[1])});
      r.summary["sup_ratio_k" + std::to_string(k)] = formatDouble(sw.supRatio);
    }
    std::cerr << "sobolev ratio: sup(k=0,1,2) = " << r.summary["sup_ratio_k0"]
              << ", " << r.summary["sup_ratio_k1"] << ", "
              << r.summary["sup_ratio_k2"] << "\n";
  } else {
    throw std::invalid_argument(
        "sobolev: --check must be dse|key|mbeta|adjoint|ratio");
  }
  emit(r, common.format, common.outFile);
  common.saveCache(*table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for weighted Bergman projections on "
               "Reinhardt domains"};
  app.set_version_flag("--version", bergman::kToolVersion);
  app.set_config("--config", "", "flat key=value config file, overridden by flags");
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  CommonOpts moment, kernel, project, blowup, sobolev, kappa, slice;

  auto* cmdMoment = app.add_subcommand("moment", "generalized moments / Phi sweep");
  moment.attach(cmdMoment);
  std::string momentExps, momentGrid = "1e1:1e4:40";
  cmdMoment->add_option("--exponents", momentExps, "s1,s2: one moment G(s)");
  cmdMoment->add_option("--x-grid", momentGrid, "lo:hi:steps for a Phi(x) sweep");

  auto* cmdKernel = app.add_subcommand("kernel", "truncated kernel evaluation");
  kernel.attach(cmdKernel);
  std::string kernelAt = "0.3,0.2,0.3,0.2";
  int kernelDegree = 40;
  cmdKernel->add_option("--at", kernelAt, "z1,..,zn,w1,..,wn (real parts)");
  cmdKernel->add_option("--degree", kernelDegree, "truncation degree J");

  auto* cmdProject = app.add_subcommand("project", "project a monomial");
  project.attach(cmdProject);
  std::string projectMono = "1,0:0,0";
  cmdProject->add_option("--monomial", projectMono, "a1,..:b1,..");

  auto* cmdBlowup = app.add_subcommand("blowup", "L^p norm-ratio sweep");
  blowup.attach(cmdBlowup);
  double blowupP = 1.5, blowupMMax = 1e4;
  std::string blowupK = "auto";
  int blowupPpd = 24;
  cmdBlowup->add_option("--p", blowupP, "exponent p");
  cmdBlowup->add_option("--k", blowupK, "auto | integer >= 2");
  cmdBlowup->add_option("--m-max", blowupMMax, "largest m in the sweep");
  cmdBlowup->add_option("--points-per-decade", blowupPpd, "sweep density");

  auto* cmdSobolev = app.add_subcommand("sobolev", "Sobolev lemma checks");
  sobolev.attach(cmdSobolev);
  std::string sobolevCheck = "ratio", sobolevQ = "paper";
  int sobolevDegree = 40;
  cmdSobolev->add_option("--check", sobolevCheck, "dse|key|mbeta|adjoint|ratio");
  cmdSobolev->add_option("--q", sobolevQ, "paper | fitted")
      ->check(CLI::IsMember({"paper", "fitted"}));
  cmdSobolev->add_option("--max-degree", sobolevDegree, "sweep degree bound");

  auto* cmdKappa = app.add_subcommand("kappa-fit", "boundary moment asymptotics");
  kappa.attach(cmdKappa);
  std::string kappaGrid = "1e2:1e5:40";
  cmdKappa->add_option("--x-grid", kappaGrid, "lo:hi:steps (log-spaced)");

  auto* cmdSlice = app.add_subcommand("slice-check", "fiberwise kernel identity");
  slice.attach(cmdSlice);
  std::string sliceZ = "0.3,0.2";
  double sliceW1 = 0.4;
  int sliceDegree = 60;
  cmdSlice->add_option("--z", sliceZ, "z1[,z2] (real parts)");
  cmdSlice->add_option("--w1", sliceW1, "first coordinate of w");
  cmdSlice->add_option("--degree", sliceDegree, "truncation degree J");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmdMoment->parsed()) return runMoment(moment, momentExps, momentGrid);
    if (cmdKernel->parsed()) return runKernel(kernel, kernelAt, kernelDegree);
    if (cmdProject->parsed()) return runProject(project, projectMono);
    if (cmdBlowup->parsed())
      return runBlowup(blowup, blowupP, blowupK, blowupMMax, blowupPpd);
    if (cmdSobolev->parsed())
      return runSobolev(sobolev, sobolevCheck, sobolevQ, sobolevDegree);
    if (cmdKappa->parsed()) return runKappaFit(kappa, kappaGrid);
    if (cmdSlice->parsed())
      return runSliceCheck(slice, sliceZ, sliceW1, sliceDegree);
  } catch (const bergman::CacheMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
