// twospec — spectra, spectral-pair classification, tilings, and unitary
// dynamics for the selfadjoint momentum operators on [0,1] ∪ [α,β].
//
// Subcommands: spectrum | classify | curves | evolve.
// Output: --format json (default) | csv | svg (curves only), --out <path>.
// Exit codes: 0 success, 2 invalid parameters, 3 solver failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "twospec/evolution.hpp"
#include "twospec/pairs.hpp"
#include "twospec/spectrum.hpp"
#include "twospec/tiling.hpp"

using json = nlohmann::ordered_json;
using namespace twospec;

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct CommonOpts {
  double w = 0.5, phi = 0.0, psi = 0.0, theta = 0.0;
  double alpha = 2.0, beta = 3.0;
  std::string lengthRational;  // "p/q" when the length is exactly rational
  double tol = kDefaultTol;
  std::string format = "json";
  std::string outPath;
  unsigned seed = 0;
  CLI::Option* tolOpt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--w", w, "radial parameter w in [0,1]");
    cmd->add_option("--phi", phi, "phase phi (cycles)");
    cmd->add_option("--psi", psi, "phase psi (cycles)");
    cmd->add_option("--theta", theta, "phase theta (cycles)");
    cmd->add_option("--alpha", alpha, "left endpoint of I2");
    cmd->add_option("--beta", beta, "right endpoint of I2");
    cmd->add_option("--length-rational", lengthRational,
                    "exact rational beta-alpha as p/q (enables exact-mode "
                    "classification)");
    tolOpt = cmd->add_option("--tol", tol, "tolerance override");
    cmd->add_option("--format", format, "output format: json|csv|svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    cmd->add_option("--out", outPath, "output path (default stdout)");
    cmd->add_option("--seed", seed, "seed echoed into the config");
  }

  // classification integrality checks default to 1e-9 unless overridden
  double classifyTol() const {
    return (tolOpt && tolOpt->count() > 0) ? tol : 1e-9;
  }

  BoundaryParams params() const {
    BoundaryParams p{w, phi, psi, theta};
    p.validate();
    return p;
  }

  IntervalPair domain() const {
    if (lengthRational.empty()) return IntervalPair(alpha, beta);
    std::int64_t p = 0, q = 1;
    char slash = 0;
    std::istringstream in(lengthRational);
    if (!(in >> p) || !(in >> slash) || slash != '/' || !(in >> q) || q <= 0) {
      throw std::domain_error("--length-rational must have the form p/q");
    }
    return IntervalPair(alpha, beta, Rational(p, q));
  }

  json configEcho(const std::string& subcommand) const {
    json cfg;
    cfg["subcommand"] = subcommand;
    cfg["w"] = w;
    cfg["phi"] = phi;
    cfg["psi"] = psi;
    cfg["theta"] = theta;
    cfg["alpha"] = alpha;
    cfg["beta"] = beta;
    if (!lengthRational.empty()) cfg["length_rational"] = lengthRational;
    cfg["tol"] = tol;
    cfg["seed"] = seed;
    return cfg;
  }

  void emit(const std::string& text) const {
    if (outPath.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(outPath, std::ios::binary);
      if (!out) throw std::domain_error("cannot open output path " + outPath);
      out << text;
    }
  }
};

std::pair<double, double> parseRange(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw std::domain_error(std::string(what) + " must have the form a..b");
  }
  const double a = std::stod(text.substr(0, dots));
  const double b = std::stod(text.substr(dots + 2));
  return {a, b};
}

std::vector<double> parseList(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

// Minimal static SVG: polylines over auto-scaled axes with a few ticks.
std::string renderSvg(
    const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>&
        series,
    bool pointsOnly = false) {
  constexpr int W = 720, H = 480, M = 48;
  double xLo = 1e300, xHi = -1e300, yLo = 1e300, yHi = -1e300;
  for (const auto& [label, pts] : series) {
    for (const auto& [x, y] : pts) {
      xLo = std::min(xLo, x);
      xHi = std::max(xHi, x);
      yLo = std::min(yLo, y);
      yHi = std::max(yHi, y);
    }
  }
  if (xHi <= xLo) xHi = xLo + 1;
  if (yHi <= yLo) yHi = yLo + 1;
  auto mapX = [&](double x) { return M + (x - xLo) / (xHi - xLo) * (W - 2 * M); };
  auto mapY = [&](double y) { return H - M - (y - yLo) / (yHi - yLo) * (H - 2 * M); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                 "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M
      << "\" y2=\"" << H - M << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\""
      << H - M << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xLo + (xHi - xLo) * i / 4.0;
    const double fy = yLo + (yHi - yLo) * i / 4.0;
    char label[48];
    std::snprintf(label, sizeof(label), "%.4g", fx);
    svg << "<text x=\"" << mapX(fx) << "\" y=\"" << H - M + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << label << "</text>\n";
    std::snprintf(label, sizeof(label), "%.4g", fy);
    svg << "<text x=\"" << M - 6 << "\" y=\"" << mapY(fy) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << label << "</text>\n";
  }
  int idx = 0;
  for (const auto& [label, pts] : series) {
    const char* color = colors[idx++ % 6];
    if (pointsOnly) {
      for (const auto& [x, y] : pts) {
        svg << "<circle cx=\"" << mapX(x) << "\" cy=\"" << mapY(y)
            << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
      }
    } else {
      svg << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [x, y] : pts) {
        svg << mapX(x) << "," << mapY(y) << " ";
      }
      svg << "\"/>\n";
    }
    if (!label.empty()) {
      svg << "<text x=\"" << W - M - 4 << "\" y=\"" << M + 16 * idx
          << "\" font-size=\"12\" text-anchor=\"end\" fill=\"" << color << "\">"
          << label << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

json sliceToJson(const SpectrumSlice& slice) {
  json rows = json::array();
  for (const auto& entry : slice.entries) {
    json row;
    row["n"] = entry.n;
    row["lambda"] = entry.lambda;
    row["multiplicity"] = entry.multiplicity;
    row["re_a"] = entry.coeffA.real();
    row["im_a"] = entry.coeffA.imag();
    row["residual"] = entry.residual;
    rows.push_back(row);
  }
  return rows;
}

std::string sliceToCsv(const SpectrumSlice& slice) {
  std::ostringstream csv;
  csv << "n,lambda,multiplicity,re_a,im_a,residual\n";
  for (const auto& entry : slice.entries) {
    csv << entry.n << ',' << fmt17(entry.lambda) << ',' << entry.multiplicity
        << ',' << fmt17(entry.coeffA.real()) << ',' << fmt17(entry.coeffA.imag())
        << ',' << fmt17(entry.residual) << '\n';
  }
  return csv.str();
}

const char* structureName(SpectrumStructure s) {
  switch (s) {
    case SpectrumStructure::kLatticeUnion: return "lattice-union";
    case SpectrumStructure::kSingleLattice: return "single-lattice";
    case SpectrumStructure::kRationalPeriodic: return "rational-periodic";
    case SpectrumStructure::kAperiodic: return "aperiodic";
  }
  return "unknown";
}

int runSpectrum(const CommonOpts& opts, const std::string& branches,
                const std::string& window) {
  const BoundaryParams p = opts.params();
  const IntervalPair d = opts.domain();

  SpectrumSlice slice;
  if (!window.empty()) {
    auto [lo, hi] = parseRange(window, "--window");
    slice = computeSpectrum(p, d, lo, hi);
  } else {
    const std::string spec = branches.empty() ? "-8..8" : branches;
    auto [a, b] = parseRange(spec, "--branches");
    const long nLo = static_cast<long>(std::llround(a));
    const long nHi = static_cast<long>(std::llround(b));
    if (nHi < nLo) throw std::domain_error("--branches range is empty");
    if (p.w <= 1e-12) {
      // lattice indices map straight onto eigenvalues
      const double L = d.totalLength();
      const double base = (0.5 - p.theta) / L;
      slice = closedFormW0(p, d, base + (nLo - 0.25) / L, base + (nHi + 0.25) / L);
    } else if (p.w >= 1.0 - 1e-12) {
      // anchor the window on the χ_I1 lattice indices
      slice = closedFormW1(p, d, -p.phi + nLo - 1e-9, -p.phi + nHi + 1e-9);
    } else {
      slice.lo = 0;
      slice.hi = 0;
      slice.structure = d.rationalLength()
                            ? SpectrumStructure::kRationalPeriodic
                            : SpectrumStructure::kAperiodic;
      slice.entries = solveBranchRange(p, d, nLo, nHi);
    }
  }

  if (opts.format == "csv") {
    opts.emit(sliceToCsv(slice));
  } else if (opts.format == "json") {
    json doc;
    doc["config"] = opts.configEcho("spectrum");
    doc["result"]["structure"] = structureName(slice.structure);
    doc["result"]["entries"] = sliceToJson(slice);
    opts.emit(doc.dump(2) + "\n");
  } else {
    throw std::domain_error("spectrum: svg output is not defined; use json|csv");
  }
  return 0;
}

int runClassify(const CommonOpts& opts, bool setOnly) {
  const IntervalPair d = opts.domain();
  json doc;
  doc["config"] = opts.configEcho("classify");

  const SetVerdict set = spectralSetCriterion(d, opts.classifyTol());
  doc["result"]["spectralSet"] = set.spectral;
  doc["result"]["spectralSetReason"] = set.reason;

  if (!setOnly) {
    const BoundaryParams p = opts.params();
    const PairVerdict verdict = classifyPair(p, d, opts.classifyTol());
    doc["result"]["isSpectralOperator"] = verdict.isSpectralOperator;
    json conds = json::array();
    for (const auto& cond : verdict.conditions) {
      json c;
      c["id"] = cond.id;
      c["satisfied"] = cond.satisfied;
      c["residual"] = cond.residual;
      conds.push_back(c);
    }
    doc["result"]["conditions"] = conds;
    if (verdict.isSpectralOperator) {
      doc["result"]["spectrumDescription"] = verdict.spectrumDescription;
      doc["result"]["cosetReps"] = verdict.cosetReps;
      doc["result"]["cosetPeriod"] = verdict.cosetPeriod;
    }
  }

  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "condition,satisfied,residual\n";
    csv << "set.criterion," << (set.spectral ? 1 : 0) << ",0\n";
    if (!setOnly) {
      const PairVerdict verdict = classifyPair(opts.params(), d, opts.classifyTol());
      for (const auto& cond : verdict.conditions) {
        csv << cond.id << ',' << (cond.satisfied ? 1 : 0) << ','
            << fmt17(cond.residual) << '\n';
      }
    }
    opts.emit(csv.str());
  } else if (opts.format == "json") {
    opts.emit(doc.dump(2) + "\n");
  } else {
    throw std::domain_error("classify: svg output is not defined; use json|csv");
  }
  return 0;
}

int runCurves(const CommonOpts& opts, const std::string& kind,
              const std::string& wList, const std::string& tRange, int samples,
              const std::string& nRange, int wSamples,
              const std::string& countsText) {
  const IntervalPair d = opts.domain();
  json doc;
  doc["config"] = opts.configEcho("curves");
  doc["config"]["kind"] = kind;

  std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series;
  std::ostringstream csv;

  if (samples < 2 || wSamples < 2) {
    throw std::domain_error("curves: --samples and --w-samples must be >= 2");
  }
  if (kind == "h") {
    auto [tLo, tHi] = parseRange(tRange.empty() ? "-2..2" : tRange, "--t-range");
    const std::vector<double> ws =
        wList.empty() ? std::vector<double>{0.1, 0.5, 0.9} : parseList(wList);
    csv << "w,t,h\n";
    json cuts = json::array();
    for (double t = std::ceil((tLo + opts.phi)) - opts.phi; t <= tHi; t += 1.0) {
      if (t >= tLo) cuts.push_back(t);  // lift spikes: phi + t integral
    }
    for (double wv : ws) {
      BoundaryParams p = opts.params();
      p.w = wv;
      std::vector<std::pair<double, double>> pts;
      for (int i = 0; i <= samples; ++i) {
        const double t = tLo + (tHi - tLo) * i / samples;
        const double h = hFunction(p, d, t);
        pts.emplace_back(t, h);
        csv << fmt17(wv) << ',' << fmt17(t) << ',' << fmt17(h) << '\n';
      }
      series.emplace_back("w=" + std::to_string(wv).substr(0, 5), pts);
    }
    doc["result"]["branchCuts"] = cuts;
  } else if (kind == "branches") {
    auto [a, b] = parseRange(nRange.empty() ? "-2..2" : nRange, "--n-range");
    const long nLo = std::llround(a), nHi = std::llround(b);
    csv << "w,n,lambda\n";
    for (long n = nLo; n <= nHi; ++n) {
      std::vector<std::pair<double, double>> pts;
      for (int i = 0; i < wSamples; ++i) {
        const double wv = 0.01 + (0.99 - 0.01) * i / (wSamples - 1);
        BoundaryParams p = opts.params();
        p.w = wv;
        const double lambda = solveBranch(p, d, n).lambda;
        pts.emplace_back(wv, lambda);
        csv << fmt17(wv) << ',' << n << ',' << fmt17(lambda) << '\n';
      }
      series.emplace_back("n=" + std::to_string(n), pts);
    }
  } else if (kind == "orbit") {
    const std::vector<double> counts =
        countsText.empty() ? std::vector<double>{1, 2, 4, 8, 16}
                           : parseList(countsText);
    csv << "count,index,frac\n";
    json radii = json::array();
    for (double cd : counts) {
      const int count = static_cast<int>(cd);
      const std::vector<double> orbit = fractionalOrbit(opts.params(), d, count);
      std::vector<std::pair<double, double>> pts;
      for (int i = 0; i < count; ++i) {
        pts.emplace_back(orbit[i], cd);
        csv << count << ',' << i << ',' << fmt17(orbit[i]) << '\n';
      }
      series.emplace_back("count=" + std::to_string(count), pts);
      json r;
      r["count"] = count;
      r["coveringRadius"] = coveringRadius(orbit);
      radii.push_back(r);
    }
    doc["result"]["coveringRadii"] = radii;
  } else {
    throw std::domain_error("curves: --kind must be h|branches|orbit");
  }

  if (opts.format == "csv") {
    opts.emit(csv.str());
  } else if (opts.format == "svg") {
    opts.emit(renderSvg(series, kind == "orbit"));
  } else {
    json data = json::array();
    for (const auto& [label, pts] : series) {
      json s;
      s["label"] = label;
      json xy = json::array();
      for (const auto& [x, y] : pts) xy.push_back(json::array({x, y}));
      s["points"] = xy;
      data.push_back(s);
    }
    doc["result"]["series"] = data;
    opts.emit(doc.dump(2) + "\n");
  }
  return 0;
}

int runEvolve(const CommonOpts& opts, double bumpCenter, double bumpRadius,
              const std::string& timesText, long truncation, int gridPerUnit,
              bool snapshots) {
  const BoundaryParams p = opts.params();
  const IntervalPair d = opts.domain();
  const std::vector<double> times =
      timesText.empty() ? std::vector<double>{0.0} : parseList(timesText);
  if (snapshots && opts.outPath.empty()) {
    throw std::domain_error("evolve: --snapshots requires --out <prefix>");
  }

  const WaveGrid f0 = bumpState(d, bumpCenter, bumpRadius, gridPerUnit);
  const WaveCoefficients coeffs = expand(f0, p, d, -truncation, truncation);

  json doc;
  doc["config"] = opts.configEcho("evolve");
  doc["config"]["bump_center"] = bumpCenter;
  doc["config"]["bump_radius"] = bumpRadius;
  doc["config"]["truncation"] = truncation;
  doc["config"]["grid_per_unit"] = gridPerUnit;
  doc["result"]["truncationResidual"] = coeffs.truncationResidual;
  json steps = json::array();

  for (std::size_t si = 0; si < times.size(); ++si) {
    const WaveCoefficients evolved = evolve(coeffs, times[si]);
    const WaveGrid grid = synthesize(evolved, gridPerUnit);

    double massI1 = 0.0, massI2 = 0.0;
    const int n1 = static_cast<int>(grid.onI1.size()) - 1;
    for (int k = 0; k <= n1; ++k) {
      massI1 += (k == 0 || k == n1 ? 0.5 : 1.0) * grid.dx1() * std::norm(grid.onI1[k]);
    }
    const int n2 = static_cast<int>(grid.onI2.size()) - 1;
    for (int k = 0; k <= n2; ++k) {
      massI2 += (k == 0 || k == n2 ? 0.5 : 1.0) * grid.dx2() * std::norm(grid.onI2[k]);
    }

    json step;
    step["t"] = times[si];
    step["norm"] = evolved.norm();
    step["boundaryResidual"] = boundaryResidual(evolved);
    step["massI1"] = massI1;
    step["massI2"] = massI2;
    steps.push_back(step);

    if (snapshots) {
      std::ostringstream csv;
      csv << "x,re_f,im_f,abs2\n";
      for (int k = 0; k < grid.onI1.size(); ++k) {
        const Complex v = grid.onI1[k];
        csv << fmt17(grid.x1(k)) << ',' << fmt17(v.real()) << ','
            << fmt17(v.imag()) << ',' << fmt17(std::norm(v)) << '\n';
      }
      for (int k = 0; k < grid.onI2.size(); ++k) {
        const Complex v = grid.onI2[k];
        csv << fmt17(grid.x2(k)) << ',' << fmt17(v.real()) << ','
            << fmt17(v.imag()) << ',' << fmt17(std::norm(v)) << '\n';
      }
      std::ofstream out(opts.outPath + ".step" + std::to_string(si) + ".csv",
                        std::ios::binary);
      if (!out) throw std::domain_error("evolve: cannot write snapshot file");
      out << csv.str();
    }
  }
  doc["result"]["steps"] = steps;
  std::cout << doc.dump(2) << "\n";  // summary always on stdout
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra and dynamics of momentum operators on two intervals"};
  app.require_subcommand(1);

  CommonOpts spectrumOpts, classifyOpts, curvesOpts, evolveOpts;

  auto* cmdSpectrum =
      app.add_subcommand("spectrum", "eigenvalue list with coefficients");
  spectrumOpts.attach(cmdSpectrum);
  std::string branches, window;
  cmdSpectrum->add_option("--branches", branches, "branch index range a..b");
  cmdSpectrum->add_option("--window", window, "eigenvalue window lo..hi");

  auto* cmdClassify =
      app.add_subcommand("classify", "spectral-pair classification");
  classifyOpts.attach(cmdClassify);
  bool setOnly = false;
  cmdClassify->add_flag("--set-only", setOnly,
                        "only the geometric spectral-set criterion");

  auto* cmdCurves = app.add_subcommand("curves", "plot data emission");
  curvesOpts.attach(cmdCurves);
  std::string kind = "h", wListText, tRangeText, nRangeText, countsText;
  int samples = 400, wSamples = 99;
  cmdCurves->add_option("--kind", kind, "h | branches | orbit");
  cmdCurves->add_option("--w-list", wListText, "comma list of w for kind=h");
  cmdCurves->add_option("--t-range", tRangeText, "t range lo..hi for kind=h");
  cmdCurves->add_option("--samples", samples, "samples per trace");
  cmdCurves->add_option("--n-range", nRangeText, "branch range for kind=branches");
  cmdCurves->add_option("--w-samples", wSamples, "w grid size for kind=branches");
  cmdCurves->add_option("--counts", countsText, "orbit lengths for kind=orbit");

  auto* cmdEvolve = app.add_subcommand("evolve", "unitary wave evolution");
  evolveOpts.attach(cmdEvolve);
  double bumpCenter = 0.5, bumpRadius = 0.1;
  std::string timesText;
  long truncation = 128;
  int gridPerUnit = 2048;
  bool snapshots = false;
  cmdEvolve->add_option("--bump-center", bumpCenter, "bump center in I1");
  cmdEvolve->add_option("--bump-radius", bumpRadius, "bump radius");
  cmdEvolve->add_option("--times", timesText, "comma list of times");
  cmdEvolve->add_option("--truncation", truncation, "branch truncation +-N");
  cmdEvolve->add_option("--grid", gridPerUnit, "grid points per unit length");
  cmdEvolve->add_flag("--snapshots", snapshots,
                      "write per-time CSV snapshots next to --out");

  try {
    app.parse(argc, argv);
    if (cmdSpectrum->parsed()) return runSpectrum(spectrumOpts, branches, window);
    if (cmdClassify->parsed()) return runClassify(classifyOpts, setOnly);
    if (cmdCurves->parsed()) {
      return runCurves(curvesOpts, kind, wListText, tRangeText, samples,
                       nRangeText, wSamples, countsText);
    }
    if (cmdEvolve->parsed()) {
      return runEvolve(evolveOpts, bumpCenter, bumpRadius, timesText,
                       truncation, gridPerUnit, snapshots);
    }
    return 0;
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  } catch (const SolverError& err) {
    std::cerr << "solver failure: " << err.what() << "\n";
    return 3;
  } catch (const std::domain_error& err) {
    std::cerr << "invalid parameters: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid parameters: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
}
