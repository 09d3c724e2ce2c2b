#include "evoform/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evoform/catalog.hpp"
#include "evoform/errors.hpp"
#include "evoform/evolute.hpp"
#include "evoform/svg.hpp"
#include "evoform/theorems.hpp"
#include "evoform/topology.hpp"

namespace evoform {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct CommonOpts {
    int n = 1024;
    double tol = 1e-6;
    int gridRes = 512;
    std::string basePoint;
    bool strict = false;
};

void addCommon(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "Samples per curve (power of two)");
    cmd->add_option("--tol", o.tol, "Identity tolerance for pass/fail");
    cmd->add_option("--grid-res", o.gridRes, "Grid-oracle resolution (cells per axis)");
    cmd->add_option("--base-point", o.basePoint, "Base point x,y[,z] for area integrals");
    cmd->add_flag("--strict", o.strict, "Fail when the sampling is not certified");
}

std::optional<Vec3> parseBasePoint(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Vec3 v;
    double z = 0.0;
    const int got = std::sscanf(s.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &z);
    if (got < 2) {
        throw ParseError("--base-point: expected x,y or x,y,z");
    }
    v.z = z;
    return v;
}

// Relative output paths land in $EVOFORM_OUT_DIR when it is set.
std::string resolveOutPath(const std::string& path) {
    if (path.empty() || path.front() == '/' ) return path;
    const char* dir = std::getenv("EVOFORM_OUT_DIR");
    if (!dir || !*dir) return path;
    std::string base(dir);
    if (base.back() != '/') base += '/';
    return base + path;
}

void writeTextFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write output file: " + path);
    }
    out << content;
}

ClosedCurve realizeChecked(const CurveSpec& spec, const CommonOpts& o, std::ostream& err) {
    if (isPiecewiseSpec(spec)) {
        throw PreconditionError(
            "this command needs a smooth curve; piecewise fixtures go through 'gauss-bonnet'");
    }
    ClosedCurve curve = realizeCurve(spec, o.n);
    if (curve.spectrumStatus() == SpectrumStatus::Unresolved) {
        err << "warning: spectrum not resolved (tail energy ratio " << num(curve.tailEnergyRatio())
            << "); results are not certified\n";
        if (o.strict) {
            throw ResolutionError("unresolved spectrum with --strict");
        }
    }
    return curve;
}

void printReports(const std::vector<TheoremReport>& reports, std::ostream& out) {
    for (const TheoremReport& r : reports) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": residual " << num(r.residual)
            << " (tol " << num(r.tolerance) << "), lhs " << num(r.lhs) << ", rhs " << num(r.rhs)
            << "\n";
    }
}

bool allPass(const std::vector<TheoremReport>& reports) {
    for (const TheoremReport& r : reports) {
        if (!r.pass) return false;
    }
    return true;
}

int cmdInvariants(const std::string& file, const CommonOpts& o, std::ostream& out,
                  std::ostream& err) {
    const CurveSpec spec = loadCurveSpec(file);
    const ClosedCurve curve = realizeChecked(spec, o, err);

    out << "kind: " << specKindName(spec) << "\n";
    out << "digest: " << specDigest(spec) << "\n";
    out << "c: " << num(curve.spaceform().curvature()) << "\n";
    out << "N: " << curve.sampleCount() << "\n";
    out << "orientation: " << curve.orientation() << "\n";
    out << "spectral-tail: " << num(curve.tailEnergyRatio()) << "\n";
    out << "L: " << num(curve.length()) << "\n";

    const auto base = parseBasePoint(o.basePoint);
    const double F = areaWithMultiplicities(traceOfCurve(curve), base).value;
    out << "F: " << num(F) << "\n";
    out << "strong-convexity-margin: " << num(curve.strongConvexityMargin()) << "\n";

    const std::vector<FrameJet> jets = curve.gridJets(curve.sampleCount());
    double kgMin = jets[0].kg, kgMax = jets[0].kg;
    bool haveK = true, haveRho = true;
    double kMin = 0.0, kMax = 0.0, rhoMin = 0.0, rhoMax = 0.0;
    bool first = true;
    for (const FrameJet& j : jets) {
        kgMin = std::min(kgMin, j.kg);
        kgMax = std::max(kgMax, j.kg);
        if (!j.k) haveK = false;
        if (!j.rho) haveRho = false;
        if (j.k && (first || *j.k < kMin)) kMin = *j.k;
        if (j.k && (first || *j.k > kMax)) kMax = *j.k;
        if (j.rho && (first || *j.rho < rhoMin)) rhoMin = *j.rho;
        if (j.rho && (first || *j.rho > rhoMax)) rhoMax = *j.rho;
        first = false;
    }
    out << "kg-min: " << num(kgMin) << "\n";
    out << "kg-max: " << num(kgMax) << "\n";
    if (haveK) {
        out << "k-min: " << num(kMin) << "\n";
        out << "k-max: " << num(kMax) << "\n";
    }
    if (haveRho && curve.stronglyConvex()) {
        out << "rho-min: " << num(rhoMin) << "\n";
        out << "rho-max: " << num(rhoMax) << "\n";
    }

    if (curve.stronglyConvex()) {
        const EvolutePath ev(curve);
        out << "evolute-singular-points: "
            << (ev.isPointEvolute() ? 0 : static_cast<int>(ev.singularParams().size())) << "\n";
        if (ev.isPointEvolute()) {
            out << "evolute: point (circle)\n";
            out << "F_e: 0\n";
        } else {
            const double Fe = areaWithMultiplicities(traceOfEvolute(ev)).value;
            out << "F_e: " << num(Fe) << "\n";
        }
    }
    return 0;
}

int cmdVerify(const std::string& file, const std::vector<std::string>& theorems,
              const std::string& outFile, const CommonOpts& o, std::ostream& out,
              std::ostream& err) {
    const CurveSpec spec = loadCurveSpec(file);
    const ClosedCurve curve = realizeChecked(spec, o, err);
    const VerificationContext ctx(curve, o.tol, specKindName(spec) + "#" + specDigest(spec),
                                  parseBasePoint(o.basePoint));

    std::vector<std::string> names = theorems;
    const bool fullSuite = names.empty();
    if (fullSuite) {
        names = standardTheoremNames();
        if (curve.spaceform().curvature() == 0.0) {
            std::erase(names, "deficit-total-curvature");
        }
    }
    std::vector<TheoremReport> reports = runSelectedSuite(ctx, names);
    if (fullSuite && o.gridRes > 0) {
        for (TheoremReport& r : verifyAreaOracle(ctx, o.gridRes)) {
            reports.push_back(std::move(r));
        }
    }
    printReports(reports, out);
    if (!outFile.empty()) {
        writeTextFile(resolveOutPath(outFile), serializeReports(reports));
    }
    return allPass(reports) ? 0 : 1;
}

int cmdSteiner(const std::string& file, const std::vector<double>& rs, const std::string& outFile,
               const CommonOpts& o, std::ostream& out, std::ostream& err) {
    const CurveSpec spec = loadCurveSpec(file);
    const ClosedCurve curve = realizeChecked(spec, o, err);
    const VerificationContext ctx(curve, o.tol, specKindName(spec) + "#" + specDigest(spec),
                                  parseBasePoint(o.basePoint));
    std::vector<TheoremReport> reports;
    for (double r : rs) {
        for (TheoremReport& rep : verifySteiner(ctx, r)) reports.push_back(std::move(rep));
    }
    printReports(reports, out);
    if (!outFile.empty()) {
        writeTextFile(resolveOutPath(outFile), serializeReports(reports));
    }
    return allPass(reports) ? 0 : 1;
}

int cmdGaussBonnet(const std::string& file, const std::string& outFile, const CommonOpts& o,
                   std::ostream& out, std::ostream& err) {
    const CurveSpec spec = loadCurveSpec(file);
    std::vector<TheoremReport> reports;
    const std::string label = specKindName(spec) + "#" + specDigest(spec);
    if (isPiecewiseSpec(spec)) {
        const PathTrace trace = realizeTrace(std::get<PiecewiseArcsSpec>(spec), 4 * o.n);
        reports.push_back(verifyGaussBonnetMultiplicities(trace, o.tol, label));
    } else {
        const ClosedCurve curve = realizeChecked(spec, o, err);
        reports.push_back(
            verifyGaussBonnetMultiplicities(traceOfCurve(curve), o.tol, label));
        const VerificationContext ctx(curve, o.tol, label, parseBasePoint(o.basePoint));
        reports.push_back(verifyGaussBonnetSimple(ctx));
        if (curve.stronglyConvex()) {
            reports.push_back(verifyEvoluteGaussBonnet(ctx));
        }
    }
    printReports(reports, out);
    if (!outFile.empty()) {
        writeTextFile(resolveOutPath(outFile), serializeReports(reports));
    }
    return allPass(reports) ? 0 : 1;
}

int cmdPlot(const std::string& file, bool withEvolute, const std::string& chartName,
            const std::string& outFile, const CommonOpts& o, std::ostream&, std::ostream& err) {
    const CurveSpec spec = loadCurveSpec(file);
    PlotData plot;
    ChartPtr chart;

    if (isPiecewiseSpec(spec)) {
        if (withEvolute) {
            throw PreconditionError("plot: piecewise fixtures have no evolute");
        }
        const PathTrace trace = realizeTrace(std::get<PiecewiseArcsSpec>(spec), 4 * o.n);
        chart = trace.chart;
        plot.curve = trace.polygon();
    } else {
        const ClosedCurve curve = realizeChecked(spec, o, err);
        const SpaceForm& sf = curve.spaceform();
        const double c = sf.curvature();
        const auto base = parseBasePoint(o.basePoint);
        const Vec3 o3 = base ? sf.projectToSurface(*base) : curve.basePoint();
        if (chartName == "auto") {
            chart = makeChartAbout(sf, o3);
        } else if (chartName == "stereographic") {
            if (!(c > 0.0)) throw ParseError("plot: stereographic chart needs c > 0");
            chart = makeStereographicChart(sf, -1.0 * o3);
        } else if (chartName == "klein") {
            if (!(c < 0.0)) throw ParseError("plot: klein chart needs c < 0");
            chart = makeBeltramiKleinChart(sf, o3);
        } else {
            throw ParseError("plot: unknown chart '" + chartName + "'");
        }
        plot.curve = traceOfCurve(curve, chart, std::max(o.n, 512)).polygon();
        plot.basePoint = chart->map(o3);
        if (withEvolute) {
            const EvolutePath ev(curve);  // throws for non-convex input
            if (ev.isPointEvolute()) {
                plot.evolutePoint = chart->map(ev.point(0.0));
            } else {
                plot.evolute = traceOfEvolute(ev, chart, std::max(o.n, 512)).polygon();
                for (double t : ev.singularParams()) {
                    plot.cusps.push_back(chart->map(ev.point(t)));
                }
            }
        }
    }
    if (const auto radius = chart->imageRadius()) {
        plot.chartBoundary = radius;
    }
    writeTextFile(resolveOutPath(outFile), renderSvg(plot));
    return 0;
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"evoform: evolutes, curvature identities and areas on constant-curvature "
                 "surfaces"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string curveFile, outFile, chartName = "auto";
    std::vector<std::string> theoremNames;
    std::vector<double> steinerR;
    bool withEvolute = false;

    CLI::App* inv = app.add_subcommand("invariants", "Lengths, areas, curvature ranges");
    inv->add_option("curve-file", curveFile)->required();
    addCommon(inv, opts);

    CLI::App* verify = app.add_subcommand("verify", "Run the identity and inequality checks");
    verify->add_option("curve-file", curveFile)->required();
    verify->add_option("--theorems", theoremNames, "Subset of checks to run")->delimiter(',');
    verify->add_option("--out", outFile, "Write the report file here");
    addCommon(verify, opts);

    CLI::App* steiner = app.add_subcommand("steiner", "Tube-area identity at given offsets");
    steiner->add_option("curve-file", curveFile)->required();
    steiner->add_option("--r", steinerR, "Offset radius (repeatable)")->required();
    steiner->add_option("--out", outFile, "Write the report file here");
    addCommon(steiner, opts);

    CLI::App* gb = app.add_subcommand("gauss-bonnet", "Gauss-Bonnet with multiplicities");
    gb->add_option("curve-file", curveFile)->required();
    gb->add_option("--out", outFile, "Write the report file here");
    addCommon(gb, opts);

    CLI::App* plot = app.add_subcommand("plot", "Deterministic SVG rendering");
    plot->add_option("curve-file", curveFile)->required();
    plot->add_flag("--with-evolute", withEvolute, "Draw the evolute and its cusps");
    plot->add_option("--chart", chartName, "auto|stereographic|klein");
    plot->add_option("--out", outFile, "SVG output path")->required();
    addCommon(plot, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (inv->parsed()) return cmdInvariants(curveFile, opts, out, err);
        if (verify->parsed()) return cmdVerify(curveFile, theoremNames, outFile, opts, out, err);
        if (steiner->parsed()) return cmdSteiner(curveFile, steinerR, outFile, opts, out, err);
        if (gb->parsed()) return cmdGaussBonnet(curveFile, outFile, opts, out, err);
        if (plot->parsed()) return cmdPlot(curveFile, withEvolute, chartName, outFile, opts, out, err);
        err << "error: no command\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ResolutionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace evoform
