// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Runs every check at the tolerances pinned below.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evoform/catalog.hpp"
#include "evoform/errors.hpp"
#include "evoform/evolute.hpp"
#include "evoform/series.hpp"
#include "evoform/theorems.hpp"
#include "evoform/topology.hpp"
#include "evoform/trig.hpp"

using namespace evoform;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kN = 2048;
constexpr int kGridRes = 512;

int failures = 0;
std::ostringstream detail;

void note(const std::string& line) { detail << "    " << line << "\n"; }

void criterion(int index, const std::string& label, bool pass) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": " << label << "\n";
    std::cout << detail.str();
    detail.str("");
    if (!pass) ++failures;
}

bool expect(bool ok, const std::string& what) {
    if (!ok) note("FAILED: " + what);
    return ok;
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// --- fixture definitions (also shipped as files; digests checked below) ---

CurveSpec circleSpec(double c, double rho) {
    return GeodesicCircleSpec{c, {0, 0, c == 0.0 ? 0.0 : 1.0}, rho, +1};
}

CurveSpec ellipseSpec() { return PlaneEllipseSpec{2.0, 1.0, +1}; }

CurveSpec wobbleSpec(double c) {
    return PolarFourierSpec{c, {0, 0, 1}, 0.6, {0.0, 0.05}, {}, +1, {}};
}

CurveSpec nonConvexSpec() { return PolarFourierSpec{0.0, {0, 0, 0}, 1.0, {0.0, 0.35}, {}, +1, {}}; }

PiecewiseArcsSpec lensSpec() {
    PiecewiseArcsSpec lens;
    lens.c = 0.0;
    lens.arcs = {
        ArcSpec{{0, -0.75, 0}, {1, 0, 0}, {-1, 0, 0}, +1, 0},
        ArcSpec{{0, 0.75, 0}, {-1, 0, 0}, {1, 0, 0}, +1, 0},
    };
    return lens;
}

PiecewiseArcsSpec luneSpec(double lambda) {
    PiecewiseArcsSpec lune;
    lune.c = 1.0;
    lune.arcs = {
        ArcSpec{{0, 1, 0}, {0, 0, 1}, {0, 0, -1}, +1, 0},
        ArcSpec{{-std::sin(lambda), std::cos(lambda), 0}, {0, 0, -1}, {0, 0, 1}, -1, 0},
    };
    return lune;
}

PiecewiseArcsSpec doubledCircleSpec() {
    PiecewiseArcsSpec doubled;
    doubled.c = 1.0;
    const Vec3 start{std::sin(0.7), 0.0, std::cos(0.7)};
    doubled.arcs = {
        ArcSpec{{0, 0, 1}, start, start, +1, 1},
        ArcSpec{{0, 0, 1}, start, start, +1, 1},
    };
    return doubled;
}

const std::map<std::string, CurveSpec>& fixtureTable() {
    static const std::map<std::string, CurveSpec> table = [] {
        std::map<std::string, CurveSpec> t;
        const char* cname[3] = {"hyperbolic", "plane", "sphere"};
        const double cs[3] = {-1.0, 0.0, 1.0};
        const char* rname[3] = {"03", "06", "10"};
        const double rhos[3] = {0.3, 0.6, 1.0};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                t["circle_" + std::string(cname[i]) + "_" + rname[j] + ".json"] =
                    circleSpec(cs[i], rhos[j]);
            }
        }
        t["ellipse_2_1.json"] = ellipseSpec();
        t["wobble_sphere.json"] = wobbleSpec(1.0);
        t["wobble_hyperbolic.json"] = wobbleSpec(-1.0);
        t["nonconvex_plane.json"] = nonConvexSpec();
        t["lens_plane.json"] = lensSpec();
        t["lune_sphere.json"] = luneSpec(0.8);
        t["doubled_circle_sphere.json"] = doubledCircleSpec();
        return t;
    }();
    return table;
}

std::mt19937 rng(20240811);
double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
}

// ---------------------------------------------------------------------------

void criterion1CircleExactness() {
    bool pass = true;
    double worst = 0.0;
    for (double c : {-1.0, 0.0, 1.0}) {
        for (double rho : {0.3, 0.6, 1.0}) {
            const ClosedCurve circle = realizeCurve(circleSpec(c, rho), kN);
            const VerificationContext ctx(circle, 1e-9);
            auto track = [&](const TheoremReport& r) {
                const double gap = std::abs(r.rhs - r.lhs);
                worst = std::max(worst, gap);
                pass &= expect(gap < 1e-9, r.name + " residual " + num(gap) + " at c=" + num(c) +
                                               " rho=" + num(rho));
            };
            track(verifyTotalCurvature(ctx));
            track(verifyTanHalfRho(ctx));
            for (double r : {0.1, 0.3}) {
                const auto reports = verifySteiner(ctx, r);
                track(reports[0]);
                pass &= expect(reports[1].residual < 1e-9, "steiner measure ratio");
            }
            for (const TheoremReport& r : verifyDeficit(ctx)) track(r);
            const double intK = ctx.totalAmbientCurvature();
            worst = std::max(worst, std::abs(intK - kTwoPi));
            pass &= expect(std::abs(intK - kTwoPi) < 1e-9,
                           "total curvature 2pi at c=" + num(c) + " rho=" + num(rho));
        }
    }
    note("worst circle residual " + num(worst));
    criterion(1, "circle exactness across c in {-1,0,1}", pass);
}

void criterion2Ellipse() {
    bool pass = true;
    const ClosedCurve ellipse = realizeCurve(ellipseSpec(), kN);
    const VerificationContext ctx(ellipse, 1e-8);
    const double astroid = 27.0 * kPi / 16.0;

    const double feLine = std::abs(ctx.evoluteArea());
    pass &= expect(std::abs(feLine - astroid) < 1e-6,
                   "|F_e| line integral = 27pi/16, got " + num(feLine));

    const EvolutePath ev(ellipse);
    const AreaResult feGrid = areaGridOracle(traceOfEvolute(ev), kGridRes);
    pass &= expect(std::abs(std::abs(feGrid.value) - astroid) <= feGrid.estimatedError,
                   "grid |F_e| within its own error bars");
    pass &= expect(feGrid.estimatedError <= 0.01 * astroid,
                   "grid error <= 1% at " + std::to_string(kGridRes) + "^2, got " +
                       num(feGrid.estimatedError));

    const TheoremReport thm43 = verifyTanHalfRho(ctx);
    pass &= expect(thm43.residual < 1e-8, "radius integral identity, residual " +
                                              num(thm43.residual));

    const double L = ctx.length();
    const double F = ctx.enclosedArea();
    const double delta = L * L - 4 * kPi * F;
    pass &= expect(std::abs(delta - 14.909) < 5e-3, "deficit anchor 14.909, got " + num(delta));
    const double bound = 4 * kPi * feLine;
    pass &= expect(delta <= bound && bound - delta > 50.0,
                   "deficit bound slack > 50, got " + num(bound - delta));
    note("F_e(line) = " + num(feLine) + ", F_e(grid) = " + num(std::abs(feGrid.value)) + " +- " +
         num(feGrid.estimatedError) + ", deficit = " + num(delta));
    criterion(2, "plane ellipse anchors (astroid area, radius integral, deficit)", pass);
}

void criterion3CurvedWobbles() {
    bool pass = true;
    for (double c : {1.0, -1.0}) {
        std::map<std::string, double> prev;
        for (int n : {256, 512, 1024, 2048}) {
            const ClosedCurve curve = realizeCurve(wobbleSpec(c), n);
            const VerificationContext ctx(curve, 1e-6);
            std::map<std::string, double> res;
            res["total-curvature"] = verifyTotalCurvature(ctx).residual;
            res["tan-half-radius"] = verifyTanHalfRho(ctx).residual;
            res["evolute-gauss-bonnet"] = verifyEvoluteGaussBonnet(ctx).residual;
            if (n == kN) {
                for (const auto& [name, r] : res) {
                    pass &= expect(r < 1e-6, name + " at N=2048, residual " + num(r) +
                                                 " (c=" + num(c) + ")");
                }
                // second deficit bound holds with a strictly positive gap
                const auto deficits = verifyDeficit(ctx);
                const TheoremReport& second = deficits.back();
                pass &= expect(second.name == "deficit-total-curvature" && second.pass &&
                                   second.rhs - second.lhs > 1e-6,
                               "second deficit bound with positive gap (c=" + num(c) + ")");
                note("c=" + num(c) + " gap in the curvature deficit bound: " +
                     num(second.rhs - second.lhs));
            }
            if (!prev.empty()) {
                for (const auto& [name, r] : res) {
                    // roundoff floor 1e-9: below it, monotonicity is noise
                    pass &= expect(r <= std::max(2.0 * prev[name], 1e-9),
                                   name + " residual non-increasing at N=" + std::to_string(n) +
                                       " (c=" + num(c) + "): " + num(prev[name]) + " -> " +
                                       num(r));
                }
            }
            prev = res;
        }
    }
    criterion(3, "curved wobble fixtures: identities at 1e-6 and monotone refinement", pass);
}

void criterion4GaussBonnet() {
    bool pass = true;

    const PathTrace lens = realizeTrace(lensSpec(), 2 * kN);
    const TheoremReport lensReport = verifyGaussBonnetMultiplicities(lens, 1e-6);
    pass &= expect(lensReport.residual < 1e-6, "plane lens residual " + num(lensReport.residual));
    const double alpha = std::atan(0.75);
    const auto lensAngles = interiorAngles(lens);
    pass &= expect(lensAngles.size() == 2, "plane lens has two corners");
    for (double theta : lensAngles) {
        pass &= expect(std::abs(theta - (kPi - 2 * alpha)) < 1e-8,
                       "lens corner angle, got " + num(theta));
    }
    pass &= expect(rotationIndex(lens) == 1, "lens rotation index measured as 1");

    const double lambda = 0.8;
    const PathTrace lune = realizeTrace(luneSpec(lambda), 2 * kN);
    const TheoremReport luneReport = verifyGaussBonnetMultiplicities(lune, 1e-6);
    pass &= expect(luneReport.residual < 1e-6, "spherical lens residual " +
                                                   num(luneReport.residual));
    for (double theta : interiorAngles(lune)) {
        pass &= expect(std::abs(theta - lambda) < 1e-8, "lune corner angle, got " + num(theta));
    }

    const PathTrace doubled = realizeTrace(doubledCircleSpec(), 2 * kN);
    const TheoremReport doubledReport = verifyGaussBonnetMultiplicities(doubled, 1e-6);
    pass &= expect(doubledReport.residual < 1e-6,
                   "doubly traversed circle residual " + num(doubledReport.residual));
    pass &= expect(rotationIndex(doubled) == 2, "doubled circle turns twice");
    for (double theta : interiorAngles(doubled)) {
        pass &= expect(std::abs(theta - kPi) < 1e-8, "flat joint angle, got " + num(theta));
    }
    note("lens residual " + num(lensReport.residual) + ", lune residual " +
         num(luneReport.residual) + ", doubled-circle residual " + num(doubledReport.residual));
    criterion(4, "Gauss-Bonnet with multiplicities (nu measured, angles closed-form)", pass);
}

void criterion5OracleEquivalence() {
    bool pass = true;

    std::vector<std::pair<std::string, PathTrace>> traces;
    for (double c : {-1.0, 0.0, 1.0}) {
        for (double rho : {0.3, 0.6, 1.0}) {
            traces.emplace_back("circle c=" + num(c) + " rho=" + num(rho),
                                traceOfCurve(realizeCurve(circleSpec(c, rho), 512)));
        }
    }
    const ClosedCurve ellipse = realizeCurve(ellipseSpec(), kN);
    traces.emplace_back("ellipse", traceOfCurve(ellipse));
    traces.emplace_back("ellipse evolute", traceOfEvolute(EvolutePath(ellipse)));
    for (double c : {1.0, -1.0}) {
        traces.emplace_back("wobble c=" + num(c),
                            traceOfCurve(realizeCurve(wobbleSpec(c), kN)));
    }
    traces.emplace_back("lens", realizeTrace(lensSpec(), 2048));
    traces.emplace_back("lune", realizeTrace(luneSpec(0.8), 2048));
    traces.emplace_back("doubled circle", realizeTrace(doubledCircleSpec(), 2048));

    double worstRatio = 0.0;
    for (const auto& [name, trace] : traces) {
        const AreaResult line = areaWithMultiplicities(trace);
        const AreaResult grid = areaGridOracle(trace, kGridRes);
        const double gap = std::abs(line.value - grid.value);
        worstRatio = std::max(worstRatio, gap / std::max(grid.estimatedError, 1e-300));
        pass &= expect(gap <= grid.estimatedError,
                       name + ": line vs grid gap " + num(gap) + " > bars " +
                           num(grid.estimatedError));
    }
    note("worst gap/errorbars ratio " + num(worstRatio));

    // two-chart winding agreement on 100 probes per smooth fixture
    std::vector<CurveSpec> smooth = {ellipseSpec(), wobbleSpec(1.0), wobbleSpec(-1.0),
                                     circleSpec(1.0, 0.6), circleSpec(-1.0, 0.6),
                                     circleSpec(0.0, 0.6)};
    for (const CurveSpec& spec : smooth) {
        const ClosedCurve curve = realizeCurve(spec, 512);
        const SpaceForm& sf = curve.spaceform();
        const ChartPtr a = makeChartAbout(sf, curve.basePoint());
        const ChartPtr b = makeAlternateChartAbout(sf, curve.basePoint());
        const PathTrace ta = traceOfCurve(curve, a);
        const PathTrace tb = traceOfCurve(curve, b);
        const auto frame = sf.tangentFrame(curve.basePoint());
        int checked = 0;
        for (int i = 0; i < 400 && checked < 100; ++i) {
            const double ang = uniform(0.0, kTwoPi);
            const Vec3 dir = std::cos(ang) * frame[0] + std::sin(ang) * frame[1];
            const Vec3 p = sf.geodesic(curve.basePoint(), dir, uniform(0.01, 1.6));
            if (!a->inDomain(p) || !b->inDomain(p)) continue;
            int wa, wb;
            try {
                wa = windingNumber(ta, p);
                wb = windingNumber(tb, p);
            } catch (const DomainError&) {
                continue;
            }
            pass &= (wa == wb);
            ++checked;
        }
        pass &= expect(checked >= 100, "enough valid probes for " + specKindName(spec));
    }
    criterion(5, "grid oracle vs line integral, and two-chart winding agreement", pass);
}

void criterion6PointwiseIdentities() {
    bool pass = true;
    std::vector<std::pair<std::string, CurveSpec>> fixtures = {
        {"ellipse", ellipseSpec()},          {"wobble c=1", wobbleSpec(1.0)},
        {"wobble c=-1", wobbleSpec(-1.0)},   {"circle c=0", circleSpec(0.0, 0.6)},
        {"circle c=1", circleSpec(1.0, 0.6)}, {"circle c=-1", circleSpec(-1.0, 0.6)},
    };
    for (const auto& [name, spec] : fixtures) {
        const ClosedCurve curve = realizeCurve(spec, kN);
        const SpaceForm& sf = curve.spaceform();
        const double c = sf.curvature();
        const EvolutePath ev(curve);
        const bool pointEvolute = ev.isPointEvolute();

        // spectral series of the normal and of the T field for the
        // derivative identities
        const int n = curve.sampleCount();
        const std::vector<FrameJet> jets = curve.gridJets(n);
        std::vector<double> comp[3], tcomp[3];
        for (int i = 0; i < 3; ++i) {
            comp[i].resize(n);
            tcomp[i].resize(n);
        }
        for (int j = 0; j < n; ++j) {
            const Vec3 nn = jets[j].normal;
            const Vec3 T = tField(jets[j], c);
            comp[0][j] = nn.x; comp[1][j] = nn.y; comp[2][j] = nn.z;
            tcomp[0][j] = T.x; tcomp[1][j] = T.y; tcomp[2][j] = T.z;
        }
        TrigSeries dn[3], dT[3];
        for (int i = 0; i < 3; ++i) {
            dn[i] = TrigSeries::fromSamples(comp[i]).derivativeSeries();
            dT[i] = TrigSeries::fromSamples(tcomp[i]).derivativeSeries();
        }

        for (int trial = 0; trial < 64; ++trial) {
            const double t = uniform(0.0, kTwoPi);
            const FrameJet jet = curve.jet(t);
            const double kg = jet.kg;
            const double k = jet.k.value();
            const double rho = jet.rho.value();

            // k^2 = kg^2 + c
            pass &= expect(std::abs(k * k - (kg * kg + c)) <= 1e-8 * std::abs(k * k),
                           name + ": ambient-curvature relation");
            // c tanc(rho/2) = -kg + k, and its c = 0 reading
            if (c != 0.0) {
                pass &= expect(std::abs(c * tanc(c, rho / 2) - (-kg + k)) < 1e-9,
                               name + ": half-angle identity");
            } else {
                pass &= expect(std::abs(tanc(0.0, rho / 2) - rho / 2) < 1e-12,
                               name + ": half-angle identity (plane)");
            }
            // 1/sn(rho) = k
            pass &= expect(std::abs(1.0 / sn(c, rho) - k) <= 1e-8 * k, name + ": 1/sn(rho) = k");

            // n' = -cotc(rho) gamma' (arclength form)
            const Vec3 dnds =
                Vec3{dn[0].value(t), dn[1].value(t), dn[2].value(t)} / jet.speed;
            pass &= expect(norm3(dnds + cotc(c, rho) * jet.tangent) < 1e-6,
                           name + ": normal derivative identity");

            // <DT/ds, gamma'> = k along the evolute
            Vec3 dTds = Vec3{dT[0].value(t), dT[1].value(t), dT[2].value(t)} / jet.speed;
            if (c != 0.0) {
                const Vec3 ge = ev.point(t);
                dTds -= (c * sf.inner(dTds, ge)) * ge;
            }
            pass &= expect(std::abs(sf.inner(dTds, jet.tangent) - k) < 1e-6,
                           name + ": T-field covariant rate");

            if (pointEvolute) continue;

            // evolute velocity identities at this parameter
            const double h = 1e-4;
            const Vec3 d1 = (ev.point(t + h) * 8.0 - ev.point(t - h) * 8.0 + ev.point(t - 2 * h) -
                             ev.point(t + 2 * h)) /
                            (12.0 * h);
            const double rhoPrime = jet.drho_ds.value();
            pass &= expect(std::abs(sf.norm(d1) / jet.speed - std::abs(rhoPrime)) < 1e-6,
                           name + ": |evolute velocity| = |rho'|");
            const double dspeed = sf.inner(jet.dgamma, jet.ddgamma) / jet.speed;
            const Vec3 gammaSS =
                (jet.ddgamma - (dspeed / jet.speed) * jet.dgamma) / (jet.speed * jet.speed);
            pass &= expect(norm3(d1 / jet.speed - rhoPrime * sn(c, rho) * gammaSS) < 1e-6,
                           name + ": evolute tangent identity");

            // Prop 3.3 at regular points
            if (ev.rhoPrimeArc(t) > ev.singularThreshold()) {
                const double ke = ev.geodesicCurvature(t);
                pass &= expect(std::abs(ke - k / std::abs(rhoPrime)) <= 1e-8 * ke,
                               name + ": evolute curvature = k/|rho'|");
                pass &= expect(std::abs(ke * std::abs(rhoPrime) * sn(c, rho) - 1.0) < 1e-8,
                               name + ": evolute curvature reciprocal form");
            }
        }

        // Prop 3.1 sign rule at well-separated regular points
        if (!pointEvolute) {
            int checked = 0;
            for (int trial = 0; trial < 400 && checked < 64; ++trial) {
                const double t = uniform(0.0, kTwoPi);
                const FrameJet jet = curve.jet(t);
                const double rhoPrime = jet.drho_ds.value();
                if (std::abs(rhoPrime) < 1e-2) continue;
                ++checked;
                const double h = 1e-4;
                Vec3 d1 = (ev.point(t + h) * 8.0 - ev.point(t - h) * 8.0 + ev.point(t - 2 * h) -
                           ev.point(t + 2 * h)) /
                          (12.0 * h);
                Vec3 d2 = (16.0 * (ev.point(t + h) + ev.point(t - h)) - 30.0 * ev.point(t) -
                           ev.point(t + 2 * h) - ev.point(t - 2 * h)) /
                          (12.0 * h * h);
                const double se = sf.norm(d1);
                const double dse = sf.inner(d1, d2) / se;
                Vec3 gss = (d2 - (dse / se) * d1) / (se * se);
                if (c != 0.0) {
                    const Vec3 ge = ev.point(t);
                    gss -= (c * sf.inner(gss, ge)) * ge;
                }
                const Vec3 ne = gss / sf.norm(gss);
                const Vec3 want = (rhoPrime < 0.0 ? 1.0 : -1.0) * jet.tangent;
                pass &= expect(norm3(ne - want) < 1e-4, name + ": evolute normal sign rule");
            }
            pass &= expect(checked >= 32, name + ": enough regular points sampled");
        }
    }
    criterion(6, "pointwise identity suite at 64 random parameters per fixture", pass);
}

void criterion7SignStructure() {
    bool pass = true;
    const std::vector<std::pair<std::string, CurveSpec>> fixtures = {
        {"ellipse", ellipseSpec()},
        {"wobble c=1", wobbleSpec(1.0)},
        {"wobble c=-1", wobbleSpec(-1.0)},
    };
    for (const auto& [name, spec] : fixtures) {
        const ClosedCurve curve = realizeCurve(spec, 1024);
        const PathTrace curveTrace = traceOfCurve(curve);
        const PathTrace evTrace = traceOfEvolute(EvolutePath(curve));
        // probe box in chart coordinates
        double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
        for (const Vec2& p : evTrace.polygon()) {
            xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
        }
        for (const Vec2& p : curveTrace.polygon()) {
            xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
        }
        const double mx = 0.2 * (xmax - xmin), my = 0.2 * (ymax - ymin);
        int probed = 0;
        while (probed < 1000) {
            const Vec2 p{uniform(xmin - mx, xmax + mx), uniform(ymin - my, ymax + my)};
            try {
                const int we = windingNumber(evTrace, p);
                const int wc = windingNumber(curveTrace, p);
                pass &= (we <= 0);
                pass &= (wc == 0 || wc == 1);
                pass &= (we * wc <= 0);
                ++probed;
            } catch (const DomainError&) {
            }
        }
        if (!pass) note(name + ": index sign structure violated");
    }

    // CLI gating: the deliberately non-convex fixture is rejected with exit 3
    const std::string fixtureDir = EVOFORM_FIXTURE_DIR;
    const std::string cli = EVOFORM_CLI_PATH;
    const std::string cmd =
        cli + " verify " + fixtureDir + "/nonconvex_plane.json >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    pass &= expect(code == 3, "CLI rejects the non-convex fixture with exit 3, got " +
                                  std::to_string(code));
    criterion(7, "index sign structure and strong-convexity gating", pass);
}

bool checkFixtureFiles() {
    bool pass = true;
    const std::string dir = EVOFORM_FIXTURE_DIR;
    for (const auto& [name, spec] : fixtureTable()) {
        const std::string path = dir + "/" + name;
        try {
            const CurveSpec loaded = loadCurveSpec(path);
            if (serializeCurveSpec(loaded) != serializeCurveSpec(spec)) {
                note("fixture drifted from its source spec: " + name);
                pass = false;
            } else {
                std::cout << "    fixture " << name << " digest " << specDigest(loaded) << "\n";
            }
        } catch (const Error& e) {
            note(std::string("fixture failed to load: ") + e.what());
            pass = false;
        }
    }
    return pass;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();

    std::cout << "fixture reproducibility:\n";
    const bool fixturesOk = checkFixtureFiles();
    std::cout << detail.str();
    detail.str("");
    if (!fixturesOk) ++failures;

    criterion1CircleExactness();
    criterion2Ellipse();
    criterion3CurvedWobbles();
    criterion4GaussBonnet();
    criterion5OracleEquivalence();
    criterion6PointwiseIdentities();
    criterion7SignStructure();

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << " (" << elapsed / 1000.0 << " s)\n";
    return failures == 0 ? 0 : 1;
}
