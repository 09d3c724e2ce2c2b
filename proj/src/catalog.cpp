#include "evoform/catalog.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "evoform/errors.hpp"
#include "evoform/trig.hpp"

namespace evoform {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::array<Vec3, 2> poleFrame(const SpaceForm& sf, const Vec3& pole,
                              const std::optional<std::array<Vec3, 2>>& given) {
    if (!given) return sf.tangentFrame(pole);
    const Vec3 e1 = given->at(0);
    const Vec3 e2 = given->at(1);
    if (std::abs(sf.inner(e1, e1) - 1.0) > 1e-9 || std::abs(sf.inner(e2, e2) - 1.0) > 1e-9 ||
        std::abs(sf.inner(e1, e2)) > 1e-9) {
        throw ParseError("polar_fourier: frame is not orthonormal");
    }
    return {e1, e2};
}

double polarRadius(const PolarFourierSpec& s, double theta) {
    double r = s.r0;
    for (std::size_t m = 0; m < s.cosCoeffs.size(); ++m) {
        r += s.cosCoeffs[m] * std::cos((m + 1.0) * theta);
    }
    for (std::size_t m = 0; m < s.sinCoeffs.size(); ++m) {
        r += s.sinCoeffs[m] * std::sin((m + 1.0) * theta);
    }
    return r;
}

Vec3 polarPoint(const SpaceForm& sf, const Vec3& pole, const std::array<Vec3, 2>& frame, double r,
                double theta) {
    const Vec3 dir = std::cos(theta) * frame[0] + std::sin(theta) * frame[1];
    if (sf.model() == Model::Plane) {
        return pole + r * dir;
    }
    const double c = sf.curvature();
    return cn(c, r) * pole + sn(c, r) * dir;
}

}  // namespace

double specCurvature(const CurveSpec& spec) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PlaneEllipseSpec>) {
                return 0.0;
            } else {
                return s.c;
            }
        },
        spec);
}

bool isPiecewiseSpec(const CurveSpec& spec) {
    return std::holds_alternative<PiecewiseArcsSpec>(spec);
}

std::string specKindName(const CurveSpec& spec) {
    struct Visitor {
        std::string operator()(const GeodesicCircleSpec&) const { return "geodesic_circle"; }
        std::string operator()(const PlaneEllipseSpec&) const { return "plane_ellipse"; }
        std::string operator()(const PolarFourierSpec&) const { return "polar_fourier"; }
        std::string operator()(const PiecewiseArcsSpec&) const { return "piecewise_arcs"; }
        std::string operator()(const RawSamplesSpec&) const { return "raw_samples"; }
    };
    return std::visit(Visitor{}, spec);
}

ClosedCurve realizeCurve(const CurveSpec& spec, int n) {
    if (const auto* s = std::get_if<GeodesicCircleSpec>(&spec)) {
        const SpaceForm sf(s->c);
        if (!(s->radius > 0.0)) {
            throw PreconditionError("geodesic_circle: radius must be positive");
        }
        if (s->c > 0.0 && !(s->radius < std::numbers::pi / std::sqrt(s->c))) {
            throw PreconditionError("geodesic_circle: radius beyond the antipode");
        }
        const Vec3 center = sf.projectToSurface(s->center);
        const auto frame = sf.tangentFrame(center);
        std::vector<Vec3> pts(n);
        for (int j = 0; j < n; ++j) {
            const double t = s->orientation * kTwoPi * j / n;
            pts[j] = polarPoint(sf, center, frame, s->radius, t);
        }
        return ClosedCurve::fromSamples(std::move(pts), sf);
    }
    if (const auto* s = std::get_if<PlaneEllipseSpec>(&spec)) {
        if (!(s->a > 0.0 && s->b > 0.0)) {
            throw PreconditionError("plane_ellipse: semiaxes must be positive");
        }
        const SpaceForm sf(0.0);
        std::vector<Vec3> pts(n);
        for (int j = 0; j < n; ++j) {
            const double t = s->orientation * kTwoPi * j / n;
            pts[j] = {s->a * std::cos(t), s->b * std::sin(t), 0.0};
        }
        return ClosedCurve::fromSamples(std::move(pts), sf);
    }
    if (const auto* s = std::get_if<PolarFourierSpec>(&spec)) {
        const SpaceForm sf(s->c);
        const Vec3 pole = sf.projectToSurface(s->pole);
        const auto frame = poleFrame(sf, pole, s->frame);
        // spec invariants: r stays positive, and inside the polar injectivity
        // range for c > 0
        double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
        for (int j = 0; j < 4096; ++j) {
            const double r = polarRadius(*s, kTwoPi * j / 4096);
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
        if (!(rmin > 0.0)) {
            throw PreconditionError("polar_fourier: radius function must stay positive");
        }
        if (s->c > 0.0 && !(rmax < 0.5 * std::numbers::pi / std::sqrt(s->c))) {
            throw PreconditionError("polar_fourier: radius exceeds pi/(2 sqrt(c))");
        }
        std::vector<Vec3> pts(n);
        for (int j = 0; j < n; ++j) {
            const double theta = s->orientation * kTwoPi * j / n;
            pts[j] = polarPoint(sf, pole, frame, polarRadius(*s, theta), theta);
        }
        return ClosedCurve::fromSamples(std::move(pts), sf);
    }
    if (const auto* s = std::get_if<RawSamplesSpec>(&spec)) {
        return ClosedCurve::fromSamples(s->points, SpaceForm(s->c));
    }
    throw PreconditionError("realizeCurve: piecewise specs realize as traces, not curves");
}

namespace {

struct ArcGeometry {
    Vec3 center;
    double dist = 0.0;
    double phiFrom = 0.0;
    double sweep = 0.0;  // signed
    std::array<Vec3, 2> frame;
};

ArcGeometry arcGeometry(const SpaceForm& sf, const ArcSpec& arc) {
    ArcGeometry g;
    g.center = sf.projectToSurface(arc.center);
    const Vec3 from = sf.projectToSurface(arc.from);
    const Vec3 to = sf.projectToSurface(arc.to);
    g.dist = sf.distance(g.center, from);
    const double dTo = sf.distance(g.center, to);
    if (std::abs(dTo - g.dist) > 1e-9 * (1.0 + g.dist)) {
        throw ParseError("piecewise_arcs: endpoints not equidistant from the arc center");
    }
    g.frame = sf.tangentFrame(g.center);
    auto angleOf = [&](const Vec3& p) {
        const Vec3 u = sf.logMap(g.center, p).direction;
        return std::atan2(sf.inner(u, g.frame[1]), sf.inner(u, g.frame[0]));
    };
    g.phiFrom = angleOf(from);
    const double phiTo = angleOf(to);
    double base = std::remainder(phiTo - g.phiFrom, kTwoPi);
    if (arc.direction >= 0) {
        if (base < 0.0) base += kTwoPi;
        g.sweep = base + kTwoPi * arc.turns;
    } else {
        if (base > 0.0) base -= kTwoPi;
        g.sweep = base - kTwoPi * arc.turns;
    }
    if (g.sweep == 0.0) {
        throw ParseError("piecewise_arcs: arc with zero sweep");
    }
    return g;
}

}  // namespace

PathTrace realizeTrace(const PiecewiseArcsSpec& spec, int targetVertices, ChartPtr chart) {
    if (spec.arcs.empty()) {
        throw ParseError("piecewise_arcs: no arcs");
    }
    const SpaceForm sf(spec.c);
    std::vector<ArcGeometry> geom;
    geom.reserve(spec.arcs.size());
    double totalSweep = 0.0;
    for (const ArcSpec& arc : spec.arcs) {
        geom.push_back(arcGeometry(sf, arc));
        totalSweep += std::abs(geom.back().sweep);
    }

    // chain closure
    for (std::size_t i = 0; i < spec.arcs.size(); ++i) {
        const Vec3 end = sf.projectToSurface(spec.arcs[i].to);
        const Vec3 next = sf.projectToSurface(spec.arcs[(i + 1) % spec.arcs.size()].from);
        if (sf.distance(end, next) > 1e-9 * (1.0 + sf.distance(end, geom[i].center))) {
            throw ParseError("piecewise_arcs: consecutive arc endpoints do not coincide");
        }
    }

    if (!chart) {
        Vec3 centroid;
        int count = 0;
        for (std::size_t i = 0; i < geom.size(); ++i) {
            for (int j = 0; j < 16; ++j) {
                const double phi = geom[i].phiFrom + geom[i].sweep * j / 16.0;
                const Vec3 dir =
                    std::cos(phi) * geom[i].frame[0] + std::sin(phi) * geom[i].frame[1];
                centroid += sf.model() == Model::Plane
                                ? geom[i].center + geom[i].dist * dir
                                : cn(spec.c, geom[i].dist) * geom[i].center +
                                      sn(spec.c, geom[i].dist) * dir;
                ++count;
            }
        }
        centroid *= 1.0 / count;
        chart = makeChartAbout(sf, sf.projectToSurface(centroid));
    }

    PathTrace trace;
    trace.chart = chart;
    trace.sf = sf;
    trace.periodic = false;
    trace.source = "piecewise_arcs";

    for (const ArcGeometry& g : geom) {
        const double absSweep = std::abs(g.sweep);
        int panels = static_cast<int>(std::ceil(targetVertices * absSweep / totalSweep / 4.0)) * 4;
        panels = std::max(panels, 8);
        const int count = panels + 1;
        const double sgn = g.sweep > 0.0 ? 1.0 : -1.0;
        const double snd = sn(spec.c, g.dist);
        const double cnd = cn(spec.c, g.dist);
        const double kg = sgn * cnd / snd;

        TracePiece piece;
        piece.params.resize(count);
        piece.chartPoints.resize(count);
        piece.chartDirs.resize(count);
        piece.surfPoints.resize(count);
        piece.surfVel.resize(count);
        piece.kg.assign(count, kg);
        piece.speed.assign(count, snd);
        for (int i = 0; i < count; ++i) {
            const double u = absSweep * i / panels;
            const double phi = g.phiFrom + sgn * u;
            const Vec3 dir = std::cos(phi) * g.frame[0] + std::sin(phi) * g.frame[1];
            const Vec3 ddir = -std::sin(phi) * g.frame[0] + std::cos(phi) * g.frame[1];
            Vec3 p, v;
            if (sf.model() == Model::Plane) {
                p = g.center + g.dist * dir;
                v = sgn * g.dist * ddir;
            } else {
                p = cnd * g.center + snd * dir;
                v = sgn * snd * ddir;
            }
            piece.params[i] = u;
            piece.chartPoints[i] = chart->map(p);
            piece.surfPoints[i] = p;
            piece.surfVel[i] = v;
            const Vec2 pushed = chart->pushforward(p, v);
            piece.chartDirs[i] = pushed / norm2(pushed);
        }
        trace.pieces.push_back(std::move(piece));
    }

    for (std::size_t k = 0; k < trace.pieces.size(); ++k) {
        const TracePiece& before = trace.pieces[k];
        const TracePiece& after = trace.pieces[(k + 1) % trace.pieces.size()];
        TraceCorner corner;
        corner.position = before.surfPoints.back();
        corner.leftDir = before.chartDirs.back();
        corner.rightDir = after.chartDirs.front();
        corner.surfLeft = before.surfVel.back() / sf.norm(before.surfVel.back());
        corner.surfRight = after.surfVel.front() / sf.norm(after.surfVel.front());
        trace.corners.push_back(corner);
    }

    const PiecewiseArcsSpec specCopy = spec;
    trace.resample = [specCopy, targetVertices, chart](int factor) {
        return realizeTrace(specCopy, targetVertices * factor, chart);
    };
    return trace;
}

// ---------------------------------------------------------------------------
// file formats

namespace {

json vecToJson(const Vec3& v, bool plane) {
    if (plane) return json::array({v.x, v.y});
    return json::array({v.x, v.y, v.z});
}

Vec3 vecFromJson(const json& j, bool plane) {
    if (!j.is_array() || j.size() != (plane ? 2u : 3u)) {
        throw ParseError("expected a " + std::string(plane ? "2" : "3") + "-vector");
    }
    Vec3 v{j.at(0).get<double>(), j.at(1).get<double>(), plane ? 0.0 : j.at(2).get<double>()};
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z)) {
        throw ParseError("non-finite vector component");
    }
    return v;
}

double finiteNumber(const json& j, const char* field) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError(std::string("non-finite value for field '") + field + "'");
    }
    return v;
}

}  // namespace

std::string serializeCurveSpec(const CurveSpec& spec) {
    json j;
    j["format"] = "evoform-curve";
    j["version"] = 1;
    const double c = specCurvature(spec);
    const bool plane = c == 0.0;
    j["c"] = c;
    j["kind"] = specKindName(spec);
    if (const auto* s = std::get_if<GeodesicCircleSpec>(&spec)) {
        j["center"] = vecToJson(s->center, plane);
        j["radius"] = s->radius;
        j["orientation"] = s->orientation;
    } else if (const auto* s = std::get_if<PlaneEllipseSpec>(&spec)) {
        j["a"] = s->a;
        j["b"] = s->b;
        j["orientation"] = s->orientation;
    } else if (const auto* s = std::get_if<PolarFourierSpec>(&spec)) {
        j["pole"] = vecToJson(s->pole, plane);
        j["r0"] = s->r0;
        j["cos"] = s->cosCoeffs;
        j["sin"] = s->sinCoeffs;
        j["orientation"] = s->orientation;
        if (s->frame) {
            j["frame"] = json::array(
                {vecToJson(s->frame->at(0), plane), vecToJson(s->frame->at(1), plane)});
        }
    } else if (const auto* s = std::get_if<PiecewiseArcsSpec>(&spec)) {
        json arcs = json::array();
        for (const ArcSpec& a : s->arcs) {
            json ja;
            ja["center"] = vecToJson(a.center, plane);
            ja["from"] = vecToJson(a.from, plane);
            ja["to"] = vecToJson(a.to, plane);
            ja["direction"] = a.direction;
            ja["turns"] = a.turns;
            arcs.push_back(ja);
        }
        j["arcs"] = arcs;
    } else if (const auto* s = std::get_if<RawSamplesSpec>(&spec)) {
        json pts = json::array();
        for (const Vec3& p : s->points) pts.push_back(vecToJson(p, plane));
        j["samples"] = pts;
    }
    return j.dump(2) + "\n";
}

CurveSpec parseCurveSpec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("curve file: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "evoform-curve") {
            throw ParseError("curve file: unexpected format tag");
        }
        if (j.at("version").get<int>() != 1) {
            throw ParseError("curve file: unsupported version");
        }
        const double c = finiteNumber(j.at("c"), "c");
        const bool plane = c == 0.0;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "geodesic_circle") {
            GeodesicCircleSpec s;
            s.c = c;
            s.center = vecFromJson(j.at("center"), plane);
            s.radius = finiteNumber(j.at("radius"), "radius");
            s.orientation = j.value("orientation", 1);
            return s;
        }
        if (kind == "plane_ellipse") {
            if (!plane) throw ParseError("plane_ellipse requires c = 0");
            PlaneEllipseSpec s;
            s.a = finiteNumber(j.at("a"), "a");
            s.b = finiteNumber(j.at("b"), "b");
            s.orientation = j.value("orientation", 1);
            return s;
        }
        if (kind == "polar_fourier") {
            PolarFourierSpec s;
            s.c = c;
            s.pole = vecFromJson(j.at("pole"), plane);
            s.r0 = finiteNumber(j.at("r0"), "r0");
            for (const auto& v : j.value("cos", json::array())) {
                s.cosCoeffs.push_back(finiteNumber(v, "cos"));
            }
            for (const auto& v : j.value("sin", json::array())) {
                s.sinCoeffs.push_back(finiteNumber(v, "sin"));
            }
            s.orientation = j.value("orientation", 1);
            if (j.contains("frame")) {
                s.frame = {vecFromJson(j.at("frame").at(0), plane),
                           vecFromJson(j.at("frame").at(1), plane)};
            }
            return s;
        }
        if (kind == "piecewise_arcs") {
            PiecewiseArcsSpec s;
            s.c = c;
            for (const auto& ja : j.at("arcs")) {
                ArcSpec a;
                a.center = vecFromJson(ja.at("center"), plane);
                a.from = vecFromJson(ja.at("from"), plane);
                a.to = vecFromJson(ja.at("to"), plane);
                a.direction = ja.value("direction", 1);
                a.turns = ja.value("turns", 0);
                s.arcs.push_back(a);
            }
            return s;
        }
        if (kind == "raw_samples") {
            RawSamplesSpec s;
            s.c = c;
            for (const auto& jp : j.at("samples")) {
                s.points.push_back(vecFromJson(jp, plane));
            }
            return s;
        }
        throw ParseError("curve file: unknown kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("curve file: ") + e.what());
    }
}

CurveSpec loadCurveSpec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open curve file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseCurveSpec(buf.str());
}

void saveCurveSpec(const CurveSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write curve file: " + path);
    }
    out << serializeCurveSpec(spec);
}

std::string serializeReports(const std::vector<TheoremReport>& reports) {
    json arr = json::array();
    for (const TheoremReport& r : reports) {
        if (!std::isfinite(r.lhs) || !std::isfinite(r.rhs) || !std::isfinite(r.residual) ||
            !std::isfinite(r.tolerance)) {
            throw ParseError("report '" + r.name + "' contains a non-finite value");
        }
        json jr;
        jr["name"] = r.name;
        jr["kind"] = r.kind == ReportKind::Identity ? "identity" : "inequality";
        jr["lhs"] = r.lhs;
        jr["rhs"] = r.rhs;
        jr["lhs_source"] = r.lhsSource;
        jr["rhs_source"] = r.rhsSource;
        jr["residual"] = r.residual;
        jr["tolerance"] = r.tolerance;
        jr["pass"] = r.pass;
        jr["inputs"] = r.inputs;
        arr.push_back(jr);
    }
    json j;
    j["format"] = "evoform-report";
    j["version"] = 1;
    j["reports"] = arr;
    return j.dump(2) + "\n";
}

std::vector<TheoremReport> parseReports(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("report file: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "evoform-report") {
            throw ParseError("report file: unexpected format tag");
        }
        std::vector<TheoremReport> out;
        for (const auto& jr : j.at("reports")) {
            TheoremReport r;
            r.name = jr.at("name").get<std::string>();
            const std::string kind = jr.at("kind").get<std::string>();
            if (kind == "identity") {
                r.kind = ReportKind::Identity;
            } else if (kind == "inequality") {
                r.kind = ReportKind::Inequality;
            } else {
                throw ParseError("report file: unknown kind '" + kind + "'");
            }
            r.lhs = finiteNumber(jr.at("lhs"), "lhs");
            r.rhs = finiteNumber(jr.at("rhs"), "rhs");
            r.lhsSource = jr.value("lhs_source", "");
            r.rhsSource = jr.value("rhs_source", "");
            r.residual = finiteNumber(jr.at("residual"), "residual");
            r.tolerance = finiteNumber(jr.at("tolerance"), "tolerance");
            r.pass = jr.at("pass").get<bool>();
            r.inputs = jr.value("inputs", "");
            out.push_back(std::move(r));
        }
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report file: ") + e.what());
    }
}

std::vector<TheoremReport> loadReports(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open report file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseReports(buf.str());
}

void saveReports(const std::vector<TheoremReport>& reports, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write report file: " + path);
    }
    out << serializeReports(reports);
}

std::string specDigest(const CurveSpec& spec) {
    const std::string text = serializeCurveSpec(spec);
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

}  // namespace evoform
