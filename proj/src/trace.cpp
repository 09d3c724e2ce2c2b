#include "evoform/trace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evoform/errors.hpp"

namespace evoform {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec2 unitOrZero(const Vec2& v) {
    const double n = norm2(v);
    return n > 0.0 ? v / n : Vec2{0.0, 0.0};
}
}  // namespace

std::vector<Vec2> PathTrace::polygon() const {
    std::vector<Vec2> out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto& pts = pieces[k].chartPoints;
        const std::size_t first = (k == 0) ? 0 : 1;  // joint vertex already present
        out.insert(out.end(), pts.begin() + first, pts.end());
    }
    if (!periodic && out.size() > 1) {
        if (norm2(out.back() - out.front()) < 1e-12 * (1.0 + norm2(out.front()))) {
            out.pop_back();
        }
    }
    return out;
}

std::vector<Vec3> PathTrace::surfacePolygon() const {
    std::vector<Vec3> out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto& pts = pieces[k].surfPoints;
        const std::size_t first = (k == 0) ? 0 : 1;
        out.insert(out.end(), pts.begin() + first, pts.end());
    }
    if (!periodic && out.size() > 1 && norm3(out.back() - out.front()) < 1e-12) {
        out.pop_back();
    }
    return out;
}

bool PathTrace::hasSurfaceData() const {
    for (const auto& p : pieces) {
        if (p.surfPoints.size() != p.chartPoints.size()) return false;
    }
    return !pieces.empty();
}

bool PathTrace::hasKg() const {
    for (const auto& p : pieces) {
        if (p.kg.size() != p.chartPoints.size()) return false;
    }
    return !pieces.empty();
}

std::size_t PathTrace::vertexCount() const {
    std::size_t n = 0;
    for (const auto& p : pieces) n += p.chartPoints.size();
    return n;
}

double PathTrace::resolutionBound() const {
    const std::vector<Vec2> poly = polygon();
    double worst = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        worst = std::max(worst, norm2(poly[(i + 1) % poly.size()] - poly[i]));
    }
    return worst;
}

PathTrace traceOfCurve(const ClosedCurve& curve, ChartPtr chart, int m) {
    if (m == 0) m = curve.sampleCount();
    if (!chart) chart = makeChartAbout(curve.spaceform(), curve.basePoint());

    PathTrace trace;
    trace.chart = chart;
    trace.sf = curve.spaceform();
    trace.periodic = true;
    trace.source = "curve";

    const std::vector<FrameJet> jets = curve.gridJets(m);
    TracePiece piece;
    piece.params.resize(m);
    piece.chartPoints.resize(m);
    piece.chartDirs.resize(m);
    piece.surfPoints.resize(m);
    piece.surfVel.resize(m);
    piece.kg.resize(m);
    piece.speed.resize(m);
    for (int j = 0; j < m; ++j) {
        const FrameJet& jet = jets[j];
        piece.params[j] = jet.t;
        piece.chartPoints[j] = chart->map(jet.gamma);
        piece.chartDirs[j] = unitOrZero(chart->pushforward(jet.gamma, jet.dgamma));
        piece.surfPoints[j] = jet.gamma;
        piece.surfVel[j] = jet.dgamma;
        piece.kg[j] = jet.kg;
        piece.speed[j] = jet.speed;
    }
    trace.pieces.push_back(std::move(piece));
    trace.resample = [curve, chart, m](int factor) {
        return traceOfCurve(curve, chart, m * factor);
    };
    return trace;
}

namespace {

TracePiece evoluteArcPiece(const EvolutePath& ev, const Chart& chart, double a, double b,
                           int vertices) {
    const SpaceForm& sf = ev.base().spaceform();
    TracePiece piece;
    piece.params.resize(vertices);
    piece.chartPoints.resize(vertices);
    piece.chartDirs.resize(vertices);
    piece.surfPoints.resize(vertices);
    piece.surfVel.resize(vertices);
    piece.speed.resize(vertices);
    const double eps = (b - a) * 1e-7;
    for (int i = 0; i < vertices; ++i) {
        const double t = a + (b - a) * i / (vertices - 1);
        const Vec3 p = ev.point(t);
        const Vec3 v = ev.velocity(t);
        piece.params[i] = t;
        piece.chartPoints[i] = chart.map(p);
        piece.surfPoints[i] = p;
        piece.surfVel[i] = v;
        piece.speed[i] = sf.norm(v);
        // one-sided limit directions at the cusp endpoints
        double ts = t;
        if (i == 0) ts = a + eps;
        if (i == vertices - 1) ts = b - eps;
        const Vec3 ps = ev.point(ts);
        const Vec3 vs = ev.velocity(ts);
        piece.chartDirs[i] = unitOrZero(chart.pushforward(ps, vs));
    }
    return piece;
}

int cuspJumpSignAt(const EvolutePath& ev, const Chart& chart, double t0, double h) {
    auto q = [&](double t) { return chart.map(ev.point(t)); };
    const Vec2 q0 = q(t0);
    const Vec2 qp = q(t0 + h), qm = q(t0 - h);
    const Vec2 qpp = q(t0 + 2 * h), qmm = q(t0 - 2 * h);
    const Vec2 A = (qp - 2.0 * q0 + qm) / (h * h);
    const Vec2 B = (qpp - 2.0 * qp + 2.0 * qm - qmm) / (2.0 * h * h * h);
    // The direction jump at a cusp is opposite to the turning of the tangent
    // line: -pi when the branches turn counterclockwise.
    return cross2(A, B) > 0.0 ? -1 : +1;
}

}  // namespace

PathTrace traceOfEvolute(const EvolutePath& ev, ChartPtr chart, int m, bool markCusps) {
    const ClosedCurve& curve = ev.base();
    if (ev.isPointEvolute()) {
        throw PreconditionError("traceOfEvolute: point evolute has no path");
    }
    if (m == 0) m = curve.sampleCount();
    if (!chart) chart = makeChartAbout(curve.spaceform(), curve.basePoint());

    PathTrace trace;
    trace.chart = chart;
    trace.sf = curve.spaceform();
    trace.source = "evolute";

    if (!markCusps || ev.singularParams().empty()) {
        trace.periodic = true;
        TracePiece piece;
        piece.params.resize(m);
        piece.chartPoints.resize(m);
        piece.chartDirs.resize(m);
        piece.surfPoints.resize(m);
        piece.surfVel.resize(m);
        piece.speed.resize(m);
        for (int j = 0; j < m; ++j) {
            const double t = kTwoPi * j / m;
            const Vec3 p = ev.point(t);
            const Vec3 v = ev.velocity(t);
            piece.params[j] = t;
            piece.chartPoints[j] = chart->map(p);
            piece.chartDirs[j] = unitOrZero(chart->pushforward(p, v));
            piece.surfPoints[j] = p;
            piece.surfVel[j] = v;
            piece.speed[j] = curve.spaceform().norm(v);
        }
        trace.pieces.push_back(std::move(piece));
        trace.resample = [ev, chart, m](int factor) {
            return traceOfEvolute(ev, chart, m * factor, false);
        };
    } else {
        trace.periodic = false;
        const auto& arcs = ev.regularArcs();
        const SpaceForm& sf = curve.spaceform();
        for (const auto& [a, b] : arcs) {
            int panels = std::max(4, static_cast<int>(std::ceil(m * (b - a) / kTwoPi / 2.0)) * 2);
            trace.pieces.push_back(evoluteArcPiece(ev, *chart, a, b, panels + 1));
        }
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            const TracePiece& before = trace.pieces[k];
            const TracePiece& after = trace.pieces[(k + 1) % arcs.size()];
            const double tCusp = arcs[k].second;
            TraceCorner corner;
            corner.position = ev.point(tCusp);
            corner.leftDir = before.chartDirs.back();
            corner.rightDir = after.chartDirs.front();
            const double eps = 1e-6;
            corner.surfLeft = ev.velocity(tCusp - eps);
            corner.surfLeft = corner.surfLeft / sf.norm(corner.surfLeft);
            corner.surfRight = ev.velocity(tCusp + eps);
            corner.surfRight = corner.surfRight / sf.norm(corner.surfRight);
            const double arcBefore = arcs[k].second - arcs[k].first;
            const double arcAfter = arcs[(k + 1) % arcs.size()].second -
                                    arcs[(k + 1) % arcs.size()].first;
            const double h = 0.05 * std::min({arcBefore, arcAfter, 1.0});
            corner.cuspJumpSign = cuspJumpSignAt(ev, *chart, tCusp, h);
            trace.corners.push_back(corner);
        }
    }
    return trace;
}

}  // namespace evoform
