#include "evoform/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "evoform/errors.hpp"
#include "evoform/trig.hpp"
#include "evoform/winding.hpp"

namespace evoform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWindingResidual = 0.05;
constexpr double kCuspDetect = 5e-3;  // |turn| within this of pi counts as a cusp

double wrapAngle(const Vec2& from, const Vec2& to) {
    return std::atan2(cross2(from, to), dot2(from, to));
}

}  // namespace

int windingNumber(const PathTrace& trace, const Vec2& p) {
    const PathTrace* use = &trace;
    PathTrace refined;
    for (int attempt = 0;; ++attempt) {
        const std::vector<Vec2> poly = use->polygon();
        if (polygonDistance(poly, p) < 1e-9 * (1.0 + norm2(p))) {
            throw DomainError("windingNumber: query point on the path");
        }
        double turns = 0.0;
        const int w = polygonWinding(poly, p, &turns);
        if (std::abs(turns - w) < kWindingResidual) {
            return w;
        }
        if (attempt >= 2 || !trace.resample) {
            throw ResolutionError("windingNumber: residual too large after refinement");
        }
        refined = trace.resample(attempt == 0 ? 4 : 16);
        use = &refined;
    }
}

int windingNumber(const PathTrace& trace, const Vec3& p) {
    return windingNumber(trace, trace.chart->map(p));
}

Vec3 defaultBasePoint(const PathTrace& trace) {
    if (!trace.hasSurfaceData()) {
        throw PreconditionError("defaultBasePoint: trace has no surface data");
    }
    const SpaceForm& sf = trace.sf;
    const std::vector<Vec3> poly = trace.surfacePolygon();
    Vec3 centroid;
    for (const Vec3& p : poly) centroid += p;
    centroid *= 1.0 / static_cast<double>(poly.size());

    const double cut = sf.cutLocusRadius();
    auto admissible = [&](const Vec3& o) {
        for (const Vec3& p : poly) {
            const double d = sf.distance(o, p);
            if (d < 1e-9 || d > cut * (1.0 - 1e-9)) return false;
        }
        return true;
    };

    Vec3 candidate = sf.projectToSurface(centroid);
    if (admissible(candidate)) return candidate;
    // nudge off the path, then fall back to the frame directions
    const auto frame = sf.tangentFrame(candidate);
    for (const double step : {0.05, 0.2, 0.5}) {
        for (const Vec3& dir : {frame[0], frame[1], -1.0 * frame[0], -1.0 * frame[1]}) {
            const Vec3 moved = sf.geodesic(candidate, dir, step);
            if (admissible(moved)) return moved;
        }
    }
    throw DomainError("defaultBasePoint: no admissible base point found; supply one explicitly");
}

namespace {

struct PolarSample {
    double g = 0.0;       // 2 sn^2(c, r/2)
    double dtheta = 0.0;  // d(theta)/d(param)
    double theta = 0.0;
};

PolarSample polarSample(const SpaceForm& sf, const Vec3& o, const std::array<Vec3, 2>& frame,
                        const Vec3& p, const Vec3& v) {
    PolarSample s;
    double a, b, da, db;
    if (sf.model() == Model::Plane) {
        a = p.x - o.x;
        b = p.y - o.y;
        da = v.x;
        db = v.y;
        s.g = 0.5 * (a * a + b * b);
    } else {
        a = sf.inner(p, frame[0]);
        b = sf.inner(p, frame[1]);
        da = sf.inner(v, frame[0]);
        db = sf.inner(v, frame[1]);
        const double c = sf.curvature();
        s.g = (1.0 - c * sf.inner(o, p)) / c;  // equals 2 sn^2(c, r/2)
    }
    const double q = a * a + b * b;
    if (!(q > 0.0)) {
        throw DomainError("areaWithMultiplicities: path touches the base point");
    }
    s.dtheta = (db * a - da * b) / q;
    s.theta = std::atan2(b, a);
    return s;
}

void checkThetaSteps(const std::vector<PolarSample>& samples, bool wrap) {
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i + 1 < n || (wrap && i < n); ++i) {
        const double t0 = samples[i].theta;
        const double t1 = samples[(i + 1) % n].theta;
        double d = std::remainder(t1 - t0, kTwoPi);
        if (std::abs(d) > 3.0) {
            throw ResolutionError("areaWithMultiplicities: theta step too large; refine the trace");
        }
    }
}

}  // namespace

AreaResult areaWithMultiplicities(const PathTrace& trace, std::optional<Vec3> basePoint) {
    if (!trace.hasSurfaceData()) {
        throw PreconditionError("areaWithMultiplicities: trace has no surface data");
    }
    const SpaceForm& sf = trace.sf;
    const Vec3 o = basePoint ? sf.projectToSurface(*basePoint) : defaultBasePoint(trace);
    const double cut = sf.cutLocusRadius();
    if (std::isfinite(cut)) {
        for (const auto& piece : trace.pieces) {
            for (const Vec3& p : piece.surfPoints) {
                if (sf.distance(o, p) > cut * (1.0 - 1e-9)) {
                    throw DomainError(
                        "areaWithMultiplicities: path beyond the cut locus of the base point; "
                        "re-center");
                }
            }
        }
    }
    const auto frame = sf.tangentFrame(o);

    double value = 0.0;
    double half = 0.0;
    std::size_t vertices = 0;
    for (const auto& piece : trace.pieces) {
        const std::size_t n = piece.surfPoints.size();
        vertices += n;
        std::vector<PolarSample> s(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = polarSample(sf, o, frame, piece.surfPoints[i], piece.surfVel[i]);
        }
        checkThetaSteps(s, trace.periodic);
        if (trace.periodic) {
            const double dt = piece.params[1] - piece.params[0];
            double acc = 0.0, accHalf = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double f = s[i].g * s[i].dtheta;
                acc += f;
                if ((i & 1) == 0) accHalf += f;
            }
            value += acc * dt;
            half += accHalf * 2.0 * dt;
        } else {
            // Simpson; piece builders provide 4k+1 vertices
            const double h = (piece.params.back() - piece.params.front()) / (n - 1);
            auto simpson = [&](std::size_t stride) {
                double acc = 0.0;
                const std::size_t m = (n - 1) / stride;
                for (std::size_t i = 0; i <= m; ++i) {
                    const PolarSample& ps = s[i * stride];
                    const double f = ps.g * ps.dtheta;
                    const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
                    acc += w * f;
                }
                return acc * h * stride / 3.0;
            };
            value += simpson(1);
            half += ((n - 1) % 4 == 0) ? simpson(2) : simpson(1);
        }
    }

    AreaResult out;
    out.value = value;
    out.method = AreaMethod::LineIntegral;
    out.basePoint = o;
    out.resolution = static_cast<int>(vertices);
    out.estimatedError = std::abs(value - half) + 1e-15 * std::abs(value);
    return out;
}

namespace {

struct GridAccum {
    double value = 0.0;
    double skipped = 0.0;
    long boundaryCells = 0;
    double maxAe = 0.0;
};

// Single-point ray cast along +x; returns nullopt when a crossing is too
// close to call.
std::optional<int> rayCastWinding(const std::vector<Vec2>& poly, const Vec2& p, double tol) {
    int w = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        if (a.y == b.y) continue;
        const bool up = a.y <= p.y && p.y < b.y;
        const bool down = b.y <= p.y && p.y < a.y;
        if (!up && !down) continue;
        const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (std::abs(x - p.x) < tol) return std::nullopt;
        if (x > p.x) w += up ? 1 : -1;
    }
    return w;
}

GridAccum gridPass(const PathTrace& trace, const std::vector<Vec2>& poly, int res, double x0,
                   double y0, double hx, double hy) {
    const Chart& chart = *trace.chart;
    GridAccum acc;
    const std::size_t nseg = poly.size();
    const double hitTol = 1e-7 * std::max(hx, hy);

    // bucket segments by row band
    std::vector<std::vector<int>> rowSegs(res);
    for (std::size_t i = 0; i < nseg; ++i) {
        const double ylo = std::min(poly[i].y, poly[(i + 1) % nseg].y);
        const double yhi = std::max(poly[i].y, poly[(i + 1) % nseg].y);
        int rlo = static_cast<int>(std::floor((ylo - y0) / hy - 1.0));
        int rhi = static_cast<int>(std::floor((yhi - y0) / hy + 1.0));
        rlo = std::clamp(rlo, 0, res - 1);
        rhi = std::clamp(rhi, 0, res - 1);
        for (int r = rlo; r <= rhi; ++r) rowSegs[r].push_back(static_cast<int>(i));
    }

    struct Crossing {
        double x;
        int sign;
    };
    std::vector<Crossing> cross;
    auto cellWeight = [&](double cx, double cy, double area) -> double {
        const double ae = chart.areaElement({cx, cy});
        acc.maxAe = std::max(acc.maxAe, ae);
        return ae * area;
    };

    for (int r = 0; r < res; ++r) {
        const double cy = y0 + (r + 0.5) * hy;
        cross.clear();
        for (int si : rowSegs[r]) {
            const Vec2& a = poly[si];
            const Vec2& b = poly[(si + 1) % nseg];
            if (a.y == b.y) continue;
            const bool up = a.y <= cy && cy < b.y;
            const bool down = b.y <= cy && cy < a.y;
            if (!up && !down) continue;
            cross.push_back({a.x + (cy - a.y) * (b.x - a.x) / (b.y - a.y), up ? 1 : -1});
        }
        std::sort(cross.begin(), cross.end(), [](const Crossing& u, const Crossing& v) {
            return u.x < v.x;
        });
        int suffix = 0;
        for (const Crossing& c : cross) suffix += c.sign;

        std::size_t k = 0;
        int prevWind = 0;
        for (int col = 0; col < res; ++col) {
            const double cx = x0 + (col + 0.5) * hx;
            bool hit = false;
            while (k < cross.size() && cross[k].x <= cx) {
                if (cx - cross[k].x < hitTol) hit = true;
                suffix -= cross[k].sign;
                ++k;
            }
            if (!hit && k < cross.size() && cross[k].x - cx < hitTol) hit = true;

            if (!hit) {
                const int w = suffix;
                if (col > 0 && w != prevWind) ++acc.boundaryCells;
                prevWind = w;
                if (w != 0) acc.value += w * cellWeight(cx, cy, hx * hy);
                continue;
            }
            // center effectively on the path: subdivide once
            ++acc.boundaryCells;
            for (int sub = 0; sub < 4; ++sub) {
                const double sx = cx + ((sub & 1) ? 0.25 : -0.25) * hx;
                const double sy = cy + ((sub & 2) ? 0.25 : -0.25) * hy;
                const auto w = rayCastWinding(poly, {sx, sy}, 0.5 * hitTol);
                if (!w) {
                    acc.skipped += std::abs(cellWeight(sx, sy, 0.25 * hx * hy));
                } else if (*w != 0) {
                    acc.value += *w * cellWeight(sx, sy, 0.25 * hx * hy);
                }
            }
        }
    }
    return acc;
}

}  // namespace

AreaResult areaGridOracle(const PathTrace& trace, int resolution) {
    if (resolution < 8) {
        throw PreconditionError("areaGridOracle: resolution too small");
    }
    const std::vector<Vec2> poly = trace.polygon();
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Vec2& p : poly) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double spanx = std::max(xmax - xmin, 1e-12);
    const double spany = std::max(ymax - ymin, 1e-12);
    const double x0 = xmin - 0.05 * spanx, x1 = xmax + 0.05 * spanx;
    const double y0 = ymin - 0.05 * spany, y1 = ymax + 0.05 * spany;

    auto run = [&](int res) {
        return gridPass(trace, poly, res, x0, y0, (x1 - x0) / res, (y1 - y0) / res);
    };
    const GridAccum full = run(resolution);
    const GridAccum halfRes = run(resolution / 2);

    AreaResult out;
    out.value = full.value;
    out.method = AreaMethod::GridOracle;
    out.resolution = resolution;
    const double cellArea = ((x1 - x0) / resolution) * ((y1 - y0) / resolution);
    out.estimatedError = std::abs(full.value - halfRes.value) + full.skipped +
                         0.125 * static_cast<double>(full.boundaryCells) * cellArea * full.maxAe;
    if (trace.hasSurfaceData()) {
        out.basePoint = defaultBasePoint(trace);
    }
    return out;
}

double TurningData::total() const {
    double t = arcTurning;
    for (double j : cornerJumps) t += j;
    return t;
}

double TurningData::residual() const {
    const double turns = total() / kTwoPi;
    return std::abs(turns - std::lround(turns));
}

TurningData measureTurning(const PathTrace& trace) {
    TurningData data;
    for (const auto& piece : trace.pieces) {
        const std::size_t n = piece.chartDirs.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Vec2& d0 = piece.chartDirs[i];
            const Vec2& d1 = piece.chartDirs[i + 1];
            if (norm2(d0) == 0.0 || norm2(d1) == 0.0) {
                throw PreconditionError("measureTurning: trace lacks tangent data");
            }
            const double step = wrapAngle(d0, d1);
            if (std::abs(step) > 2.5) {
                throw ResolutionError("measureTurning: tangent step too large; refine the trace");
            }
            data.arcTurning += step;
        }
    }
    if (trace.periodic && trace.pieces.size() == 1) {
        const auto& dirs = trace.pieces[0].chartDirs;
        data.arcTurning += wrapAngle(dirs.back(), dirs.front());
    }
    for (const auto& corner : trace.corners) {
        const double turn = wrapAngle(corner.leftDir, corner.rightDir);
        if (std::numbers::pi - std::abs(turn) < kCuspDetect) {
            if (!corner.cuspJumpSign) {
                throw ResolutionError("measureTurning: cusp without a jump-sign annotation");
            }
            data.cornerJumps.push_back(*corner.cuspJumpSign * std::numbers::pi);
        } else {
            data.cornerJumps.push_back(turn);
        }
    }
    return data;
}

int rotationIndex(const PathTrace& trace) {
    const PathTrace* use = &trace;
    PathTrace refined;
    for (int attempt = 0;; ++attempt) {
        const TurningData data = measureTurning(*use);
        if (data.residual() < kWindingResidual) {
            return static_cast<int>(std::lround(data.total() / kTwoPi));
        }
        if (attempt >= 2 || !trace.resample) {
            throw ResolutionError("rotationIndex: residual too large after refinement");
        }
        refined = trace.resample(attempt == 0 ? 4 : 16);
        use = &refined;
    }
}

std::vector<double> interiorAngles(const PathTrace& trace) {
    const TurningData data = measureTurning(trace);
    std::vector<double> out;
    out.reserve(data.cornerJumps.size());
    for (double jump : data.cornerJumps) {
        double theta = std::numbers::pi - jump;
        theta -= kTwoPi * std::floor(theta / kTwoPi);
        if (theta > kTwoPi - 1e-12) theta = 0.0;
        out.push_back(theta);
    }
    return out;
}

double integrateKgDs(const PathTrace& trace) {
    if (!trace.hasKg()) {
        throw PreconditionError("integrateKgDs: trace has no geodesic-curvature data");
    }
    double total = 0.0;
    for (const auto& piece : trace.pieces) {
        const std::size_t n = piece.kg.size();
        if (trace.periodic) {
            const double dt = piece.params[1] - piece.params[0];
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) acc += piece.kg[i] * piece.speed[i];
            total += acc * dt;
        } else {
            const double h = (piece.params.back() - piece.params.front()) / (n - 1);
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
                acc += w * piece.kg[i] * piece.speed[i];
            }
            total += acc * h / 3.0;
        }
    }
    return total;
}

}  // namespace evoform
