#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evoform/chart.hpp"
#include "evoform/curve.hpp"
#include "evoform/evolute.hpp"
#include "evoform/vec.hpp"

namespace evoform {

// One smooth stretch of a traced path.  params are strictly increasing;
// a periodic trace has a single piece with uniform params and no duplicated
// endpoint, a piecewise trace has one piece per smooth arc with both
// endpoints included (odd vertex count, so Simpson applies directly).
struct TracePiece {
    std::vector<double> params;
    std::vector<Vec2> chartPoints;
    std::vector<Vec2> chartDirs;    // unit chart tangents
    std::vector<Vec3> surfPoints;
    std::vector<Vec3> surfVel;      // d(point)/d(param)
    std::vector<double> kg;         // signed geodesic curvature (may be empty)
    std::vector<double> speed;      // |d(point)/d(param)| in the surface metric
};

// Corner k joins the end of piece k to the start of piece k+1 (wrapping).
struct TraceCorner {
    Vec2 leftDir, rightDir;          // unit chart directions
    Vec3 surfLeft, surfRight;        // unit surface tangents
    Vec3 position;
    std::optional<int> cuspJumpSign; // +-1 when the one-sided tangents are opposite
};

// A closed path in an oriented chart: the common currency for winding
// numbers, rotation indices, corner angles and area integrals.  Works for
// smooth curves, evolutes (cusps become corners with zero interior angle) and
// piecewise-arc fixtures.
class PathTrace {
  public:
    ChartPtr chart;
    SpaceForm sf{0.0};
    std::vector<TracePiece> pieces;
    std::vector<TraceCorner> corners;
    bool periodic = false;  // single piece covering the full period
    std::string source;
    std::function<PathTrace(int)> resample;  // same path, denser by the given factor

    // Concatenated chart points (duplicate joints dropped).
    std::vector<Vec2> polygon() const;
    std::vector<Vec3> surfacePolygon() const;

    bool hasSurfaceData() const;
    bool hasKg() const;
    std::size_t vertexCount() const;

    // Largest chart-space gap between consecutive polygon vertices.
    double resolutionBound() const;
};

// Chart image of a smooth closed curve at m uniform parameters.
PathTrace traceOfCurve(const ClosedCurve& curve, ChartPtr chart = nullptr, int m = 0);

// Chart image of an evolute.  With markCusps the trace is split at the
// singular parameters into corner-joined pieces (one-sided tangents, cusp
// jump signs from local chart jets); without, it is a plain periodic trace,
// which is what the area integrals want (the pulled-back integrand is smooth
// through the cusps).  Throws PreconditionError for a point evolute.
PathTrace traceOfEvolute(const EvolutePath& evolute, ChartPtr chart = nullptr, int m = 0,
                         bool markCusps = false);

}  // namespace evoform
