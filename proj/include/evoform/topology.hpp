#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evoform/trace.hpp"

namespace evoform {

enum class AreaMethod { LineIntegral, GridOracle };

struct AreaResult {
    double value = 0.0;  // signed area with multiplicities
    AreaMethod method = AreaMethod::LineIntegral;
    Vec3 basePoint;
    int resolution = 0;  // grid cells per axis, or vertex count for the line integral
    double estimatedError = 0.0;
};

// Winding number of the traced path about a chart point, by argument
// accumulation.  If the pre-rounding residual exceeds 0.05 the trace is
// refined (when it can be) and retried; otherwise ResolutionError.
int windingNumber(const PathTrace& trace, const Vec2& p);

// Same, for a surface point mapped through the trace's chart.
int windingNumber(const PathTrace& trace, const Vec3& p);

// Base point for the polar area integral: the surface projection of the
// vertex centroid, nudged along the path's first vertex direction if the
// centroid lands on the path or (c > 0) sees it beyond the cut locus.
Vec3 defaultBasePoint(const PathTrace& trace);

// Signed area enclosed with multiplicities, as the line integral of the
// geodesic-polar 1-form  2 sn^2(c, r/2) dtheta  about the base point; its
// exterior derivative is exactly the area element, uniformly in c.  Reduces
// to the familiar (x dy - y dx)/2 when c = 0.
AreaResult areaWithMultiplicities(const PathTrace& trace,
                                  std::optional<Vec3> basePoint = std::nullopt);

// Brute-force oracle: index times area-element weight summed over a chart
// grid.  Cells whose center lies on the path are subdivided once; still-hit
// subcells are skipped and pooled into estimatedError.
AreaResult areaGridOracle(const PathTrace& trace, int resolution);

// Turning number of the tangent direction: accumulated chart-angle
// increments along the pieces plus the corner jumps, divided by 2 pi.  Cusp
// jumps (+-pi) take their sign from the corner annotation.
int rotationIndex(const PathTrace& trace);

// Interior angle at each corner, in [0, 2 pi): pi - (left-to-right tangent
// turn); 0 at cusps, pi at straight-through joints.
std::vector<double> interiorAngles(const PathTrace& trace);

// Integral of the signed geodesic curvature over the regular stretches.
double integrateKgDs(const PathTrace& trace);

// Piece-wise accumulated tangent turning and measured corner jumps, the raw
// material of the rotation index; exposed for the Gauss-Bonnet assembly.
struct TurningData {
    double arcTurning = 0.0;            // sum over pieces of d(theta)
    std::vector<double> cornerJumps;    // one per corner, in (-pi, pi] or +-pi at cusps
    double total() const;
    double residual() const;            // distance of total/2pi from an integer
};
TurningData measureTurning(const PathTrace& trace);

}  // namespace evoform
