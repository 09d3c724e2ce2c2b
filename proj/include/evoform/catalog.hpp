#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "evoform/curve.hpp"
#include "evoform/theorems.hpp"
#include "evoform/trace.hpp"

namespace evoform {

struct GeodesicCircleSpec {
    double c = 0.0;
    Vec3 center;
    double radius = 1.0;
    int orientation = +1;
};

struct PlaneEllipseSpec {
    double a = 2.0;
    double b = 1.0;
    int orientation = +1;
};

// Geodesic polar graph about a pole: r(theta) = r0 + sum_m (cos_m cos(m theta)
// + sin_m sin(m theta)).  The tangent frame at the pole defaults to the
// deterministic oriented frame.
struct PolarFourierSpec {
    double c = 0.0;
    Vec3 pole;
    double r0 = 1.0;
    std::vector<double> cosCoeffs;
    std::vector<double> sinCoeffs;
    int orientation = +1;
    std::optional<std::array<Vec3, 2>> frame;
};

// One geodesic-circle arc, swept from `from` to `to` about `center` in the
// `direction` sense (+1 counterclockwise), plus `turns` extra full turns.
struct ArcSpec {
    Vec3 center, from, to;
    int direction = +1;
    int turns = 0;
};

struct PiecewiseArcsSpec {
    double c = 0.0;
    std::vector<ArcSpec> arcs;
};

struct RawSamplesSpec {
    double c = 0.0;
    std::vector<Vec3> points;
};

using CurveSpec = std::variant<GeodesicCircleSpec, PlaneEllipseSpec, PolarFourierSpec,
                               PiecewiseArcsSpec, RawSamplesSpec>;

double specCurvature(const CurveSpec& spec);
bool isPiecewiseSpec(const CurveSpec& spec);
std::string specKindName(const CurveSpec& spec);

// Sampled realization of a smooth spec at n points (RawSamples ignores n).
// Strong convexity is measured, not assumed; the caller inspects the margin.
ClosedCurve realizeCurve(const CurveSpec& spec, int n);

// Realization of a piecewise-arcs spec as a corner-annotated trace;
// targetVertices controls the total sampling budget.
PathTrace realizeTrace(const PiecewiseArcsSpec& spec, int targetVertices,
                       ChartPtr chart = nullptr);

// --- file formats (structured JSON text, round-trip exact) ---

CurveSpec parseCurveSpec(const std::string& text);
std::string serializeCurveSpec(const CurveSpec& spec);
CurveSpec loadCurveSpec(const std::string& path);
void saveCurveSpec(const CurveSpec& spec, const std::string& path);

std::vector<TheoremReport> parseReports(const std::string& text);
std::string serializeReports(const std::vector<TheoremReport>& reports);
std::vector<TheoremReport> loadReports(const std::string& path);
void saveReports(const std::vector<TheoremReport>& reports, const std::string& path);

// FNV-1a over the canonical serialization; stable across platforms.
std::string specDigest(const CurveSpec& spec);

}  // namespace evoform
