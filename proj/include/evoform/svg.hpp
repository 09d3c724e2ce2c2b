#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evoform/vec.hpp"

namespace evoform {

// Static plot of chart-space geometry on a fixed 1000x1000 canvas.
// Deterministic: identical inputs produce byte-identical output.
struct PlotData {
    std::vector<Vec2> curve;                 // closed polyline
    std::vector<Vec2> evolute;               // optional closed polyline
    std::vector<Vec2> cusps;                 // markers on the evolute
    std::optional<Vec2> evolutePoint;        // point evolute marker
    std::optional<double> chartBoundary;     // circle radius about the origin
    std::optional<Vec2> basePoint;
};

std::string renderSvg(const PlotData& plot);

}  // namespace evoform
