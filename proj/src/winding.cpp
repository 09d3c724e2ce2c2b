#include "evoform/winding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "evoform/errors.hpp"

namespace evoform {

int polygonWinding(std::span<const Vec2> polygon, const Vec2& p, double* turns) {
    const std::size_t n = polygon.size();
    if (n < 3) {
        throw DomainError("polygonWinding: need at least 3 vertices");
    }
    double total = 0.0;
    Vec2 prev = polygon[n - 1] - p;
    if (prev.x == 0.0 && prev.y == 0.0) {
        throw DomainError("polygonWinding: query point on the path");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 cur = polygon[i] - p;
        if (cur.x == 0.0 && cur.y == 0.0) {
            throw DomainError("polygonWinding: query point on the path");
        }
        total += std::atan2(cross2(prev, cur), dot2(prev, cur));
        prev = cur;
    }
    const double w = total / (2.0 * std::numbers::pi);
    if (turns) *turns = w;
    return static_cast<int>(std::lround(w));
}

double polygonDistance(std::span<const Vec2> polygon, const Vec2& p) {
    const std::size_t n = polygon.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = polygon[i];
        const Vec2 b = polygon[(i + 1) % n];
        const Vec2 ab = b - a;
        const double len2 = dot2(ab, ab);
        double u = len2 > 0.0 ? dot2(p - a, ab) / len2 : 0.0;
        u = std::clamp(u, 0.0, 1.0);
        const Vec2 q = a + u * ab;
        best = std::min(best, norm2(p - q));
    }
    return best;
}

}  // namespace evoform
