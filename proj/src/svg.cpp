#include "evoform/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "evoform/errors.hpp"

namespace evoform {

namespace {

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 60.0;

struct Mapper {
    double scale = 1.0;
    double cx = 0.0, cy = 0.0;

    Vec2 operator()(const Vec2& p) const {
        // y grows upward in the chart, downward in SVG
        return {kCanvas / 2.0 + scale * (p.x - cx), kCanvas / 2.0 - scale * (p.y - cy)};
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void appendPath(std::ostringstream& os, const std::vector<Vec2>& poly, const Mapper& m,
                const char* cls) {
    os << "<path class=\"" << cls << "\" d=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 q = m(poly[i]);
        os << (i == 0 ? "M" : "L") << fmt(q.x) << " " << fmt(q.y);
    }
    os << "Z\"/>\n";
}

}  // namespace

std::string renderSvg(const PlotData& plot) {
    if (plot.curve.empty()) {
        throw PreconditionError("renderSvg: nothing to draw");
    }
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto grow = [&](const Vec2& p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (const Vec2& p : plot.curve) grow(p);
    for (const Vec2& p : plot.evolute) grow(p);
    if (plot.evolutePoint) grow(*plot.evolutePoint);
    if (plot.chartBoundary) {
        grow({*plot.chartBoundary, *plot.chartBoundary});
        grow({-*plot.chartBoundary, -*plot.chartBoundary});
    }
    if (plot.basePoint) grow(*plot.basePoint);

    Mapper m;
    m.cx = 0.5 * (xmin + xmax);
    m.cy = 0.5 * (ymin + ymax);
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    m.scale = (kCanvas - 2.0 * kMargin) / span;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
          "viewBox=\"0 0 1000 1000\">\n"
       << "<style>.curve{fill:none;stroke:#14506e;stroke-width:2.5}"
          ".evolute{fill:none;stroke:#b0413e;stroke-width:1.8}"
          ".cusp{fill:#b0413e;stroke:none}"
          ".boundary{fill:none;stroke:#999999;stroke-width:1;stroke-dasharray:6 4}"
          ".base{stroke:#2e7d32;stroke-width:2}</style>\n";

    if (plot.chartBoundary) {
        const Vec2 c = m({0.0, 0.0});
        os << "<circle class=\"boundary\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
           << "\" r=\"" << fmt(*plot.chartBoundary * m.scale) << "\"/>\n";
    }
    appendPath(os, plot.curve, m, "curve");
    if (!plot.evolute.empty()) {
        appendPath(os, plot.evolute, m, "evolute");
    }
    for (const Vec2& p : plot.cusps) {
        const Vec2 q = m(p);
        os << "<circle class=\"cusp\" cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y)
           << "\" r=\"6\"/>\n";
    }
    if (plot.evolutePoint) {
        const Vec2 q = m(*plot.evolutePoint);
        os << "<circle class=\"cusp\" cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y)
           << "\" r=\"5\"/>\n";
    }
    if (plot.basePoint) {
        const Vec2 q = m(*plot.basePoint);
        os << "<path class=\"base\" d=\"M" << fmt(q.x - 8) << " " << fmt(q.y) << "L"
           << fmt(q.x + 8) << " " << fmt(q.y) << "M" << fmt(q.x) << " " << fmt(q.y - 8) << "L"
           << fmt(q.x) << " " << fmt(q.y + 8) << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace evoform
