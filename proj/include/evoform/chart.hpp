#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "evoform/spaceform.hpp"
#include "evoform/vec.hpp"

namespace evoform {

enum class ChartKind { Identity, Stereographic, BeltramiKlein };

// An oriented coordinate chart on the space form: orientation-preserving
// (positive Jacobian) on its whole domain, with a closed-form area element.
// Winding numbers and rotation indices computed through any such chart agree;
// angles are metric only in the conformal ones (identity, stereographic).
class Chart {
  public:
    virtual ~Chart() = default;

    virtual ChartKind kind() const = 0;
    virtual std::string describe() const = 0;

    virtual bool inDomain(const Vec3& p) const = 0;

    // Throws DomainError outside the domain.
    virtual Vec2 map(const Vec3& p) const = 0;

    // Differential at p applied to a tangent vector.
    virtual Vec2 pushforward(const Vec3& p, const Vec3& v) const = 0;

    // dS = areaElement(w) dw1 dw2.
    virtual double areaElement(const Vec2& w) const = 0;

    // Boundary circle radius for charts with a bounded image (Klein disk).
    virtual std::optional<double> imageRadius() const { return std::nullopt; }
};

using ChartPtr = std::shared_ptr<const Chart>;

// Plane chart; optional rigid motion (rotation by phi about origin, then
// translation) so that two genuinely different admissible charts exist for
// c = 0.
ChartPtr makeIdentityChart(const SpaceForm& sf, Vec2 offset = {0.0, 0.0}, double phi = 0.0);

// c > 0: projection from the excluded point q onto the plane of its polar
// great circle, scaled so the chart is orientation preserving and conformal.
ChartPtr makeStereographicChart(const SpaceForm& sf, const Vec3& excluded);

// c < 0: central projection of the hyperboloid onto the Klein disk, composed
// with the isometry that moves `center` to the apex.  Geodesics map to
// straight lines.
ChartPtr makeBeltramiKleinChart(const SpaceForm& sf, const Vec3& center);

// The default chart about a base point: identity / stereographic from the
// antipode of o / Klein centered at o.  Maps o to the origin.
ChartPtr makeChartAbout(const SpaceForm& sf, const Vec3& o);

// A second, genuinely different admissible chart about o (for cross-chart
// agreement checks).
ChartPtr makeAlternateChartAbout(const SpaceForm& sf, const Vec3& o);

}  // namespace evoform
