#pragma once

#include <array>

#include "evoform/vec.hpp"

namespace evoform {

enum class Model { Plane, Embedded };

// The simply connected surface of constant curvature c, realized as the plane
// (c = 0) or as the quadric <u,u> = 1/c in 3-space carrying the metric
// diag(1, 1, epsilon), epsilon = sign convention +1 / -1 for the sphere /
// hyperboloid (upper sheet, z > 0).
//
// Orientation convention: a tangent pair (u, v) at P is positively oriented
// iff det(u, v, P) > 0 in the embedded models, and iff cross2(u, v) > 0 in the
// plane.
class SpaceForm {
  public:
    explicit SpaceForm(double curvature);

    double curvature() const { return c_; }
    double epsilon() const { return c_ < 0.0 ? -1.0 : 1.0; }
    Model model() const { return c_ == 0.0 ? Model::Plane : Model::Embedded; }

    double inner(const Vec3& u, const Vec3& v) const;
    double norm(const Vec3& u) const;

    // Metric adjoint of the cross product: the unique X with <X,w> = det(u,v,w)
    // for all w.  Embedded model only.
    Vec3 crossm(const Vec3& u, const Vec3& v) const;

    bool onSurface(const Vec3& p, double relTol = kSurfaceTol) const;

    // Radial rescaling onto the quadric; identity (z forced to 0) in the plane.
    Vec3 projectToSurface(const Vec3& p) const;

    // Unit-speed geodesic from x with initial direction y, evaluated at
    // arclength t.
    Vec3 geodesic(const Vec3& x, const Vec3& y, double t) const;

    struct Log {
        double distance = 0.0;
        Vec3 direction;  // unit tangent at the base point
    };

    // Inverse of geodesic: geodesic(o, log.direction, log.distance) == p.
    Log logMap(const Vec3& o, const Vec3& p) const;

    double distance(const Vec3& o, const Vec3& p) const;

    // Deterministic positively oriented orthonormal tangent frame at o.
    std::array<Vec3, 2> tangentFrame(const Vec3& o) const;

    // Signed sine of the angle from unit tangent u to unit tangent v at p.
    double orientedSine(const Vec3& p, const Vec3& u, const Vec3& v) const;

    // The unit tangent n with (tangent, n) positively oriented.
    Vec3 orientedNormal(const Vec3& p, const Vec3& unitTangent) const;

    // pi/sqrt(c) for c > 0 (injectivity radius of the exponential map),
    // +infinity otherwise.
    double cutLocusRadius() const;

    static constexpr double kSurfaceTol = 1e-9;

  private:
    double c_;
};

}  // namespace evoform
