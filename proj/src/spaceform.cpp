#include "evoform/spaceform.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "evoform/errors.hpp"
#include "evoform/trig.hpp"

namespace evoform {

SpaceForm::SpaceForm(double curvature) : c_(curvature) {
    if (!std::isfinite(curvature)) {
        throw DomainError("SpaceForm: curvature must be finite");
    }
}

double SpaceForm::inner(const Vec3& u, const Vec3& v) const {
    if (model() == Model::Plane) {
        return u.x * v.x + u.y * v.y;
    }
    return u.x * v.x + u.y * v.y + epsilon() * u.z * v.z;
}

double SpaceForm::norm(const Vec3& u) const {
    const double q = inner(u, u);
    return q > 0.0 ? std::sqrt(q) : 0.0;
}

Vec3 SpaceForm::crossm(const Vec3& u, const Vec3& v) const {
    if (model() == Model::Plane) {
        throw DomainError("crossm: embedded model only");
    }
    const Vec3 p = cross3(u, v);
    return {p.x, p.y, epsilon() * p.z};
}

bool SpaceForm::onSurface(const Vec3& p, double relTol) const {
    if (model() == Model::Plane) {
        return p.z == 0.0;
    }
    if (c_ < 0.0 && !(p.z > 0.0)) {
        return false;
    }
    const double target = 1.0 / c_;
    return std::abs(inner(p, p) - target) <= relTol * std::abs(target);
}

Vec3 SpaceForm::projectToSurface(const Vec3& p) const {
    if (model() == Model::Plane) {
        return {p.x, p.y, 0.0};
    }
    const double q = inner(p, p);
    if (!(c_ * q > 0.0)) {
        throw PreconditionError("projectToSurface: point not on the model sheet");
    }
    if (c_ < 0.0 && !(p.z > 0.0)) {
        throw PreconditionError("projectToSurface: need z > 0 on the upper sheet");
    }
    return p / std::sqrt(c_ * q);
}

Vec3 SpaceForm::geodesic(const Vec3& x, const Vec3& y, double t) const {
    constexpr double tol = 1e-6;
    if (model() == Model::Plane) {
        if (std::abs(inner(y, y) - 1.0) > tol) {
            throw PreconditionError("geodesic: direction must be a unit vector");
        }
        return x + t * y;
    }
    if (!onSurface(x, 1e-6)) {
        throw PreconditionError("geodesic: base point not on the surface");
    }
    if (std::abs(inner(y, y) - 1.0) > tol || std::abs(inner(x, y)) > tol * norm3(x)) {
        throw PreconditionError("geodesic: direction must be a unit tangent at the base point");
    }
    return cn(c_, t) * x + sn(c_, t) * y;
}

double SpaceForm::distance(const Vec3& o, const Vec3& p) const {
    if (model() == Model::Plane) {
        return std::hypot(p.x - o.x, p.y - o.y);
    }
    // Chord-based form: <p-o, p-o> = (2/c)(1 - c<o,p>), accurate at short range.
    const Vec3 d = p - o;
    const double q = inner(d, d);
    if (c_ > 0.0) {
        const double arg = 0.5 * std::sqrt(c_ * std::max(q, 0.0));
        if (arg > 1.0 + 1e-12) {
            throw DomainError("distance: points beyond the model range");
        }
        return 2.0 / std::sqrt(c_) * std::asin(std::min(arg, 1.0));
    }
    const double arg = 0.5 * std::sqrt(-c_ * std::max(q, 0.0));
    return 2.0 / std::sqrt(-c_) * std::asinh(arg);
}

SpaceForm::Log SpaceForm::logMap(const Vec3& o, const Vec3& p) const {
    Log out;
    if (model() == Model::Plane) {
        const Vec3 d = p - o;
        const double r = std::hypot(d.x, d.y);
        if (r == 0.0) {
            throw DomainError("logMap: coincident points");
        }
        out.distance = r;
        out.direction = d / r;
        out.direction.z = 0.0;
        return out;
    }
    const double r = distance(o, p);
    if (r == 0.0) {
        throw DomainError("logMap: coincident points");
    }
    const double s = sn(c_, r);
    if (std::abs(s) < 1e-12 / std::sqrt(std::abs(c_))) {
        throw DomainError("logMap: antipodal points");
    }
    Vec3 dir = (p - cn(c_, r) * o) / s;
    // orthogonalize and renormalize against accumulated rounding
    dir -= (c_ * inner(dir, o)) * o;
    const double nn = norm(dir);
    if (!(nn > 0.0)) {
        throw DomainError("logMap: degenerate direction");
    }
    out.distance = r;
    out.direction = dir / nn;
    return out;
}

std::array<Vec3, 2> SpaceForm::tangentFrame(const Vec3& o) const {
    if (model() == Model::Plane) {
        return {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}};
    }
    Vec3 e1;
    for (const Vec3 seed : {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}, Vec3{0.0, 0.0, 1.0}}) {
        Vec3 v = seed - (c_ * inner(seed, o)) * o;
        const double q = inner(v, v);
        if (q > 1e-6) {
            e1 = v / std::sqrt(q);
            break;
        }
    }
    const Vec3 e2 = orientedNormal(o, e1);
    return {e1, e2};
}

double SpaceForm::orientedSine(const Vec3& p, const Vec3& u, const Vec3& v) const {
    if (model() == Model::Plane) {
        return u.x * v.y - u.y * v.x;
    }
    return std::sqrt(std::abs(c_)) * det3(u, v, p);
}

Vec3 SpaceForm::orientedNormal(const Vec3& p, const Vec3& unitTangent) const {
    if (model() == Model::Plane) {
        return {-unitTangent.y, unitTangent.x, 0.0};
    }
    return std::sqrt(std::abs(c_)) * crossm(p, unitTangent);
}

double SpaceForm::cutLocusRadius() const {
    if (c_ > 0.0) {
        return std::numbers::pi / std::sqrt(c_);
    }
    return std::numeric_limits<double>::infinity();
}

}  // namespace evoform
