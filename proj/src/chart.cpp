#include "evoform/chart.hpp"

#include <cmath>

#include "evoform/errors.hpp"

namespace evoform {

namespace {

class IdentityChart final : public Chart {
  public:
    IdentityChart(Vec2 offset, double phi) : offset_(offset), c_(std::cos(phi)), s_(std::sin(phi)) {}

    ChartKind kind() const override { return ChartKind::Identity; }
    std::string describe() const override { return "identity"; }
    bool inDomain(const Vec3&) const override { return true; }

    Vec2 map(const Vec3& p) const override {
        return Vec2{c_ * p.x - s_ * p.y, s_ * p.x + c_ * p.y} + offset_;
    }
    Vec2 pushforward(const Vec3&, const Vec3& v) const override {
        return {c_ * v.x - s_ * v.y, s_ * v.x + c_ * v.y};
    }
    double areaElement(const Vec2&) const override { return 1.0; }

  private:
    Vec2 offset_;
    double c_, s_;
};

// Orthonormal frame orthogonal to the unit vector q (Euclidean), oriented so
// that det(f1, f2, q) = -1; that makes the projection orientation preserving
// for the det(u, v, P) > 0 surface orientation.
std::array<Vec3, 2> stereoFrame(const Vec3& q) {
    Vec3 seed{1.0, 0.0, 0.0};
    if (std::abs(q.x) > 0.9) seed = {0.0, 1.0, 0.0};
    Vec3 f1 = seed - dot3(seed, q) * q;
    f1 = f1 / norm3(f1);
    const Vec3 f2 = cross3(f1, q);
    return {f1, f2};
}

class StereographicChart final : public Chart {
  public:
    StereographicChart(const SpaceForm& sf, const Vec3& excluded) : sf_(sf) {
        const double rc = std::sqrt(sf.curvature());
        radius_ = 1.0 / rc;
        q_ = sf.projectToSurface(excluded) * rc;
        const auto f = stereoFrame(q_);
        f1_ = f[0];
        f2_ = f[1];
    }

    ChartKind kind() const override { return ChartKind::Stereographic; }
    std::string describe() const override { return "stereographic"; }

    bool inDomain(const Vec3& p) const override { return denom(p) > 1e-9; }

    Vec2 map(const Vec3& p) const override {
        const double d = denom(p);
        if (!(d > 1e-12)) {
            throw DomainError("stereographic chart: point at or too near the excluded point");
        }
        const Vec3 u = p / radius_;
        return {radius_ * dot3(u, f1_) / d, radius_ * dot3(u, f2_) / d};
    }

    Vec2 pushforward(const Vec3& p, const Vec3& v) const override {
        const double d = denom(p);
        if (!(d > 1e-12)) {
            throw DomainError("stereographic chart: point at or too near the excluded point");
        }
        const Vec3 u = p / radius_;
        const Vec3 w = v / radius_;
        const double wq = dot3(w, q_);
        const double k = radius_ / (d * d);
        return {k * (dot3(w, f1_) * d + dot3(u, f1_) * wq),
                k * (dot3(w, f2_) * d + dot3(u, f2_) * wq)};
    }

    double areaElement(const Vec2& w) const override {
        const double s = 1.0 + sf_.curvature() * dot2(w, w);
        return 4.0 / (s * s);
    }

  private:
    double denom(const Vec3& p) const { return 1.0 - dot3(p, q_) / radius_; }

    SpaceForm sf_;
    double radius_;
    Vec3 q_, f1_, f2_;
};

class BeltramiKleinChart final : public Chart {
  public:
    BeltramiKleinChart(const SpaceForm& sf, const Vec3& center) : sf_(sf) {
        radius_ = 1.0 / std::sqrt(-sf.curvature());
        const Vec3 o = sf.projectToSurface(center);
        const auto f = sf.tangentFrame(o);
        e1_ = f[0];
        e2_ = f[1];
        ohat_ = o / radius_;  // <ohat, ohat> = -1
    }

    ChartKind kind() const override { return ChartKind::BeltramiKlein; }
    std::string describe() const override { return "beltrami-klein"; }
    bool inDomain(const Vec3& p) const override { return zeta(p) > 0.0; }

    Vec2 map(const Vec3& p) const override {
        const double z = zeta(p);
        if (!(z > 0.0)) {
            throw DomainError("klein chart: point not on the upper sheet");
        }
        return {radius_ * sf_.inner(p, e1_) / z, radius_ * sf_.inner(p, e2_) / z};
    }

    Vec2 pushforward(const Vec3& p, const Vec3& v) const override {
        const double z = zeta(p);
        const double dz = -sf_.inner(v, ohat_);
        const double x1 = sf_.inner(p, e1_), x2 = sf_.inner(p, e2_);
        const double d1 = sf_.inner(v, e1_), d2 = sf_.inner(v, e2_);
        const double k = radius_ / (z * z);
        return {k * (d1 * z - x1 * dz), k * (d2 * z - x2 * dz)};
    }

    double areaElement(const Vec2& w) const override {
        const double s = 1.0 + sf_.curvature() * dot2(w, w);
        if (!(s > 0.0)) {
            throw DomainError("klein chart: point outside the disk");
        }
        return 1.0 / (s * std::sqrt(s));
    }

    std::optional<double> imageRadius() const override { return radius_; }

  private:
    double zeta(const Vec3& p) const { return -sf_.inner(p, ohat_); }

    SpaceForm sf_;
    double radius_;
    Vec3 e1_, e2_, ohat_;
};

}  // namespace

ChartPtr makeIdentityChart(const SpaceForm& sf, Vec2 offset, double phi) {
    if (sf.model() != Model::Plane) {
        throw DomainError("identity chart: plane model only");
    }
    return std::make_shared<IdentityChart>(offset, phi);
}

ChartPtr makeStereographicChart(const SpaceForm& sf, const Vec3& excluded) {
    if (!(sf.curvature() > 0.0)) {
        throw DomainError("stereographic chart: c > 0 only");
    }
    return std::make_shared<StereographicChart>(sf, excluded);
}

ChartPtr makeBeltramiKleinChart(const SpaceForm& sf, const Vec3& center) {
    if (!(sf.curvature() < 0.0)) {
        throw DomainError("klein chart: c < 0 only");
    }
    return std::make_shared<BeltramiKleinChart>(sf, center);
}

ChartPtr makeChartAbout(const SpaceForm& sf, const Vec3& o) {
    if (sf.model() == Model::Plane) {
        return makeIdentityChart(sf, Vec2{-o.x, -o.y}, 0.0);
    }
    if (sf.curvature() > 0.0) {
        return makeStereographicChart(sf, -1.0 * sf.projectToSurface(o));
    }
    return makeBeltramiKleinChart(sf, o);
}

ChartPtr makeAlternateChartAbout(const SpaceForm& sf, const Vec3& o) {
    if (sf.model() == Model::Plane) {
        const double phi = 0.7;
        const Vec2 ro{std::cos(phi) * o.x - std::sin(phi) * o.y,
                      std::sin(phi) * o.x + std::cos(phi) * o.y};
        return makeIdentityChart(sf, Vec2{0.3, -0.2} - ro, phi);
    }
    const Vec3 op = sf.projectToSurface(o);
    const Vec3 e1 = sf.tangentFrame(op)[0];
    const Vec3 shifted = sf.geodesic(op, e1, 0.35 / std::sqrt(std::abs(sf.curvature())));
    if (sf.curvature() > 0.0) {
        return makeStereographicChart(sf, -1.0 * shifted);
    }
    return makeBeltramiKleinChart(sf, shifted);
}

}  // namespace evoform
