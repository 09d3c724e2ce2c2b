#include "evoform/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "evoform/chart.hpp"
#include "evoform/errors.hpp"
#include "evoform/trig.hpp"
#include "evoform/winding.hpp"

namespace evoform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool rhoAdmissible(double c, double kg) {
    if (c < 0.0) return kg > std::sqrt(-c);
    return kg > 0.0;
}

}  // namespace

ClosedCurve ClosedCurve::fromSamples(std::vector<Vec3> points, const SpaceForm& sf) {
    const int n = static_cast<int>(points.size());
    if (n < 16 || !is_power_of_two(n)) {
        throw PreconditionError("ClosedCurve: need a power-of-two sample count >= 16");
    }
    ClosedCurve curve(sf);
    curve.n_ = n;
    curve.samples_.reserve(points.size());
    for (const Vec3& p : points) {
        curve.samples_.push_back(sf.projectToSurface(p));
    }

    const int ncoord = sf.model() == Model::Plane ? 2 : 3;
    std::vector<double> comp(points.size());
    double tail = 0.0;
    for (int i = 0; i < ncoord; ++i) {
        for (int j = 0; j < n; ++j) {
            const Vec3& p = curve.samples_[j];
            comp[j] = i == 0 ? p.x : (i == 1 ? p.y : p.z);
        }
        curve.coord_[i] = TrigSeries::fromSamples(comp);
        curve.coordD_[i] = curve.coord_[i].derivativeSeries();
        curve.coordDD_[i] = curve.coordD_[i].derivativeSeries();
        tail = std::max(tail, curve.coord_[i].tailEnergyRatio());
    }
    curve.tail_ = tail;

    Vec3 centroid;
    for (const Vec3& p : curve.samples_) centroid += p;
    centroid *= 1.0 / n;
    curve.base_ = sf.projectToSurface(centroid);

    curve.buildFrames();
    return curve;
}

void ClosedCurve::buildFrames() {
    const double c = sf_.curvature();
    const int fine = 4 * n_;

    // velocity on the fine grid: regularity and convexity margin
    const int ncoord = sf_.model() == Model::Plane ? 2 : 3;
    std::vector<double> g[3], d1[3], d2[3];
    for (int i = 0; i < ncoord; ++i) {
        g[i] = coord_[i].gridValues(fine);
        d1[i] = coordD_[i].gridValues(fine);
        d2[i] = coordDD_[i].gridValues(fine);
    }
    auto at = [&](const std::vector<double>* a, int j) {
        return Vec3{a[0][j], a[1][j], ncoord == 3 ? a[2][j] : 0.0};
    };

    double minSpeed2 = std::numeric_limits<double>::infinity();
    double maxSpeed2 = 0.0;
    double margin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < fine; ++j) {
        const Vec3 gamma = at(g, j);
        const Vec3 vel = at(d1, j);
        const double s2 = sf_.inner(vel, vel);
        minSpeed2 = std::min(minSpeed2, s2);
        maxSpeed2 = std::max(maxSpeed2, s2);
        if (s2 > 0.0) {
            const Vec3 tangent = vel / std::sqrt(s2);
            const Vec3 normal = sf_.orientedNormal(gamma, tangent);
            const double kg = sf_.inner(at(d2, j), normal) / s2;
            margin = std::min(margin, kg - (c < 0.0 ? std::sqrt(-c) : 0.0));
        }
    }
    if (!(minSpeed2 > 1e-24 * std::max(1.0, maxSpeed2))) {
        throw PreconditionError("ClosedCurve: degenerate interpolant (vanishing speed)");
    }
    margin_ = margin;

    // speed interpolant on the sample grid drives length and arclength
    std::vector<double> speedSamples(n_);
    for (int j = 0; j < n_; ++j) {
        const Vec3 vel = at(d1, 4 * j);
        speedSamples[j] = std::sqrt(sf_.inner(vel, vel));
    }
    speed_ = TrigSeries::fromSamples(speedSamples);
    length_ = speed_.integralOverPeriod();

    if (margin_ > 0.0) {
        std::vector<double> rhoSamples(n_);
        for (int j = 0; j < n_; ++j) {
            const Vec3 gamma = at(g, 4 * j);
            const Vec3 vel = at(d1, 4 * j);
            const double s2 = sf_.inner(vel, vel);
            const Vec3 tangent = vel / std::sqrt(s2);
            const Vec3 normal = sf_.orientedNormal(gamma, tangent);
            const double kg = sf_.inner(at(d2, 4 * j), normal) / s2;
            rhoSamples[j] = arccot(c, kg);
        }
        rho_ = TrigSeries::fromSamples(rhoSamples);
    }

    // orientation from the winding of the chart image about the base point
    try {
        const ChartPtr chart = makeChartAbout(sf_, base_);
        std::vector<Vec2> poly(samples_.size());
        for (std::size_t j = 0; j < samples_.size(); ++j) poly[j] = chart->map(samples_[j]);
        orientation_ = polygonWinding(poly, chart->map(base_));
    } catch (const Error&) {
        orientation_ = 0;  // base point on the curve or chart trouble: unknown
    }
}

FrameJet ClosedCurve::jet(double t) const {
    FrameJet out;
    out.t = t;
    const int ncoord = sf_.model() == Model::Plane ? 2 : 3;
    double v[3] = {0, 0, 0}, dv[3] = {0, 0, 0}, ddv[3] = {0, 0, 0};
    for (int i = 0; i < ncoord; ++i) {
        v[i] = coord_[i].value(t);
        dv[i] = coordD_[i].value(t);
        ddv[i] = coordDD_[i].value(t);
    }
    out.gamma = {v[0], v[1], v[2]};
    out.dgamma = {dv[0], dv[1], dv[2]};
    out.ddgamma = {ddv[0], ddv[1], ddv[2]};

    const double c = sf_.curvature();
    const double s2 = sf_.inner(out.dgamma, out.dgamma);
    out.speed = std::sqrt(s2);
    out.tangent = out.dgamma / out.speed;
    out.normal = sf_.orientedNormal(out.gamma, out.tangent);
    out.kg = sf_.inner(out.ddgamma, out.normal) / s2;
    const double k2 = out.kg * out.kg + c;
    if (k2 > 0.0) out.k = std::sqrt(k2);
    if (rhoAdmissible(c, out.kg)) out.rho = arccot(c, out.kg);
    if (rho_) out.drho_ds = rho_->derivative(t) / out.speed;
    return out;
}

std::vector<FrameJet> ClosedCurve::gridJets(int m) const {
    const int ncoord = sf_.model() == Model::Plane ? 2 : 3;
    std::vector<double> g[3], d1[3], d2[3];
    for (int i = 0; i < ncoord; ++i) {
        g[i] = coord_[i].gridValues(m);
        d1[i] = coordD_[i].gridValues(m);
        d2[i] = coordDD_[i].gridValues(m);
    }
    std::vector<double> drho;
    if (rho_) drho = rho_->derivativeSeries().gridValues(m);

    const double c = sf_.curvature();
    std::vector<FrameJet> out(m);
    for (int j = 0; j < m; ++j) {
        FrameJet& jet = out[j];
        jet.t = kTwoPi * j / m;
        jet.gamma = {g[0][j], g[1][j], ncoord == 3 ? g[2][j] : 0.0};
        jet.dgamma = {d1[0][j], d1[1][j], ncoord == 3 ? d1[2][j] : 0.0};
        jet.ddgamma = {d2[0][j], d2[1][j], ncoord == 3 ? d2[2][j] : 0.0};
        const double s2 = sf_.inner(jet.dgamma, jet.dgamma);
        jet.speed = std::sqrt(s2);
        jet.tangent = jet.dgamma / jet.speed;
        jet.normal = sf_.orientedNormal(jet.gamma, jet.tangent);
        jet.kg = sf_.inner(jet.ddgamma, jet.normal) / s2;
        const double k2 = jet.kg * jet.kg + c;
        if (k2 > 0.0) jet.k = std::sqrt(k2);
        if (rhoAdmissible(c, jet.kg)) jet.rho = arccot(c, jet.kg);
        if (rho_) jet.drho_ds = drho[j] / jet.speed;
    }
    return out;
}

ClosedCurve ClosedCurve::parallelCurve(double r) const {
    if (!stronglyConvex()) {
        throw PreconditionError("parallelCurve: base curve not strongly convex");
    }
    if (r < 0.0) {
        throw PreconditionError("parallelCurve: offset must be nonnegative");
    }
    // Outward direction is -normal: for a positively oriented strongly convex
    // curve the oriented normal points toward the center of curvature.
    const std::vector<FrameJet> jets = gridJets(n_);
    std::vector<Vec3> pts(n_);
    for (int j = 0; j < n_; ++j) {
        pts[j] = sf_.geodesic(jets[j].gamma, -1.0 * jets[j].normal, r);
    }
    return fromSamples(std::move(pts), sf_);
}

double ClosedCurve::paramToArclength(double t) const { return speed_.cumulative(t); }

double ClosedCurve::arclengthToParam(double s) const {
    if (s < 0.0 || s > length_ * (1.0 + 1e-12)) {
        throw DomainError("arclengthToParam: s outside [0, length]");
    }
    double lo = 0.0, hi = kTwoPi;
    double t = kTwoPi * s / length_;
    for (int it = 0; it < 100; ++it) {
        const double f = paramToArclength(t) - s;
        if (f > 0.0) hi = std::min(hi, t); else lo = std::max(lo, t);
        const double dt = -f / std::max(speed_.value(t), 1e-300);
        double next = t + dt;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) < 1e-14 * kTwoPi) return next;
        t = next;
    }
    return t;
}

const TrigSeries& ClosedCurve::rhoSeries() const {
    if (!rho_) {
        throw PreconditionError("rhoSeries: curve not strongly convex");
    }
    return *rho_;
}

}  // namespace evoform
