#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "evoform/catalog.hpp"
#include "evoform/errors.hpp"
#include "evoform/evolute.hpp"
#include "evoform/series.hpp"
#include "evoform/trig.hpp"

using namespace evoform;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ClosedCurve ellipse21(int n = 1024) { return realizeCurve(PlaneEllipseSpec{2.0, 1.0, +1}, n); }

ClosedCurve sphereWobble(int n = 1024) {
    return realizeCurve(PolarFourierSpec{1.0, {0, 0, 1}, 0.6, {0.0, 0.05}, {}, +1, {}}, n);
}

ClosedCurve hypWobble(int n = 1024) {
    return realizeCurve(PolarFourierSpec{-1.0, {0, 0, 1}, 0.6, {0.0, 0.05}, {}, +1, {}}, n);
}

// five-point central differences for first/second derivatives of the evolute
void evoluteJetFd(const EvolutePath& ev, double t, double h, Vec3* d1, Vec3* d2) {
    const Vec3 pm2 = ev.point(t - 2 * h), pm1 = ev.point(t - h), p0 = ev.point(t),
               pp1 = ev.point(t + h), pp2 = ev.point(t + 2 * h);
    *d1 = (pm2 - 8.0 * pm1 + 8.0 * pp1 - pp2) / (12.0 * h);
    *d2 = (-1.0 * pm2 + 16.0 * pm1 - 30.0 * p0 + 16.0 * pp1 - pp2) / (12.0 * h * h);
}

std::mt19937 rng(4242);
double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
}

}  // namespace

TEST_CASE("circles collapse to a point evolute") {
    for (double c : {0.0, 1.0, -1.0}) {
        const ClosedCurve circle = realizeCurve(GeodesicCircleSpec{c, {0, 0, 1}, 0.7, +1}, 256);
        const EvolutePath ev(circle);
        CHECK(ev.isPointEvolute());
        // every sample sits at the center
        const Vec3 center = circle.spaceform().model() == Model::Plane
                                ? Vec3{0, 0, 0}
                                : circle.spaceform().projectToSurface({0, 0, 1});
        for (const Vec3& p : ev.samples()) {
            const bool close = circle.spaceform().model() == Model::Plane
                                   ? norm3(p - center) < 1e-9
                                   : circle.spaceform().distance(p, center) < 1e-7;
            CHECK(close);
        }
    }
}

TEST_CASE("ellipse evolute has the astroid's four cusps") {
    const EvolutePath ev(ellipse21());
    REQUIRE(ev.singularParams().size() == 4);
    const double expected[4] = {0.0, std::numbers::pi / 2, std::numbers::pi,
                                1.5 * std::numbers::pi};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(ev.singularParams()[i] - expected[i]) < 1e-10);
    }
    CHECK(ev.regularArcs().size() == 4);
    CHECK_FALSE(ev.isPointEvolute());

    // astroid vertices: (±(a^2-b^2)/a, 0), (0, ±(a^2-b^2)/b)
    CHECK(norm3(ev.point(0.0) - Vec3{1.5, 0, 0}) < 1e-10);
    CHECK(norm3(ev.point(std::numbers::pi / 2) - Vec3{0, -3.0, 0}) < 1e-10);
}

TEST_CASE("curved wobble fixtures have four singular points") {
    for (const ClosedCurve& curve : {sphereWobble(), hypWobble()}) {
        const EvolutePath ev(curve);
        CHECK(ev.singularParams().size() == 4);
        CHECK(ev.singularParams().size() % 2 == 0);
        for (const Vec3& p : ev.samples()) {
            CHECK(curve.spaceform().onSurface(p, 1e-9));
        }
    }
}

TEST_CASE("non-convex input is rejected") {
    const ClosedCurve wavy =
        realizeCurve(PolarFourierSpec{0.0, {0, 0, 0}, 1.0, {0.0, 0.35}, {}, +1, {}}, 512);
    CHECK_THROWS_AS(EvolutePath{wavy}, PreconditionError);
}

TEST_CASE("a degenerate singular set is refused") {
    // plane curve from a support function chosen so that rho(theta) =
    // 1 + a sin^3(3 theta): rho' has double roots (no sign change) wherever
    // sin(3 theta) = 0
    const double a = 0.1;
    const int n = 1024;
    std::vector<Vec3> pts(n);
    for (int j = 0; j < n; ++j) {
        const double th = kTwoPi * j / n;
        // h + h'' = rho, solved per harmonic
        const double h = 1.0 - (3.0 * a / 32.0) * std::sin(3 * th) +
                         (a / 320.0) * std::sin(9 * th);
        const double hp = -(9.0 * a / 32.0) * std::cos(3 * th) +
                          (9.0 * a / 320.0) * std::cos(9 * th);
        pts[j] = {h * std::cos(th) - hp * std::sin(th), h * std::sin(th) + hp * std::cos(th), 0};
    }
    const ClosedCurve curve = ClosedCurve::fromSamples(pts, SpaceForm(0.0));
    REQUIRE(curve.stronglyConvex());
    // sanity: the realized radius of curvature is the prescribed one
    CHECK(curve.jet(0.4).rho.value() ==
          doctest::Approx(1.0 + a * std::pow(std::sin(1.2), 3)).epsilon(1e-9));
    CHECK_THROWS_AS(EvolutePath{curve}, PreconditionError);
}

TEST_CASE("T field: unit norm, tangency, plane limit") {
    const ClosedCurve circle = realizeCurve(GeodesicCircleSpec{0.0, {0, 0, 0}, 1.0, +1}, 256);
    for (double t : {0.2, 1.8, 4.0}) {
        const FrameJet jet = circle.jet(t);
        CHECK(norm3(tField(circle, t) + jet.normal) < 1e-10);  // T = -n in the plane
    }

    for (const ClosedCurve& curve : {sphereWobble(512), hypWobble(512)}) {
        const double c = curve.spaceform().curvature();
        const EvolutePath ev(curve);
        for (int i = 0; i < 32; ++i) {
            const double t = uniform(0.0, kTwoPi);
            const Vec3 T = tField(curve, t);
            CHECK(curve.spaceform().inner(T, T) == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(std::abs(curve.spaceform().inner(T, ev.point(t))) < 1e-10);
            (void)c;
        }
    }
}

TEST_CASE("covariant rate of the T field reproduces the ambient curvature") {
    for (const ClosedCurve& curve : {ellipse21(), sphereWobble(), hypWobble()}) {
        const double c = curve.spaceform().curvature();
        const int n = curve.sampleCount();
        const std::vector<FrameJet> jets = curve.gridJets(n);
        std::vector<double> tx(n), ty(n), tz(n);
        for (int j = 0; j < n; ++j) {
            const Vec3 T = tField(jets[j], c);
            tx[j] = T.x;
            ty[j] = T.y;
            tz[j] = T.z;
        }
        const TrigSeries dx = TrigSeries::fromSamples(tx).derivativeSeries();
        const TrigSeries dy = TrigSeries::fromSamples(ty).derivativeSeries();
        const TrigSeries dz = TrigSeries::fromSamples(tz).derivativeSeries();
        const EvolutePath ev(curve);
        for (int j = 0; j < n; j += 61) {
            const FrameJet& jet = jets[j];
            Vec3 dTds = Vec3{dx.value(jet.t), dy.value(jet.t), dz.value(jet.t)} / jet.speed;
            if (c != 0.0) {
                const Vec3 ge = ev.point(jet.t);
                dTds -= (c * curve.spaceform().inner(dTds, ge)) * ge;
            }
            CHECK(curve.spaceform().inner(dTds, jet.tangent) ==
                  doctest::Approx(jet.k.value()).epsilon(1e-6));
        }
    }
}

TEST_CASE("evolute velocity: direction, magnitude, measured sign") {
    for (const ClosedCurve& curve : {ellipse21(), sphereWobble(), hypWobble()}) {
        const EvolutePath ev(curve);
        CHECK(ev.tangentFieldSign() == -1);  // d(evolute)/ds = -rho' T
        const SpaceForm& sf = curve.spaceform();
        for (int i = 0; i < 24; ++i) {
            const double t = uniform(0.0, kTwoPi);
            const FrameJet jet = curve.jet(t);
            Vec3 d1, d2;
            evoluteJetFd(ev, t, 1e-3, &d1, &d2);

            // analytic velocity against finite differences
            CHECK(norm3(d1 - ev.velocity(t)) < 1e-8);

            // |d(evolute)/ds| = |rho'(s)|
            const double lhs = sf.norm(d1) / jet.speed;
            CHECK(std::abs(lhs - ev.rhoPrimeArc(t)) < 1e-6);

            // d(evolute)/ds = rho'(s) sn(rho) gamma''(s)
            const double dspeed = sf.inner(jet.dgamma, jet.ddgamma) / jet.speed;
            const Vec3 gammaSS =
                (jet.ddgamma - (dspeed / jet.speed) * jet.dgamma) / (jet.speed * jet.speed);
            const double rhoPrime = jet.drho_ds.value();
            const Vec3 rhs = rhoPrime * sn(sf.curvature(), jet.rho.value()) * gammaSS;
            CHECK(norm3(d1 / jet.speed - rhs) < 1e-6);
        }
    }
}

TEST_CASE("normal of the evolute flips with the sign of rho'") {
    for (const ClosedCurve& curve : {ellipse21(), sphereWobble()}) {
        const EvolutePath ev(curve);
        const SpaceForm& sf = curve.spaceform();
        const double c = sf.curvature();
        int checked = 0;
        for (int i = 0; i < 200 && checked < 24; ++i) {
            const double t = uniform(0.0, kTwoPi);
            const FrameJet jet = curve.jet(t);
            const double rhoPrime = jet.drho_ds.value();
            if (std::abs(rhoPrime) < 1e-2) continue;
            ++checked;

            Vec3 d1, d2;
            evoluteJetFd(ev, t, 1e-4, &d1, &d2);
            const double se = sf.norm(d1);
            const double dse = sf.inner(d1, d2) / se;
            Vec3 gammaSS = (d2 - (dse / se) * d1) / (se * se);
            if (c != 0.0) {
                const Vec3 ge = ev.point(t);
                gammaSS -= (c * sf.inner(gammaSS, ge)) * ge;
            }
            const Vec3 ne = gammaSS / sf.norm(gammaSS);
            const Vec3 expected = (rhoPrime < 0.0 ? 1.0 : -1.0) * jet.tangent;
            CHECK(norm3(ne - expected) < 1e-4);
        }
        REQUIRE(checked >= 16);
    }
}

TEST_CASE("evolute curvature formulas") {
    const ClosedCurve e = ellipse21();
    const EvolutePath ev(e);
    const SpaceForm& sf = e.spaceform();

    // independent finite-difference curvature of the evolute at t = pi/4
    {
        const double t = std::numbers::pi / 4;
        Vec3 d1, d2;
        evoluteJetFd(ev, t, 1e-4, &d1, &d2);
        const double num = std::abs(cross2({d1.x, d1.y}, {d2.x, d2.y}));
        const double den = std::pow(norm2({d1.x, d1.y}), 3.0);
        CHECK(ev.geodesicCurvature(t) == doctest::Approx(num / den).epsilon(1e-6));
    }

    for (const ClosedCurve& curve : {e, sphereWobble(), hypWobble()}) {
        const EvolutePath evo(curve);
        const double c = curve.spaceform().curvature();
        for (int i = 0; i < 200; ++i) {
            const double t = uniform(0.0, kTwoPi);
            const FrameJet jet = curve.jet(t);
            const double rp = evo.rhoPrimeArc(t);
            if (rp <= evo.singularThreshold()) continue;
            // k_e |rho'| sn(rho) = 1
            CHECK(evo.geodesicCurvature(t) * rp * sn(c, jet.rho.value()) ==
                  doctest::Approx(1.0).epsilon(1e-8));
        }
        (void)sf;
    }

    // inside the singular threshold the curvature is refused
    CHECK_THROWS_AS(ev.geodesicCurvature(0.0), DomainError);
}

TEST_CASE("total evolute curvature by substitution and by excised quadrature") {
    // point evolute: the substitution integral is still the curvature total
    const ClosedCurve circle = realizeCurve(GeodesicCircleSpec{1.0, {0, 0, 1}, 0.7, +1}, 256);
    const auto circleTotal = totalEvoluteCurvature(EvolutePath(circle));
    CHECK(circleTotal.value == doctest::Approx(kTwoPi).epsilon(1e-12));
    CHECK_FALSE(circleTotal.direct.has_value());

    const auto ellipseTotal = totalEvoluteCurvature(EvolutePath(ellipse21()));
    CHECK(ellipseTotal.value == doctest::Approx(kTwoPi).epsilon(1e-10));  // turning number one
    REQUIRE(ellipseTotal.direct.has_value());
    CHECK(*ellipseTotal.gap < 1e-3);

    const auto wobbleTotal = totalEvoluteCurvature(EvolutePath(sphereWobble()));
    CHECK(*wobbleTotal.gap < 1e-3);
}
