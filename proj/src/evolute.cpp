#include "evoform/evolute.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evoform/errors.hpp"
#include "evoform/trig.hpp"

namespace evoform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegenerateRel = 1e-8;   // |rho'| below this (rel to max) w/o sign change
constexpr double kPointEvoluteAbs = 1e-10;
constexpr double kBisectTol = 1e-12;

Vec3 evolutePointFromJet(const FrameJet& jet, double c) {
    const double rho = jet.rho.value();
    return cn(c, rho) * jet.gamma + sn(c, rho) * jet.normal;
}

}  // namespace

Vec3 tField(const FrameJet& jet, double c) {
    if (!jet.rho) {
        throw PreconditionError("tField: curve not strongly convex at this parameter");
    }
    const double rho = *jet.rho;
    return c * sn(c, rho) * jet.gamma - cn(c, rho) * jet.normal;
}

Vec3 tField(const ClosedCurve& curve, double t) {
    return tField(curve.jet(t), curve.spaceform().curvature());
}

EvolutePath::EvolutePath(const ClosedCurve& curve) : base_(std::make_shared<ClosedCurve>(curve)) {
    if (!curve.stronglyConvex()) {
        throw PreconditionError("evolute: curve not strongly convex");
    }
    const double c = curve.spaceform().curvature();
    const int n = curve.sampleCount();

    const std::vector<FrameJet> jets = curve.gridJets(n);
    samples_.resize(n);
    velocityNorms_.resize(n);
    double maxRho = 0.0;
    for (int j = 0; j < n; ++j) {
        samples_[j] = evolutePointFromJet(jets[j], c);
        velocityNorms_[j] = std::abs(jets[j].drho_ds.value());
        maxRho = std::max(maxRho, std::abs(jets[j].rho.value()));
    }

    const TrigSeries drho = curve.rhoSeries().derivativeSeries();
    const int fine = 4 * n;
    const std::vector<double> f = drho.gridValues(fine);
    maxRhoPrime_ = 0.0;
    for (double v : f) maxRhoPrime_ = std::max(maxRhoPrime_, std::abs(v));
    singularThreshold_ = kDegenerateRel * maxRhoPrime_;

    if (maxRhoPrime_ < kPointEvoluteAbs * std::max(1.0, maxRho)) {
        pointEvolute_ = true;
        tangentSign_ = 0;
        return;
    }

    // Roots of drho/dt: sign-change bracketing on the fine grid, bisection to
    // parameter tolerance; grid values tiny without a sign change flag a
    // degenerate (non-isolated) singular set.
    const double step = kTwoPi / fine;
    const double nodeTol = 1e-13 * maxRhoPrime_;
    std::vector<double> roots;
    for (int i = 0; i < fine; ++i) {
        const double fa = f[i];
        const double fb = f[(i + 1) % fine];
        const double ta = step * i;
        if (std::abs(fa) <= nodeTol) {
            // root exactly on a grid node; a genuine cusp changes sign across it
            double before = 0.0, after = 0.0;
            for (int k = 1; k <= 8 && (before == 0.0 || after == 0.0); ++k) {
                if (before == 0.0 && std::abs(f[(i + fine - k) % fine]) > nodeTol) {
                    before = f[(i + fine - k) % fine];
                }
                if (after == 0.0 && std::abs(f[(i + k) % fine]) > nodeTol) {
                    after = f[(i + k) % fine];
                }
            }
            if (before == 0.0 || after == 0.0 || before * after > 0.0) {
                throw PreconditionError(
                    "evolute: degenerate singular set (rho' vanishes without a sign change)");
            }
            roots.push_back(ta);
            continue;
        }
        if (std::abs(fb) <= nodeTol) {
            continue;  // handled as the next node
        }
        if (fa * fb < 0.0) {
            double lo = ta, hi = ta + step;
            double flo = fa;
            while (hi - lo > kBisectTol) {
                const double mid = 0.5 * (lo + hi);
                const double fm = drho.value(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                roots.end());
    if (roots.size() >= 2 && roots.front() + kTwoPi - roots.back() < 1e-9) {
        roots.pop_back();
    }

    auto nearRoot = [&](double t) {
        for (double r : roots) {
            double d = std::abs(t - r);
            d = std::min(d, kTwoPi - d);
            if (d < 2.0 * step) return true;
        }
        return false;
    };
    // Local minima of |rho'| away from the sign-change roots: refine and see
    // whether they reach the singular threshold (a double root never crosses
    // zero, so bracketing alone cannot find it).
    for (int i = 0; i < fine; ++i) {
        const double fa = std::abs(f[(i + fine - 1) % fine]);
        const double fb = std::abs(f[i]);
        const double fc = std::abs(f[(i + 1) % fine]);
        if (fb > fa || fb > fc || nearRoot(step * i)) continue;
        if (fb > 1e-4 * maxRhoPrime_) continue;  // nowhere near vanishing
        double lo = step * (i - 1), hi = step * (i + 1);
        for (int it = 0; it < 80; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (std::abs(drho.value(m1)) < std::abs(drho.value(m2))) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        if (std::abs(drho.value(0.5 * (lo + hi))) < singularThreshold_) {
            throw PreconditionError(
                "evolute: degenerate singular set (rho' vanishes without a sign change)");
        }
    }

    singularParams_ = roots;
    if (!roots.empty()) {
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const double a = roots[i];
            const double b = i + 1 < roots.size() ? roots[i + 1] : roots[0] + kTwoPi;
            regularArcs_.emplace_back(a, b);
        }
    }

    // Measure the relative sign between T and the forward direction of the
    // evolute at the point of largest |rho'|.
    int jmax = 0;
    for (int j = 1; j < n; ++j) {
        if (velocityNorms_[j] > velocityNorms_[jmax]) jmax = j;
    }
    const double t0 = kTwoPi * jmax / n;
    const double h = 1e-5;
    const Vec3 fd = (point(t0 + h) - point(t0 - h)) / (2.0 * h);
    const FrameJet jet = curve.jet(t0);
    const double along = curve.spaceform().inner(fd, tField(jet, c)) / jet.speed;
    tangentSign_ = along * jet.drho_ds.value() > 0.0 ? +1 : -1;
}

Vec3 EvolutePath::point(double t) const {
    const FrameJet jet = base_->jet(t);
    if (!jet.rho) {
        throw PreconditionError("evolute: curve not strongly convex at this parameter");
    }
    return evolutePointFromJet(jet, base_->spaceform().curvature());
}

Vec3 EvolutePath::velocity(double t) const {
    const FrameJet jet = base_->jet(t);
    const double c = base_->spaceform().curvature();
    const double drho_dt = base_->rhoSeries().derivative(t);
    return -drho_dt * tField(jet, c);
}

double EvolutePath::rhoPrimeArc(double t) const {
    const FrameJet jet = base_->jet(t);
    return std::abs(base_->rhoSeries().derivative(t)) / jet.speed;
}

double EvolutePath::geodesicCurvature(double t) const {
    const FrameJet jet = base_->jet(t);
    const double rp = std::abs(base_->rhoSeries().derivative(t)) / jet.speed;
    if (rp <= singularThreshold_) {
        throw DomainError("evolute curvature: singular point of the evolute");
    }
    return jet.k.value() / rp;
}

EvoluteCurvatureIntegral totalEvoluteCurvature(const EvolutePath& evolute) {
    const ClosedCurve& curve = evolute.base();
    EvoluteCurvatureIntegral out;

    // ds_e = |rho'(s)| ds turns the integral of k_e ds_e into the integral of
    // k(s) ds; the cusp singularities cancel exactly.
    const std::vector<FrameJet> jets = curve.gridJets(curve.sampleCount());
    double acc = 0.0;
    for (const FrameJet& jet : jets) {
        acc += jet.k.value() * jet.speed;
    }
    out.substitution = acc * kTwoPi / curve.sampleCount();
    out.value = out.substitution;

    if (evolute.isPointEvolute()) {
        return out;
    }

    // Excised direct quadrature: Simpson over each regular arc, one finite
    // difference per node for |d(evolute)/dt|.  Low order near the cusps, so
    // this is a cross-check, not the certified value.
    constexpr double excise = 1e-4;
    constexpr int panels = 256;
    constexpr double h = 1e-6;
    double direct = 0.0;
    for (const auto& [a0, b0] : evolute.regularArcs()) {
        const double a = a0 + excise;
        const double b = b0 - excise;
        if (b <= a) continue;
        const double dt = (b - a) / (2 * panels);
        double arcAcc = 0.0;
        for (int i = 0; i <= 2 * panels; ++i) {
            const double t = a + dt * i;
            const Vec3 fd = (evolute.point(t + h) - evolute.point(t - h)) / (2.0 * h);
            const double de = curve.spaceform().norm(fd);
            const double w = (i == 0 || i == 2 * panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            arcAcc += w * evolute.geodesicCurvature(t) * de;
        }
        direct += arcAcc * dt / 3.0;
    }
    out.direct = direct;
    out.gap = std::abs(out.substitution - direct);
    return out;
}

}  // namespace evoform
