#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "evoform/curve.hpp"

namespace evoform {

// The locus of centers of osculating circles of a strongly convex curve,
// kept in the base curve's parameter (cusps ruin any direct spectral fit of
// the evolute itself; every integral over it is pulled back to t, where the
// integrands stay smooth).
class EvolutePath {
  public:
    // Throws PreconditionError unless the curve is strongly convex; a
    // singular set that is neither finite nor the whole circle is rejected.
    explicit EvolutePath(const ClosedCurve& curve);

    const ClosedCurve& base() const { return *base_; }

    // rho' == 0 identically: the evolute collapses to the curve's center.
    bool isPointEvolute() const { return pointEvolute_; }

    Vec3 point(double t) const;

    // d(evolute)/dt; vanishes exactly at the singular parameters.
    Vec3 velocity(double t) const;

    const std::vector<Vec3>& samples() const { return samples_; }

    // |d(evolute)/ds| = |rho'(s)| per base sample.
    const std::vector<double>& velocityNorms() const { return velocityNorms_; }

    const std::vector<double>& singularParams() const { return singularParams_; }
    const std::vector<std::pair<double, double>>& regularArcs() const { return regularArcs_; }

    // |rho'(s)| at t, and the classification threshold below which a point
    // counts as singular.
    double rhoPrimeArc(double t) const;
    double singularThreshold() const { return singularThreshold_; }

    // Geodesic curvature of the evolute at a regular point.  Throws
    // DomainError within the singular threshold.
    double geodesicCurvature(double t) const;

    // Measured sign s in d(evolute)/ds = s * rho'(s) * T(s); the tangent
    // field T is defined below.  Recorded rather than assumed.
    int tangentFieldSign() const { return tangentSign_; }

  private:
    std::shared_ptr<const ClosedCurve> base_;
    std::vector<Vec3> samples_;
    std::vector<double> velocityNorms_;
    std::vector<double> singularParams_;
    std::vector<std::pair<double, double>> regularArcs_;
    bool pointEvolute_ = false;
    double singularThreshold_ = 0.0;
    double maxRhoPrime_ = 0.0;
    int tangentSign_ = 0;
};

// The unit tangent field along the evolute that stays defined at singular
// points: T = c sn(rho) gamma - cn(rho) n.
Vec3 tField(const ClosedCurve& curve, double t);
Vec3 tField(const FrameJet& jet, double c);

struct EvoluteCurvatureIntegral {
    double value = 0.0;         // the certified number (substitution route)
    double substitution = 0.0;  // integral of k(s) ds, exact pullback measure
    std::optional<double> direct;  // cusp-excised quadrature over regular arcs
    std::optional<double> gap;     // |substitution - direct|
};

// Total geodesic curvature of the evolute, integral of k_e ds_e.  The
// substitution route uses ds_e = |rho'| ds, which cancels the curvature
// denominator and leaves the smooth integrand k(s); the direct route
// integrates over the regular arcs with the endpoints excised and is kept as
// a sanity check.
EvoluteCurvatureIntegral totalEvoluteCurvature(const EvolutePath& evolute);

}  // namespace evoform
