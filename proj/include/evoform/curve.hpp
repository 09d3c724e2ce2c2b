#pragma once

#include <optional>
#include <vector>

#include "evoform/series.hpp"
#include "evoform/spaceform.hpp"
#include "evoform/vec.hpp"

namespace evoform {

// Everything the frame machinery knows at one parameter value.
//
// normal is the oriented unit normal: the unique unit tangent-plane vector
// orthogonal to the velocity with (tangent, normal) positively oriented, so
// kg is a signed geodesic curvature (positive for positively oriented
// strongly convex curves).  k is the curvature in the ambient space, defined
// where kg^2 + c > 0; rho the radius of curvature on the strongly convex
// range; drho_ds its arclength derivative (available once the whole curve is
// strongly convex).
struct FrameJet {
    double t = 0.0;
    Vec3 gamma, dgamma, ddgamma;
    double speed = 0.0;
    Vec3 tangent, normal;
    double kg = 0.0;
    std::optional<double> k;
    std::optional<double> rho;
    std::optional<double> drho_ds;
};

enum class SpectrumStatus { Resolved, Unresolved };

// A closed curve sampled at t_j = 2*pi*j/N (N a power of two), represented by
// trigonometric interpolants of its embedding coordinates.  Immutable after
// construction; all evaluation is read-only.
class ClosedCurve {
  public:
    // Projects the points onto the surface, builds the interpolants, detects
    // orientation, measures the strong-convexity margin.  N >= 16, power of
    // two.  Throws on degenerate (zero-speed) input; an unconverged spectrum
    // is recorded as a status, not an error.
    static ClosedCurve fromSamples(std::vector<Vec3> points, const SpaceForm& sf);

    const SpaceForm& spaceform() const { return sf_; }
    int sampleCount() const { return n_; }
    const std::vector<Vec3>& samples() const { return samples_; }

    FrameJet jet(double t) const;

    // Jets on the uniform m-grid (m a power of two >= N); far cheaper than m
    // calls to jet().
    std::vector<FrameJet> gridJets(int m) const;

    double length() const { return length_; }

    // +1 / -1 from the winding of the chart image about the base point.
    int orientation() const { return orientation_; }

    // min over a fine grid of kg - (c < 0 ? sqrt(-c) : 0); strongly convex
    // iff positive.
    double strongConvexityMargin() const { return margin_; }
    bool stronglyConvex() const { return margin_ > 0.0; }

    SpectrumStatus spectrumStatus() const {
        return tail_ < kResolvedTail ? SpectrumStatus::Resolved : SpectrumStatus::Unresolved;
    }
    double tailEnergyRatio() const { return tail_; }

    // Outward geodesic offset by r >= 0; requires strong convexity.
    ClosedCurve parallelCurve(double r) const;

    // Monotone map between the curve parameter and arclength.
    double paramToArclength(double t) const;
    double arclengthToParam(double s) const;

    // Interpolant of rho(t); throws PreconditionError unless strongly convex.
    const TrigSeries& rhoSeries() const;
    const TrigSeries& speedSeries() const { return speed_; }
    const TrigSeries& coordSeries(int i) const { return coord_[i]; }

    // Surface projection of the samples' centroid; default base point for
    // charts and area integrals.
    const Vec3& basePoint() const { return base_; }

    static constexpr double kResolvedTail = 1e-10;

  private:
    ClosedCurve(const SpaceForm& sf) : sf_(sf) {}

    void buildFrames();

    SpaceForm sf_;
    int n_ = 0;
    std::vector<Vec3> samples_;
    TrigSeries coord_[3];
    TrigSeries coordD_[3], coordDD_[3];
    TrigSeries speed_;
    std::optional<TrigSeries> rho_;
    double length_ = 0.0;
    double margin_ = 0.0;
    double tail_ = 0.0;
    int orientation_ = 0;
    Vec3 base_;
};

}  // namespace evoform
