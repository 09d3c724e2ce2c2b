#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evoform/evolute.hpp"
#include "evoform/topology.hpp"
#include "evoform/trace.hpp"

namespace evoform {

enum class ReportKind { Identity, Inequality };

struct TheoremReport {
    std::string name;
    ReportKind kind = ReportKind::Identity;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string lhsSource;
    std::string rhsSource;
    double residual = 0.0;  // |lhs - rhs|, or max(0, lhs - rhs) for lhs <= rhs
    double tolerance = 0.0;
    bool pass = false;
    std::string inputs;
};

TheoremReport makeIdentityReport(std::string name, double lhs, double rhs, std::string lhsSource,
                                 std::string rhsSource, double tolerance, std::string inputs);
TheoremReport makeInequalityReport(std::string name, double lhs, double rhs, std::string lhsSource,
                                   std::string rhsSource, double tolerance, std::string inputs);

// Shared quantities for one curve, computed once: every verifier draws its
// two sides from pipelines that share nothing beyond the curve samples (the
// curvature quadratures never touch the chart machinery and vice versa).
class VerificationContext {
  public:
    explicit VerificationContext(const ClosedCurve& curve, double tolerance = 1e-6,
                                 std::string label = "curve",
                                 std::optional<Vec3> areaBasePoint = std::nullopt);

    const ClosedCurve& curve() const { return curve_; }
    double tolerance() const { return tol_; }
    const std::string& label() const { return label_; }
    const std::optional<Vec3>& areaBasePoint() const { return base_; }

    bool isCircle() const;  // constant rho (point evolute)

    const EvolutePath& evolute() const;
    double length() const { return curve_.length(); }
    double enclosedArea() const;          // F, line integral
    double evoluteArea() const;           // F_e, signed (zero for circles)
    double totalAmbientCurvature() const;  // integral of k ds
    double totalGeodesicCurvature() const; // integral of signed k_g ds
    double tanHalfRhoIntegral() const;     // integral of tan_c(rho/2) ds

    std::string inputsDigest() const;

  private:
    ClosedCurve curve_;
    double tol_;
    std::string label_;
    std::optional<Vec3> base_;
    mutable std::optional<EvolutePath> evolute_;
    mutable std::optional<double> area_, evoluteArea_, intK_, intKg_, intTanHalf_;
};

// integral of k ds - 2 pi = c |F_e|
TheoremReport verifyTotalCurvature(const VerificationContext& ctx);

// integral of tan_c(rho/2) ds = F + |F_e|
TheoremReport verifyTanHalfRho(const VerificationContext& ctx);

// F <= integral of tan_c(rho/2) ds, equality iff circle
TheoremReport checkRos(const VerificationContext& ctx);

// Tube area: F_r - F = L sn_c(r) + 2 sn_c^2(r/2) (2 pi - c F), plus the
// pointwise arclength-measure ratio sn_c(rho + r)/sn_c(rho).
std::vector<TheoremReport> verifySteiner(const VerificationContext& ctx, double r);

// Isoperimetric inequality and the three deficit bounds.
std::vector<TheoremReport> verifyDeficit(const VerificationContext& ctx);

// Classical Gauss-Bonnet for the simple convex curve: integral of k_g ds =
// 2 pi - c F.
TheoremReport verifyGaussBonnetSimple(const VerificationContext& ctx);

// integral of k_e ds_e = c |F_e| + 2 pi (also cross-checked against the
// total ambient curvature).
TheoremReport verifyEvoluteGaussBonnet(const VerificationContext& ctx);

// Gauss-Bonnet with multiplicities on a piecewise trace: integral of k_g ds
// = -c F + sum theta_k + (2 nu - N) pi, with nu measured by angle tracking.
TheoremReport verifyGaussBonnetMultiplicities(const PathTrace& trace, double tolerance = 1e-6,
                                              std::string label = "path");

// Cross-check the line-integral areas against the brute-force grid oracle;
// the report tolerance is the oracle's own estimated error.
std::vector<TheoremReport> verifyAreaOracle(const VerificationContext& ctx, int gridResolution);

// All non-parametric verifications applicable to a strongly convex curve.
std::vector<TheoremReport> runStandardSuite(const VerificationContext& ctx);

// Subset by name; unknown names throw ParseError.
std::vector<TheoremReport> runSelectedSuite(const VerificationContext& ctx,
                                            const std::vector<std::string>& names);

std::vector<std::string> standardTheoremNames();

}  // namespace evoform
