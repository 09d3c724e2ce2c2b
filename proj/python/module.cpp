#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "evoform/catalog.hpp"
#include "evoform/errors.hpp"
#include "evoform/evolute.hpp"
#include "evoform/theorems.hpp"
#include "evoform/topology.hpp"
#include "evoform/trig.hpp"

namespace py = pybind11;
using namespace evoform;

namespace {

Vec3 vecFromSeq(const std::vector<double>& v) {
    if (v.size() == 2) return {v[0], v[1], 0.0};
    if (v.size() == 3) return {v[0], v[1], v[2]};
    throw DomainError("expected a 2- or 3-vector");
}

py::dict jetToDict(const FrameJet& jet) {
    py::dict d;
    d["t"] = jet.t;
    d["gamma"] = std::vector<double>{jet.gamma.x, jet.gamma.y, jet.gamma.z};
    d["speed"] = jet.speed;
    d["tangent"] = std::vector<double>{jet.tangent.x, jet.tangent.y, jet.tangent.z};
    d["normal"] = std::vector<double>{jet.normal.x, jet.normal.y, jet.normal.z};
    d["kg"] = jet.kg;
    d["k"] = jet.k ? py::cast(*jet.k) : py::none();
    d["rho"] = jet.rho ? py::cast(*jet.rho) : py::none();
    d["drho_ds"] = jet.drho_ds ? py::cast(*jet.drho_ds) : py::none();
    return d;
}

py::dict reportToDict(const TheoremReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["kind"] = r.kind == ReportKind::Identity ? "identity" : "inequality";
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["residual"] = r.residual;
    d["tolerance"] = r.tolerance;
    d["pass"] = r.pass;
    d["inputs"] = r.inputs;
    return d;
}

py::list verifyCurve(const ClosedCurve& curve, const std::vector<std::string>& names,
                     double tol) {
    const VerificationContext ctx(curve, tol);
    const auto reports = names.empty() ? runStandardSuite(ctx) : runSelectedSuite(ctx, names);
    py::list out;
    for (const auto& r : reports) out.append(reportToDict(r));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Evolutes, curvature identities and signed areas on constant-curvature surfaces";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<PreconditionError>(m, "PreconditionError");
    py::register_exception<DomainError>(m, "DomainFault");
    py::register_exception<ResolutionError>(m, "ResolutionError");

    m.def("sn", &sn, py::arg("c"), py::arg("x"), "Curvature-parametrized sine");
    m.def("cn", &cn, py::arg("c"), py::arg("x"), "Curvature-parametrized cosine");
    m.def("tanc", &tanc, py::arg("c"), py::arg("x"));
    m.def("cotc", &cotc, py::arg("c"), py::arg("x"));
    m.def("arccot", &arccot, py::arg("c"), py::arg("k"),
          "Radius of curvature with cotc(c, rho) = k");

    py::class_<ClosedCurve>(m, "ClosedCurve")
        .def_property_readonly("n", &ClosedCurve::sampleCount)
        .def_property_readonly("c",
                               [](const ClosedCurve& c) { return c.spaceform().curvature(); })
        .def_property_readonly("length", &ClosedCurve::length)
        .def_property_readonly("orientation", &ClosedCurve::orientation)
        .def_property_readonly("strong_convexity_margin", &ClosedCurve::strongConvexityMargin)
        .def_property_readonly("resolved",
                               [](const ClosedCurve& c) {
                                   return c.spectrumStatus() == SpectrumStatus::Resolved;
                               })
        .def_property_readonly("tail_energy_ratio", &ClosedCurve::tailEnergyRatio)
        .def("jet", [](const ClosedCurve& c, double t) { return jetToDict(c.jet(t)); },
             py::arg("t"))
        .def("parallel", &ClosedCurve::parallelCurve, py::arg("r"))
        .def("arclength", &ClosedCurve::paramToArclength, py::arg("t"))
        .def("param_at_arclength", &ClosedCurve::arclengthToParam, py::arg("s"))
        .def("samples", [](const ClosedCurve& c) {
            std::vector<std::vector<double>> out;
            for (const Vec3& p : c.samples()) out.push_back({p.x, p.y, p.z});
            return out;
        });

    py::class_<EvolutePath>(m, "Evolute")
        .def(py::init<const ClosedCurve&>(), py::arg("curve"))
        .def_property_readonly("is_point", &EvolutePath::isPointEvolute)
        .def_property_readonly("singular_params", &EvolutePath::singularParams)
        .def("point",
             [](const EvolutePath& e, double t) {
                 const Vec3 p = e.point(t);
                 return std::vector<double>{p.x, p.y, p.z};
             },
             py::arg("t"))
        .def("geodesic_curvature", &EvolutePath::geodesicCurvature, py::arg("t"))
        .def_property_readonly("area", [](const EvolutePath& e) {
            if (e.isPointEvolute()) return 0.0;
            return areaWithMultiplicities(traceOfEvolute(e)).value;
        });

    m.def(
        "geodesic_circle",
        [](double c, double radius, int n, int orientation) {
            return realizeCurve(GeodesicCircleSpec{c, {0, 0, c == 0.0 ? 0.0 : 1.0}, radius,
                                                   orientation},
                                n);
        },
        py::arg("c"), py::arg("radius"), py::arg("n") = 1024, py::arg("orientation") = 1);
    m.def(
        "plane_ellipse",
        [](double a, double b, int n, int orientation) {
            return realizeCurve(PlaneEllipseSpec{a, b, orientation}, n);
        },
        py::arg("a"), py::arg("b"), py::arg("n") = 1024, py::arg("orientation") = 1);
    m.def(
        "polar_fourier",
        [](double c, double r0, const std::vector<double>& cosCoeffs,
           const std::vector<double>& sinCoeffs, int n, int orientation) {
            return realizeCurve(
                PolarFourierSpec{c, {0, 0, c == 0.0 ? 0.0 : 1.0}, r0, cosCoeffs, sinCoeffs,
                                 orientation, {}},
                n);
        },
        py::arg("c"), py::arg("r0"), py::arg("cos") = std::vector<double>{},
        py::arg("sin") = std::vector<double>{}, py::arg("n") = 1024, py::arg("orientation") = 1);
    m.def(
        "from_samples",
        [](double c, const std::vector<std::vector<double>>& pts) {
            std::vector<Vec3> v;
            v.reserve(pts.size());
            for (const auto& p : pts) v.push_back(vecFromSeq(p));
            return ClosedCurve::fromSamples(std::move(v), SpaceForm(c));
        },
        py::arg("c"), py::arg("points"));
    m.def("load_curve",
          [](const std::string& path, int n) { return realizeCurve(loadCurveSpec(path), n); },
          py::arg("path"), py::arg("n") = 1024);

    m.def("enclosed_area",
          [](const ClosedCurve& c) { return areaWithMultiplicities(traceOfCurve(c)).value; },
          py::arg("curve"), "Signed area with multiplicities (polar line integral)");
    m.def(
        "enclosed_area_grid",
        [](const ClosedCurve& c, int res) {
            const AreaResult r = areaGridOracle(traceOfCurve(c), res);
            return py::make_tuple(r.value, r.estimatedError);
        },
        py::arg("curve"), py::arg("resolution") = 512);
    m.def(
        "winding_number",
        [](const ClosedCurve& c, const std::vector<double>& p) {
            const PathTrace trace = traceOfCurve(c);
            return windingNumber(trace, vecFromSeq(p));
        },
        py::arg("curve"), py::arg("point"));
    m.def("rotation_index",
          [](const ClosedCurve& c) { return rotationIndex(traceOfCurve(c)); }, py::arg("curve"));

    m.def("verify", &verifyCurve, py::arg("curve"),
          py::arg("theorems") = std::vector<std::string>{}, py::arg("tol") = 1e-6,
          "Run the identity/inequality checks; returns one dict per report");
    m.def("theorem_names", &standardTheoremNames);
    m.def(
        "verify_steiner",
        [](const ClosedCurve& curve, double r, double tol) {
            const VerificationContext ctx(curve, tol);
            py::list out;
            for (const auto& rep : verifySteiner(ctx, r)) out.append(reportToDict(rep));
            return out;
        },
        py::arg("curve"), py::arg("r"), py::arg("tol") = 1e-6);
}
