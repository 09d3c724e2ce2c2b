import math

import pytest

import evoform


def test_generalized_trig():
    assert evoform.sn(0.0, 2.5) == 2.5
    assert evoform.sn(1.0, math.pi / 2) == pytest.approx(1.0, abs=1e-14)
    assert evoform.sn(-1.0, 1.0) == pytest.approx(math.sinh(1.0), abs=1e-14)
    assert evoform.arccot(1.0, 1.0) == pytest.approx(math.pi / 4, abs=1e-14)
    with pytest.raises(evoform.DomainFault):
        evoform.arccot(-1.0, 0.5)


def test_circle_invariants():
    circle = evoform.geodesic_circle(0.0, 1.0, n=256)
    assert circle.length == pytest.approx(2 * math.pi, abs=1e-12)
    assert circle.orientation == 1
    assert circle.resolved
    jet = circle.jet(0.3)
    assert jet["kg"] == pytest.approx(1.0, abs=1e-10)
    assert jet["rho"] == pytest.approx(1.0, abs=1e-10)
    assert evoform.enclosed_area(circle) == pytest.approx(math.pi, abs=1e-11)
    assert evoform.winding_number(circle, [0.0, 0.0]) == 1
    assert evoform.rotation_index(circle) == 1


def test_sphere_cap_area():
    cap = evoform.geodesic_circle(1.0, math.pi / 3, n=256)
    assert evoform.enclosed_area(cap) == pytest.approx(math.pi, abs=1e-10)
    value, err = evoform.enclosed_area_grid(cap, resolution=128)
    assert abs(value - math.pi) < max(err, 0.05)


def test_ellipse_evolute():
    ellipse = evoform.plane_ellipse(2.0, 1.0, n=1024)
    evolute = evoform.Evolute(ellipse)
    assert not evolute.is_point
    assert len(evolute.singular_params) == 4
    assert evolute.area == pytest.approx(-27 * math.pi / 16, abs=1e-6)


def test_verify_suite_passes_on_wobble():
    curve = evoform.polar_fourier(1.0, 0.6, cos=[0.0, 0.05], n=1024)
    assert curve.strong_convexity_margin > 0
    reports = evoform.verify(curve)
    assert len(reports) >= 8
    assert all(r["pass"] for r in reports), [r["name"] for r in reports if not r["pass"]]

    steiner = evoform.verify_steiner(curve, 0.2)
    assert all(r["pass"] for r in steiner)


def test_non_convex_rejected():
    wavy = evoform.polar_fourier(0.0, 1.0, cos=[0.0, 0.35], n=512)
    assert wavy.strong_convexity_margin < 0
    with pytest.raises(evoform.PreconditionError):
        evoform.Evolute(wavy)
