"""Evolutes, curvature identities and signed areas on the three constant-curvature surfaces."""

from ._core import (
    ClosedCurve,
    DomainFault,
    Evolute,
    ParseError,
    PreconditionError,
    ResolutionError,
    arccot,
    cn,
    cotc,
    enclosed_area,
    enclosed_area_grid,
    from_samples,
    geodesic_circle,
    load_curve,
    plane_ellipse,
    polar_fourier,
    rotation_index,
    sn,
    tanc,
    theorem_names,
    verify,
    verify_steiner,
    winding_number,
)

__all__ = [
    "ClosedCurve",
    "DomainFault",
    "Evolute",
    "ParseError",
    "PreconditionError",
    "ResolutionError",
    "arccot",
    "cn",
    "cotc",
    "enclosed_area",
    "enclosed_area_grid",
    "from_samples",
    "geodesic_circle",
    "load_curve",
    "plane_ellipse",
    "polar_fourier",
    "rotation_index",
    "sn",
    "tanc",
    "theorem_names",
    "verify",
    "verify_steiner",
    "winding_number",
]
