"""Python bindings for the uniformization toolkit."""

import json

from ._core import (
    DomainError,
    NumericError,
    chi_b,
    curve_ids,
    curve_residual,
    discriminant,
    eisenstein,
    ellip_K,
    ellip_Kp,
    eta,
    invert_chi,
    klein_j,
    legendre_moduli,
    polygon_json,
    quintic_solve,
    run_cli,
    run_suite,
    seeded_points,
    suites,
    theta2,
    theta3,
    theta4,
)


def polygon(genus, doubled=False):
    """Polygon document (arcs, pairings, cycles) as a dict."""
    return json.loads(polygon_json(genus, doubled))


__all__ = [
    "DomainError",
    "NumericError",
    "chi_b",
    "curve_ids",
    "curve_residual",
    "discriminant",
    "eisenstein",
    "ellip_K",
    "ellip_Kp",
    "eta",
    "invert_chi",
    "klein_j",
    "legendre_moduli",
    "polygon",
    "quintic_solve",
    "run_cli",
    "run_suite",
    "seeded_points",
    "suites",
    "theta2",
    "theta3",
    "theta4",
]
