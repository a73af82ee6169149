"""Exact arithmetic for Misiurewicz and multiplier polynomials of z^d + c."""

from .polyring import (
    INFINITE,
    MINUS_INFINITY,
    CycPoly,
    CycScalar,
    IntPoly,
    NonExactDivision,
    affine_rescale,
    charpoly_mod,
    cyclotomic,
    exact_div,
    floor_log_abs,
    mobius,
    mobius_gcd_sum,
    poly_from_json,
    poly_from_text,
    poly_to_json,
    poly_to_text,
    resultant,
    sylvester_resultant,
    vp,
)
from .orbit import OrbitCtx
from .misiurewicz import MisSpec, PolyCache, misiurewicz_poly, misiurewicz_degree
from .multiplier import MultiplierPoly, multiplier_poly

__all__ = [
    "INFINITE",
    "MINUS_INFINITY",
    "CycPoly",
    "CycScalar",
    "IntPoly",
    "MisSpec",
    "MultiplierPoly",
    "NonExactDivision",
    "OrbitCtx",
    "PolyCache",
    "affine_rescale",
    "charpoly_mod",
    "cyclotomic",
    "exact_div",
    "floor_log_abs",
    "misiurewicz_degree",
    "misiurewicz_poly",
    "mobius",
    "mobius_gcd_sum",
    "multiplier_poly",
    "poly_from_json",
    "poly_from_text",
    "poly_to_json",
    "poly_to_text",
    "resultant",
    "sylvester_resultant",
    "vp",
]
