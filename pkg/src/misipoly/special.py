"""The p-special predicate on monic integer polynomials and the checks built
on it: closure under powers, and the nonunit cyclotomic resultants it forces.

A monic P = x^i + A_{i-1} x^{i-1} + ... + A_0 is p-special when
v_p(A_{i-1}) > v_p(2) and every lower coefficient has v_p strictly above
v_p(A_{i-1}).  Zero coefficients have infinite valuation and so can never
falsify either bullet; that convention is what makes x^3 - 4x^2 + 16
(with its zero x-coefficient) 2-special.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .polyring import (
    IntPoly,
    Valuation,
    cyclotomic,
    is_prime,
    poly_rem,
    resultant,
    vp,
)


@dataclass(frozen=True)
class SpecialWitness:
    """The violated bullet and the two valuations that were compared."""

    bullet: int  # 1: v_p(A_{i-1}) > v_p(2) failed; 2: v_p(A_j) > v_p(A_{i-1}) failed
    index: int  # coefficient index j whose valuation was too small
    found: Valuation
    required_above: Valuation


@dataclass(frozen=True)
class SpecialReport:
    poly: IntPoly
    p: int
    verdict: bool
    witness: SpecialWitness | None = None


def is_p_special(poly: IntPoly, p: int) -> SpecialReport:
    """Decide p-specialness of a monic polynomial of degree >= 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not poly.is_monic or poly.degree < 1:
        raise ValueError("p-specialness is defined for monic polynomials of degree >= 1")
    i = poly.degree
    coeffs = poly.coeffs
    v_sub = vp(coeffs[i - 1], p)
    v2 = vp(2, p)
    if not v_sub > v2:
        return SpecialReport(poly, p, False, SpecialWitness(1, i - 1, v_sub, v2))
    for j in range(i - 1):
        v_j = vp(coeffs[j], p)
        if not v_j > v_sub:
            return SpecialReport(poly, p, False, SpecialWitness(2, j, v_j, v_sub))
    return SpecialReport(poly, p, True)


def power_preserves_special(poly: IntPoly, p: int, nmax: int) -> bool:
    """True iff poly**n is p-special for all 1 <= n <= nmax.

    Precondition: poly itself is p-special (powers of a p-special polynomial
    are proven to stay p-special, so a False here is a counterexample to a
    theorem, not a conjecture).
    """
    if not is_p_special(poly, p).verdict:
        raise ValueError("power_preserves_special requires a p-special input")
    power = poly
    for n in range(2, nmax + 1):
        power = power * poly
        if not is_p_special(power, p).verdict:
            return False
    return True


def res_with_cyclotomics(poly: IntPoly, lmax: int) -> list[tuple[int, int]]:
    """Exact |Res(poly, Phi_l)| for l = 1..lmax.

    Reduces poly modulo the (monic) cyclotomic first, which leaves the
    resultant unchanged up to sign and keeps the remainder-sequence inputs
    at cyclotomic degree.
    """
    if poly.is_zero:
        raise ValueError("resultants against the zero polynomial are undefined")
    out = []
    for l in range(1, lmax + 1):
        phi = cyclotomic(l)
        r = poly_rem(poly, phi)
        value = 0 if r.is_zero else abs(resultant(phi, r))
        out.append((l, value))
    return out


def synthetic_special(rng: random.Random, p: int, max_degree: int = 10) -> IntPoly:
    """A random p-special polynomial: subleading coefficient p^v * unit with
    v > v_p(2), every lower coefficient a multiple of p^(v+1)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    i = rng.randint(1, max_degree)
    v = vp(2, p) + rng.randint(1, 3)
    unit = rng.choice([u for u in range(-9, 10) if u and u % p])
    coeffs = [0] * (i + 1)
    coeffs[i] = 1
    coeffs[i - 1] = p**v * unit
    for j in range(i - 1):
        coeffs[j] = p ** (v + 1 + rng.randint(0, 3)) * rng.randint(-9, 9)
    return IntPoly(coeffs)
