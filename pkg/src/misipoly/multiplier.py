"""Multiplier polynomials: the monic polynomials whose roots are the cycle
multipliers attached to the roots of a Misiurewicz polynomial, built as
characteristic polynomials in the quotient ring, plus the d = 2 closed forms
for periods one and two and their diagnostics.

Which polynomial gets reduced modulo G matters.  The derivative product
along the cycle is d^n (a_m ... a_{m+n-1})^(d-1); the tail-anchored form
d^n (a_{m-1} ... a_{m+n-2})^(d-1) agrees with it only after substituting
zeta a_{m-1} = a_{m+n-1} at a root of G.  As polynomials they differ, and
only the cycle form reproduces the known value: the multiplier at the root
of the (2,1) polynomial c + 2 is +4 (orbit 0 -> -2 -> 2 -> 2 under z^2 - 2),
matching x - 4.  So the cycle form is what gets reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .misiurewicz import MisSpec, PolyCache, h_poly, misiurewicz_poly
from .orbit import OrbitCtx
from .polyring import (
    IntPoly,
    affine_rescale,
    charpoly_mod,
    exact_div,
    poly_rem,
)


class Method(str, Enum):
    CHARPOLY = "charpoly"
    CLOSED_FORM_N1 = "closed_form_n1"
    CLOSED_FORM_N2 = "closed_form_n2"


@dataclass(frozen=True)
class MultiplierPoly:
    spec: MisSpec
    poly: object
    method: Method


def multiplier_poly(
    spec: MisSpec, ctx: OrbitCtx | None = None, cache: PolyCache | None = None
) -> MultiplierPoly:
    """The multiplier polynomial for spec: monic, degree deg G, coefficients
    in Z for d = 2 and in Z[zeta_d] otherwise."""
    if cache is not None:
        hit = cache.load(spec.cache_key("P"))
        if hit is not None:
            return MultiplierPoly(spec, hit, Method.CHARPOLY)
    if ctx is None:
        ctx = OrbitCtx(spec.d)
    g = misiurewicz_poly(spec, ctx, cache)
    lam = ctx.ring_poly(ctx.cycle_multiplier_poly(spec.m, spec.n))
    p = charpoly_mod(g, poly_rem(lam, g))
    if cache is not None:
        cache.store(spec.cache_key("P"), p, "x")
    return MultiplierPoly(spec, p, Method.CHARPOLY)


def multiplier_closed_n1(m: int, ctx: OrbitCtx | None = None) -> IntPoly:
    """Closed form for the d = 2, period-one multiplier polynomial, m >= 3:

        2^(2^(m-1)) * x^(-1) * a_{m-1}((-x^2 + 2x)/4) + 2^(2^(m-1) - 1)

    assembled over the integers by clearing the powers of two against each
    term of a_{m-1} (the composed argument enters with degree at most
    2^(m-2), so every 2^(2^(m-1) - 2i) is a nonnegative power) and dividing
    by x exactly.  The m = 2 case is the printed value x - 4.
    """
    if m < 3:
        raise ValueError("closed form requires m >= 3; period-one m = 2 is x - 4")
    if ctx is None:
        ctx = OrbitCtx(2)
    if ctx.d != 2:
        raise ValueError("closed forms are d = 2 objects")
    K = 2 ** (m - 1)
    arg = IntPoly((0, 2, -1))  # 2x - x^2
    acc = IntPoly.zero()
    power = IntPoly.one()
    coeffs = ctx.a(m - 1).coeffs
    for i in range(1, len(coeffs)):
        power = power * arg
        if coeffs[i]:
            acc = acc + coeffs[i] * 2 ** (K - 2 * i) * power
    acc = exact_div(acc, IntPoly.x())
    return acc + 2 ** (K - 1)


def multiplier_closed_n2(m: int, ctx: OrbitCtx | None = None, cache: PolyCache | None = None) -> IntPoly:
    """Closed form for the d = 2, period-two multiplier polynomial, m >= 2:
    4^deg(G) * G_{m,2}((x - 4)/4)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    g = misiurewicz_poly(MisSpec(2, m, 2), ctx, cache)
    return affine_rescale(g, 4)


def r_poly(m: int, ctx: OrbitCtx | None = None) -> IntPoly:
    """R_m = 4^(2^(m-1)) * H_m((x - 4)/4) where H_m = a_m - a_{m-1} + 1.

    Equals the period-two multiplier polynomial for even m, and x times it
    for odd m (so R_m has zero constant term for odd m).
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if ctx is None:
        ctx = OrbitCtx(2)
    return affine_rescale(h_poly(ctx, m), 4)


def expansion_coeffs(m: int, ctx: OrbitCtx | None = None) -> list[int]:
    """The coefficients E_t of R_m below its leading term, from the binomial
    expansion E_t = 4^(2^(m-1) - t) * sum_i (-1)^(i-t) D_i * C(i, t), where
    D_i are the coefficients of a_m - a_{m-1} + 1.  Diagnostic: must agree
    with r_poly coefficient-by-coefficient."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if ctx is None:
        ctx = OrbitCtx(2)
    from math import comb

    dcoeffs = h_poly(ctx, m).coeffs
    k = 2 ** (m - 1)
    out = []
    for t in range(k):
        total = 0
        for i in range(t, k + 1):
            di = dcoeffs[i] if i < len(dcoeffs) else 0
            if di:
                total += (-1) ** (i - t) * di * comb(i, t)
        out.append(4 ** (k - t) * total)
    return out


def _gcd_degree_mod(f: IntPoly, g: IntPoly, q: int) -> int:
    """Degree of gcd(f mod q, g mod q) over F_q; -1 if both reduce to zero."""

    def reduce(p):
        out = [c % q for c in p.coeffs]
        while out and not out[-1]:
            out.pop()
        return out

    a, b = reduce(f), reduce(g)
    while b:
        inv = pow(b[-1], -1, q)
        while len(a) >= len(b):
            if not a[-1]:
                a.pop()
                continue
            fac = a[-1] * inv % q
            off = len(a) - len(b)
            for i, bi in enumerate(b):
                a[off + i] = (a[off + i] - fac * bi) % q
            a.pop()
        while a and not a[-1]:
            a.pop()
        a, b = b, a
    return len(a) - 1


def squarefree_diagnostic(p: IntPoly, trials: int = 3) -> bool | None:
    """Reports whether p is squarefree, via gcd(p, p') modulo word primes.

    A unit gcd modulo any prime preserving deg(p) proves squarefreeness over
    Q; if every trial prime yields a nontrivial gcd the answer is
    inconclusive (None).  Never asserts anything either way: repeated
    multiplier roots are an open question.
    """
    if p.is_zero:
        return None
    if p.degree <= 1:
        return True
    dp = p.derivative()
    from .polyring import is_prime

    q = (1 << 61) - 1
    tried = 0
    while tried < trials:
        while not is_prime(q):
            q -= 2
        if p.lc % q:
            if _gcd_degree_mod(p, dp, q) == 0:
                return True
            tried += 1
        q -= 2
    return None
