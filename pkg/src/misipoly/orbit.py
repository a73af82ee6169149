"""Critical-orbit polynomials of z^d + c and the objects built from them:
the differences B_j, exact quotients b_j, the recurrence constant, and the
multiplier as a polynomial in c.

The orbit polynomials a_1 = c, a_{i+1} = a_i^d + c always have integer
coefficients; the d-th root of unity only enters through the differences
a_{m + l*j - 1} - zeta * a_{m-1}.  For d = 2 the root zeta != 1 is forced to
be -1 and everything stays over Z; for d > 2 a zeta exponent e picks
zeta = zeta_d^e and the differences live over Z[zeta_d].
"""

from __future__ import annotations

import threading

from .polyring import (
    CycPoly,
    CycScalar,
    IntPoly,
    exact_div,
    poly_rem,
)


class OrbitCtx:
    """Per-degree context memoizing the critical-orbit polynomials a_i.

    The memo is the only mutable state; insertions are serialized by a lock
    and every returned polynomial is immutable.
    """

    def __init__(self, d: int):
        if d < 2:
            raise ValueError("orbit degree must satisfy d >= 2")
        self.d = d
        self._memo: dict[int, IntPoly] = {1: IntPoly((0, 1))}
        self._lock = threading.Lock()

    def a(self, i: int) -> IntPoly:
        """The i-th critical-orbit polynomial a_i in Z[c]; deg a_i = d^(i-1)."""
        if i < 1:
            raise ValueError("orbit index must be >= 1")
        memo = self._memo
        if i in memo:
            return memo[i]
        with self._lock:
            have = max(memo)
            cur = memo[have]
            c = IntPoly((0, 1))
            for j in range(have + 1, i + 1):
                cur = cur**self.d + c
                memo[j] = cur
        return memo[i]

    def zeta(self, zeta_exp: int = 1):
        """The chosen d-th root of unity: -1 over Z for d = 2, else zeta_d^e."""
        if not 1 <= zeta_exp <= self.d - 1:
            raise ValueError(f"zeta exponent must lie in [1, {self.d - 1}]")
        if self.d == 2:
            return -1
        return CycScalar.zeta(self.d, zeta_exp)

    def _lift(self, p: IntPoly):
        return p if self.d == 2 else CycPoly.from_intpoly(self.d, p)

    def ring_poly(self, p: IntPoly):
        """View an integer polynomial in the working coefficient ring."""
        return self._lift(p)

    def B(self, m: int, l: int, j: int, zeta_exp: int = 1):
        """B_j = a_{m + l*j - 1} - zeta * a_{m-1}; monic of degree d^(m + l*j - 2)."""
        self._validate_mlj(m, l, j)
        z = self.zeta(zeta_exp)
        head = self._lift(self.a(m + l * j - 1))
        tail = self._lift(self.a(m - 1))
        return head - tail * z

    def b(self, m: int, l: int, j: int, zeta_exp: int = 1):
        """b_j = B_j / B_1, an exact monic quotient.

        Divisibility is guaranteed for these parameters; NonExactDivision
        here signals a construction bug.
        """
        self._validate_mlj(m, l, j)
        return exact_div(self.B(m, l, j, zeta_exp), self.B(m, l, 1, zeta_exp))

    def C_const(self, m: int, l: int) -> IntPoly:
        """d^l * (a_{m-1} * a_m * ... * a_{m+l-2})^(d-1), in Z[c]."""
        if m < 2 or l < 1:
            raise ValueError("require m >= 2 and l >= 1")
        prod = IntPoly.one()
        for i in range(l):
            prod = prod * self.a(m - 1 + i)
        return self.d**l * prod ** (self.d - 1)

    def lambda_poly(self, m: int, n: int) -> IntPoly:
        """The multiplier d^n * (a_{m-1} * ... * a_{m+n-2})^(d-1) as a polynomial in c.

        This is the tail-anchored product form; it agrees with the cycle
        product only after substituting the preperiodicity relation at a
        root, so the multiplier-polynomial builder reduces
        cycle_multiplier_poly modulo G instead (see that module's notes).
        """
        if m < 2 or n < 1:
            raise ValueError("require m >= 2 and n >= 1")
        prod = IntPoly.one()
        for i in range(n):
            prod = prod * self.a(m + i - 1)
        return self.d**n * prod ** (self.d - 1)

    def cycle_multiplier_poly(self, m: int, n: int) -> IntPoly:
        """d^n * (a_m * ... * a_{m+n-1})^(d-1): the derivative product along the cycle."""
        if m < 2 or n < 1:
            raise ValueError("require m >= 2 and n >= 1")
        prod = IntPoly.one()
        for i in range(n):
            prod = prod * self.a(m + i)
        return self.d**n * prod ** (self.d - 1)

    def recurrence_check(self, m: int, l: int, jmax: int, zeta_exp: int = 1) -> bool:
        """Check b_{j+1} = zeta^(d-1)*C*b_j + 1 modulo B_1 for 1 <= j <= jmax.

        B_1 is monic, so the congruence is equivalent to a zero Euclidean
        remainder.  Everything is computed in the quotient ring modulo B_1^2,
        which pins b_j modulo B_1 without materializing the full a_{m+l*j-1}
        (that has degree d^(m+l*j-2)).
        """
        bj = self._b_residues(m, l, jmax + 1, zeta_exp)
        B1 = self.B(m, l, 1, zeta_exp)
        ztil = self.zeta(zeta_exp) ** (self.d - 1)
        Cred = poly_rem(self._lift(self.C_const(m, l)), B1) * ztil
        one = self._lift(IntPoly.one())
        for j in range(1, jmax + 1):
            lhs = bj[j + 1] - poly_rem(Cred * bj[j], B1) - one
            if not poly_rem(lhs, B1).is_zero:
                return False
        return True

    def geometric_series_check(self, m: int, l: int, jmax: int, zeta_exp: int = 1) -> bool:
        """Check the closed form b_j = 1 + C + ... + C^(j-1) modulo B_1."""
        bj = self._b_residues(m, l, jmax, zeta_exp)
        B1 = self.B(m, l, 1, zeta_exp)
        ztil = self.zeta(zeta_exp) ** (self.d - 1)
        Cred = poly_rem(self._lift(self.C_const(m, l)), B1) * ztil
        geo = self._lift(IntPoly.one())
        power = self._lift(IntPoly.one())
        for j in range(1, jmax + 1):
            if not poly_rem(bj[j] - geo, B1).is_zero:
                return False
            power = poly_rem(power * Cred, B1)
            geo = geo + power
        return True

    def _validate_mlj(self, m: int, l: int, j: int):
        if m < 2 or l < 1 or j < 1:
            raise ValueError("require m >= 2, l >= 1, j >= 1")

    def _b_residues(self, m: int, l: int, jtop: int, zeta_exp: int):
        """b_j modulo B_1 for j = 1..jtop, via the orbit reduced modulo B_1^2.

        B_j = b_j * B_1 and deg(b_j mod B_1) < deg B_1, so B_j mod B_1^2
        equals (b_j mod B_1) * B_1 exactly, and one exact division recovers
        the residue of b_j.
        """
        B1 = self.B(m, l, 1, zeta_exp)
        modulus = B1 * B1
        z = self.zeta(zeta_exp)
        c = self._lift(IntPoly((0, 1)))
        top = m + l * jtop - 1
        orbit = {1: c}
        cur = c
        for i in range(2, top + 1):
            cur = poly_rem(cur**self.d + c, modulus)
            orbit[i] = cur
        tail = orbit[m - 1] * z if m > 1 else None
        out = {}
        for j in range(1, jtop + 1):
            Bj_mod = poly_rem(orbit[m + l * j - 1] - tail, modulus)
            out[j] = exact_div(Bj_mod, B1)
        return out
