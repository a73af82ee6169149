"""Exact dense univariate polynomial arithmetic over Z and over cyclotomic
integer rings Z[zeta_d], plus the number-theoretic scalar helpers the rest of
the package is built on: Mobius sums, p-adic valuations, cyclotomic
polynomials, resultants, quotient-ring characteristic polynomials and exact
floor-logs of huge integers.

Polynomials are immutable: coefficient index i holds the coefficient of x^i,
trailing zeros are trimmed, and the zero polynomial has an empty coefficient
tuple.  The degree of the zero polynomial is the sentinel MINUS_INFINITY
(float('-inf')), never -1, so degree arithmetic on degenerate inputs fails
loudly in comparisons instead of silently producing off-by-one results.
"""

from __future__ import annotations

import functools
import math
import re
from fractions import Fraction

import mpmath

MINUS_INFINITY = float("-inf")

# p-adic valuation of 0; compares strictly above every finite valuation and
# absorbs addition, matching v_p(0) = infinity.
INFINITE = math.inf

Valuation = int | float


class NonExactDivision(ArithmeticError):
    """A division that was required to be exact left a nonzero remainder."""


# ---------------------------------------------------------------------------
# number-theoretic scalar helpers


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the base set is exact for n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def mobius_gcd_sum(l: int, n: int, t: int) -> int:
    """Sum of mu(l/k) over divisors k of l with gcd(k, n) = t.

    Vanishes whenever l does not divide n; t must divide n.
    """
    if l < 1 or n < 1:
        raise ValueError("l and n must be positive")
    if t < 1 or n % t != 0:
        raise ValueError(f"t={t} does not divide n={n}")
    return sum(mobius(l // k) for k in divisors(l) if math.gcd(k, n) == t)


def vp(a: int, p: int) -> Valuation:
    """Largest e with p**e | a; INFINITE for a = 0."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a == 0:
        return INFINITE
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def floor_log_abs(n: int) -> int:
    """floor(ln|n|) computed exactly for any nonzero integer.

    Uses rigorous interval arithmetic on a two-sided enclosure of |n| built
    from its leading bits, doubling the working precision until both interval
    endpoints of the log land in the same unit interval.  Machine floats are
    never trusted near integer boundaries (ln|n| itself is never an integer
    for |n| > 1, so the loop terminates).
    """
    if n == 0:
        raise ValueError("floor_log_abs(0) is undefined")
    a = abs(n)
    if a == 1:
        return 0
    prec = 64
    while True:
        ctx = mpmath.ctx_iv.MPIntervalContext()
        ctx.prec = prec
        shift = max(0, a.bit_length() - (prec - 8))
        m = a >> shift
        hi = m if (m << shift) == a else m + 1
        enclosure = ctx.mpf([m, hi]) * ctx.mpf(2) ** shift
        log_iv = ctx.log(enclosure)
        lo_floor = math.floor(log_iv.a)
        hi_floor = math.floor(log_iv.b)
        if lo_floor == hi_floor:
            return int(lo_floor)
        prec *= 2


def log_abs(n: int, dps: int = 40) -> mpmath.mpf:
    """ln|n| for a nonzero integer at `dps` decimal digits of precision."""
    if n == 0:
        raise ValueError("log_abs(0) is undefined")
    ctx = mpmath.ctx_mp.MPContext()
    ctx.dps = dps
    return ctx.log(abs(n))


# ---------------------------------------------------------------------------
# dense polynomials over Z


def _trim(coeffs) -> tuple:
    coeffs = tuple(coeffs)
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return coeffs[:end]


class IntPoly:
    """Dense univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"IntPoly coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    @staticmethod
    def constant(n: int) -> "IntPoly":
        return IntPoly((n,))

    @staticmethod
    def monomial(power: int, coeff: int = 1) -> "IntPoly":
        return IntPoly((0,) * power + (coeff,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _with(self, coeffs) -> "IntPoly":
        return IntPoly(coeffs)

    def _szero(self) -> int:
        return 0

    def _sone(self) -> int:
        return 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i)) if self.coeffs else IntPoly()

    def __call__(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def content_vp(self, p: int) -> Valuation:
        """min over coefficients of vp; INFINITE for the zero polynomial."""
        vals = [vp(c, p) for c in self.coeffs]
        return min(vals) if vals else INFINITE

    def __repr__(self):
        return f"IntPoly({poly_to_text(self)!r})"


# ---------------------------------------------------------------------------
# Z[zeta_d] scalars and polynomials over them


@functools.lru_cache(maxsize=None)
def _cyc_modulus(d: int) -> "IntPoly":
    return cyclotomic(d)


class CycScalar:
    """Element of Z[zeta_d], stored as an integer residue polynomial mod Phi_d.

    Arithmetic reduces eagerly, so the residue degree stays below phi(d).
    """

    __slots__ = ("d", "residue")

    def __init__(self, d: int, residue):
        if d < 2:
            raise ValueError("cyclotomic ring requires d >= 2")
        if not isinstance(residue, IntPoly):
            residue = IntPoly(residue)
        mod = _cyc_modulus(d)
        if residue.degree >= mod.degree:
            _, residue = poly_divmod(residue, mod)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "residue", residue)

    def __setattr__(self, name, value):
        raise AttributeError("CycScalar is immutable")

    @staticmethod
    def from_int(d: int, n: int) -> "CycScalar":
        return CycScalar(d, IntPoly((n,)))

    @staticmethod
    def zero(d: int) -> "CycScalar":
        return CycScalar(d, IntPoly())

    @staticmethod
    def one(d: int) -> "CycScalar":
        return CycScalar(d, IntPoly((1,)))

    @staticmethod
    def zeta(d: int, e: int = 1) -> "CycScalar":
        """zeta_d**e as a ring element."""
        return CycScalar(d, IntPoly.monomial(e % d if e % d else 0))

    def _check(self, other) -> "CycScalar":
        if isinstance(other, int):
            return CycScalar.from_int(self.d, other)
        if not isinstance(other, CycScalar):
            raise TypeError(f"cannot combine CycScalar with {type(other).__name__}")
        if other.d != self.d:
            raise ValueError(f"mismatched cyclotomic rings: d={self.d} vs d={other.d}")
        return other

    def __bool__(self):
        return not self.residue.is_zero

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycScalar.from_int(self.d, other)
        return isinstance(other, CycScalar) and other.d == self.d and other.residue == self.residue

    def __hash__(self):
        return hash(("CycScalar", self.d, self.residue.coeffs))

    def __add__(self, other):
        other = self._check(other)
        return CycScalar(self.d, self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.d, -self.residue)

    def __sub__(self, other):
        other = self._check(other)
        return CycScalar(self.d, self.residue - other.residue)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        return CycScalar(self.d, self.residue * other.residue)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative scalar power")
        result = CycScalar.one(self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def norm(self) -> int:
        """Field norm down to Z: the product of all Galois conjugates."""
        if not self:
            return 0
        return resultant(_cyc_modulus(self.d), self.residue)

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def exact_div(self, other) -> "CycScalar":
        """self / other when other divides self in Z[zeta_d]."""
        other = self._check(other)
        if not other:
            raise ZeroDivisionError("division by zero in Z[zeta]")
        if not self:
            return CycScalar.zero(self.d)
        mod = [Fraction(c) for c in _cyc_modulus(self.d).coeffs]
        inv = _frac_invert_mod(
            [Fraction(c) for c in other.residue.coeffs], mod
        )
        prod = _frac_mul(
            [Fraction(c) for c in self.residue.coeffs], inv
        )
        rem = _frac_rem(prod, mod)
        if any(f.denominator != 1 for f in rem):
            raise NonExactDivision(f"{other!r} does not divide {self!r} in Z[zeta_{self.d}]")
        q = CycScalar(self.d, IntPoly(tuple(int(f) for f in rem)))
        if q * other != self:
            raise NonExactDivision(f"{other!r} does not divide {self!r} in Z[zeta_{self.d}]")
        return q

    def __repr__(self):
        return f"CycScalar(d={self.d}, {poly_to_text(self.residue, 'z')!r})"


def _frac_trim(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _frac_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _frac_trim(out)


def _frac_rem(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and _frac_trim(a):
        if not a[-1]:
            a.pop()
            continue
        q = a[-1] / m[-1]
        off = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[off + i] -= q * mi
        a.pop()
    return _frac_trim(a)


def _frac_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    r = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(0, len(r) - db)
    while r and len(r) - 1 >= db:
        if not r[-1]:
            r.pop()
            continue
        c = r[-1] / b[-1]
        k = len(r) - 1 - db
        q[k] += c
        for i, bi in enumerate(b):
            r[k + i] -= c * bi
        r.pop()
    return _frac_trim(q), _frac_trim(r)


def _frac_invert_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo m over Q[x] via the extended Euclidean algorithm."""
    r0, r1 = list(m), _frac_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _frac_divmod(r0, r1)
        qs1 = _frac_mul(q, s1)
        new_s = [
            (s0[i] if i < len(s0) else Fraction(0)) - (qs1[i] if i < len(qs1) else Fraction(0))
            for i in range(max(len(s0), len(qs1)))
        ]
        r0, r1 = r1, r
        s0, s1 = s1, _frac_trim(new_s)
    if len(r0) != 1:
        raise ZeroDivisionError("element is a zero divisor mod Phi_d")
    g = r0[0]
    return _frac_trim([c / g for c in s0])


class CycPoly:
    """Dense univariate polynomial with CycScalar coefficients sharing one d."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs=()):
        scalars = []
        for c in coeffs:
            if isinstance(c, int):
                c = CycScalar.from_int(d, c)
            elif isinstance(c, CycScalar):
                if c.d != d:
                    raise ValueError("coefficient from a different cyclotomic ring")
            else:
                raise TypeError(f"CycPoly coefficients must be CycScalar, got {type(c).__name__}")
            scalars.append(c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "coeffs", _trim(scalars))

    def __setattr__(self, name, value):
        raise AttributeError("CycPoly is immutable")

    @staticmethod
    def from_intpoly(d: int, p: IntPoly) -> "CycPoly":
        return CycPoly(d, tuple(CycScalar.from_int(d, c) for c in p.coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> CycScalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == CycScalar.one(self.d)

    def _with(self, coeffs) -> "CycPoly":
        return CycPoly(self.d, coeffs)

    def _szero(self) -> CycScalar:
        return CycScalar.zero(self.d)

    def _sone(self) -> CycScalar:
        return CycScalar.one(self.d)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, CycPoly) and other.d == self.d and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(("CycPoly", self.d, self.coeffs))

    def _coerce(self, other):
        if isinstance(other, (int, CycScalar)):
            return CycPoly(self.d, (other,))
        if not isinstance(other, CycPoly):
            return None
        if other.d != self.d:
            raise ValueError(f"mismatched cyclotomic rings: d={self.d} vs d={other.d}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CycPoly(self.d, out)

    __radd__ = __add__

    def __neg__(self):
        return CycPoly(self.d, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, CycScalar)):
            s = other if isinstance(other, CycScalar) else CycScalar.from_int(self.d, other)
            if not s:
                return CycPoly(self.d)
            return CycPoly(self.d, tuple(c * s for c in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CycPoly(self.d)
        zero = CycScalar.zero(self.d)
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
        return CycPoly(self.d, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = CycPoly(self.d, (CycScalar.one(self.d),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int) -> "CycPoly":
        if not self.coeffs:
            return self
        return CycPoly(self.d, (CycScalar.zero(self.d),) * k + self.coeffs)

    def __repr__(self):
        inner = " , ".join(poly_to_text(c.residue, "z") for c in self.coeffs)
        return f"CycPoly(d={self.d}, [{inner}])"


# ---------------------------------------------------------------------------
# scalar dispatch helpers shared by the generic polynomial algorithms


def _sdiv(a, b):
    """Exact scalar division in the coefficient ring; raises NonExactDivision."""
    if isinstance(a, CycScalar):
        return a.exact_div(b)
    q, r = divmod(a, b)
    if r:
        raise NonExactDivision(f"{b} does not divide {a}")
    return q


def _sdiv_int(a, k: int):
    """Exact division of a ring scalar by a rational integer k."""
    if isinstance(a, CycScalar):
        return CycScalar(a.d, IntPoly(tuple(_sdiv(c, k) for c in a.residue.coeffs)))
    return _sdiv(a, k)


# ---------------------------------------------------------------------------
# generic polynomial algorithms (IntPoly or CycPoly)


def poly_divmod(f, g):
    """Quotient and remainder of f by g, dividing leading coefficients exactly.

    Complete for monic g; for non-monic g it succeeds exactly when the
    division is exact at every elimination step (in particular whenever
    g | f), and raises NonExactDivision otherwise.
    """
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if f.degree < g.degree:
        return f._with(()), f
    zero = f._szero()
    glc = g.lc
    monic = g.is_monic
    gc = g.coeffs
    dg = len(gc) - 1
    r = list(f.coeffs)
    q = [zero] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if not c:
            continue
        t = c if monic else _sdiv(c, glc)
        q[i - dg] = t
        r[i] = zero
        for j in range(dg):
            r[i - dg + j] = r[i - dg + j] - t * gc[j]
    return f._with(q), f._with(r[:dg])


def poly_rem(f, g):
    return poly_divmod(f, g)[1]


def exact_div(f, g):
    """f / g when the division is exact; raises NonExactDivision otherwise."""
    q, r = poly_divmod(f, g)
    if not r.is_zero:
        raise NonExactDivision(f"nonzero remainder in exact division: {r!r}")
    return q


def _prem(f, g):
    """Pseudo-remainder: lc(g)**(deg f - deg g + 1) * f modulo g."""
    dg = g.degree
    glc = g.lc
    gc = g.coeffs
    zero = f._szero()
    r = list(f.coeffs)
    e = f.degree - dg + 1
    dr = len(r) - 1
    while dr >= dg:
        c = r[dr]
        if not c:
            r.pop()
            dr -= 1
            continue
        # r <- lc(g)*r - lc(r)*x^(dr-dg)*g
        for i in range(len(r)):
            r[i] = glc * r[i]
        off = dr - dg
        for j in range(dg + 1):
            r[off + j] = r[off + j] - c * gc[j]
        e -= 1
        r.pop()
        dr -= 1
    rp = f._with(r)
    if e:
        factor = glc**e
        rp = rp._with(tuple(factor * c for c in rp.coeffs))
    return rp


def resultant(f, g):
    """Resultant of two nonzero polynomials over their coefficient ring.

    Convention: Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots of f,
    so Res(f, g) = (-1)^(deg f * deg g) Res(g, f).  Computed by the
    subresultant polynomial remainder sequence; sylvester_resultant is the
    independent fraction-free oracle.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    one = f._sone()
    neg = False
    A, B = f, g
    if A.degree < B.degree:
        if (A.degree % 2) and (B.degree % 2):
            neg = not neg
        A, B = B, A
    if B.degree == 0:
        r = B.lc ** A.degree if A.degree > 0 else one
        return -r if neg else r
    gg = one
    h = one
    while True:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        if (dA % 2) and (dB % 2):
            neg = not neg
        R = _prem(A, B)
        A = B
        denom = gg * h**delta
        if R.is_zero:
            B = R
            break
        B = R._with(tuple(_sdiv(c, denom) for c in R.coeffs))
        gg = A.lc
        if delta:
            h = _sdiv(gg**delta, h ** (delta - 1)) if delta > 1 else gg
        if B.degree <= 0:
            break
    if B.is_zero:
        return f._szero()
    dA = A.degree
    res = _sdiv(B.lc**dA, h ** (dA - 1)) if dA > 1 else (B.lc if dA == 1 else one)
    return -res if neg else res


def sylvester_matrix(f, g) -> list[list]:
    """Sylvester matrix of f and g (coefficients descending), size deg f + deg g."""
    if f.is_zero or g.is_zero:
        raise ValueError("Sylvester matrix of the zero polynomial is undefined")
    n, m = f.degree, g.degree
    zero = f._szero()
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([zero] * i + fc + [zero] * (m - 1 - i))
    for i in range(n):
        rows.append([zero] * i + gc + [zero] * (n - 1 - i))
    return rows


def bareiss_det(rows: list[list]):
    """Fraction-free Bareiss determinant of a square matrix of ring scalars."""
    n = len(rows)
    if n == 0:
        return 1
    rows = [list(r) for r in rows]
    one = 1 if isinstance(rows[0][0], int) else CycScalar.one(rows[0][0].d)
    zero = 0 if isinstance(rows[0][0], int) else CycScalar.zero(rows[0][0].d)
    sign = False
    prev = one
    for k in range(n - 1):
        if not rows[k][k]:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = not sign
                    break
            else:
                return zero
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                rows[i][j] = _sdiv(pivot * rows[i][j] - rik * rows[k][j], prev)
            rows[i][k] = zero
        prev = pivot
    det = rows[n - 1][n - 1]
    return -det if sign else det


def sylvester_resultant(f, g):
    """Resultant via the fraction-free Sylvester determinant (test oracle)."""
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    if f.degree == 0 and g.degree == 0:
        return f._sone()
    return bareiss_det(sylvester_matrix(f, g))


@functools.lru_cache(maxsize=None)
def cyclotomic(l: int) -> IntPoly:
    """The l-th cyclotomic polynomial, by Mobius inversion of x^k - 1 products.

    Numerator and denominator products are fully assembled before the single
    exact division, since intermediate quotients need not be polynomials.
    """
    if l < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = IntPoly.one()
    den = IntPoly.one()
    for k in divisors(l):
        mu = mobius(l // k)
        if mu == 1:
            num = num * (IntPoly.monomial(k) - 1)
        elif mu == -1:
            den = den * (IntPoly.monomial(k) - 1)
    return exact_div(num, den)


def affine_rescale(f: IntPoly, s: int) -> IntPoly:
    """s^deg(f) * f((x - s)/s), expanded exactly over the integers."""
    if f.is_zero:
        return f
    k = f.degree
    x_minus_s = IntPoly((-s, 1))
    acc = IntPoly((f.coeffs[k],))
    for i in range(k - 1, -1, -1):
        acc = acc * x_minus_s + f.coeffs[i] * s ** (k - i)
    return acc


# ---------------------------------------------------------------------------
# characteristic polynomial of multiplication in a quotient ring


def power_sums_of_roots(g, count: int) -> list:
    """Power sums s_0..s_{count-1} of the roots of a monic polynomial g,
    from Newton's identities on its coefficients (no divisions)."""
    if not g.is_monic:
        raise ValueError("power sums require a monic polynomial")
    k = g.degree
    one = g._sone()
    gc = g.coeffs
    s = [k * one]
    for t in range(1, count):
        if t <= k:
            acc = t * gc[k - t]
            for j in range(1, t):
                acc = acc + gc[k - t + j] * s[j]
        else:
            acc = g._szero()
            for j in range(t - k, t):
                acc = acc + gc[k - t + j] * s[j]
        s.append(-acc)
    return s


def charpoly_mod(g, lam):
    """Characteristic polynomial of multiplication by lam in R[c]/(g).

    g must be monic of degree k >= 1; the result is the monic degree-k
    polynomial whose roots are lam evaluated at the roots of g (with
    multiplicity).  Computed exactly via traces of lam^i in the quotient ring
    and Newton's identities; every division is by a rational integer and is
    verified exact.  Cross-checkable against charpoly_faddeev and against the
    c-resultant of (g(c), x - lam(c)).
    """
    if not g.is_monic:
        raise ValueError("charpoly_mod requires a monic modulus")
    k = g.degree
    if k < 1:
        raise ValueError("charpoly_mod requires degree >= 1")
    h = poly_rem(lam, g)
    s = power_sums_of_roots(g, k)
    zero = g._szero()
    # traces p_i = trace of multiplication by h^i, via power sums of g's roots
    p = [k * g._sone()]
    hi = g._with((g._sone(),))
    for _ in range(k):
        hi = poly_rem(hi * h, g)
        acc = zero
        for t, c in enumerate(hi.coeffs):
            if c:
                acc = acc + c * s[t]
        p.append(acc)
    # Newton: i*e_i = sum_{j=1..i} (-1)^(j-1) e_{i-j} p_j
    e = [g._sone()]
    for i in range(1, k + 1):
        acc = zero
        for j in range(1, i + 1):
            term = e[i - j] * p[j]
            acc = acc + term if j % 2 else acc - term
        e.append(_sdiv_int(acc, i))
    coeffs = []
    for i in range(k, -1, -1):
        coeffs.append(e[i] if i % 2 == 0 else -e[i])
    return g._with(coeffs)


def multiplication_matrix(g, lam) -> list[list]:
    """k x k matrix of multiplication by (lam mod g) on the power basis of R[c]/(g)."""
    if not g.is_monic:
        raise ValueError("multiplication matrix requires a monic modulus")
    k = g.degree
    zero = g._szero()
    cur = poly_rem(lam, g)
    cols = []
    for _ in range(k):
        col = list(cur.coeffs) + [zero] * (k - len(cur.coeffs))
        cols.append(col)
        cur = poly_rem(cur.shift(1), g)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def charpoly_faddeev(g, lam):
    """Division-free Faddeev-LeVerrier characteristic polynomial (test oracle).

    Same contract as charpoly_mod; O(k^4) ring multiplications, so only
    suitable for small degrees.
    """
    if not g.is_monic:
        raise ValueError("charpoly_faddeev requires a monic modulus")
    k = g.degree
    A = multiplication_matrix(g, lam)
    zero = g._szero()
    one = g._sone()
    M = [[zero] * k for _ in range(k)]
    c = [zero] * (k + 1)
    c[k] = one
    for j in range(1, k + 1):
        # M <- A*M + c[k-j+1]*I
        AM = [[zero] * k for _ in range(k)]
        for i in range(k):
            Ai = A[i]
            for t in range(k):
                ait = Ai[t]
                if ait:
                    Mt = M[t]
                    row = AM[i]
                    for col in range(k):
                        if Mt[col]:
                            row[col] = row[col] + ait * Mt[col]
        for i in range(k):
            AM[i][i] = AM[i][i] + c[k - j + 1]
        M = AM
        tr = zero
        for i in range(k):
            Ai = A[i]
            for t in range(k):
                if Ai[t] and M[t][i]:
                    tr = tr + Ai[t] * M[t][i]
        c[k - j] = _sdiv_int(-tr, j)
    return g._with(c)


# ---------------------------------------------------------------------------
# text and JSON forms (the external polynomial formats)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^)|(\*)|(\+)|(-))")


def poly_to_text(p: IntPoly, var: str = "x") -> str:
    """Render as e.g. 'x^3 - 4*x^2 + 16'."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if mag == 1 else f"{mag}*{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


def poly_from_text(s: str) -> tuple[IntPoly, str]:
    """Parse the human polynomial form; returns the polynomial and its variable."""
    pos = 0
    n = len(s)
    coeffs: dict[int, int] = {}
    var: str | None = None

    def tok():
        nonlocal pos
        if pos >= n:
            return None
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError(f"cannot parse polynomial at: {s[pos:]!r}")
        pos = m.end()
        return m

    def peek_nonspace():
        i = pos
        while i < n and s[i].isspace():
            i += 1
        return s[i] if i < n else ""

    sign = 1
    first = True
    while True:
        ch = peek_nonspace()
        if not ch:
            if first:
                raise ValueError("empty polynomial")
            break
        if not first:
            m = tok()
            if m.group(5):
                sign = 1
            elif m.group(6):
                sign = -1
            else:
                raise ValueError(f"expected + or - near {s[pos:]!r}")
        else:
            while peek_nonspace() in "+-":
                m = tok()
                if m.group(6):
                    sign = -sign
        # term: INT ['*'? VAR ['^' INT]] | VAR ['^' INT]
        m = tok()
        if m is None:
            raise ValueError("dangling sign")
        coeff = 1
        power = 0
        if m.group(1):
            coeff = int(m.group(1))
            ch = peek_nonspace()
            if ch == "*":
                tok()
                m = tok()
                if m is None or not m.group(2):
                    raise ValueError("expected variable after '*'")
                ch = m.group(2)
                power = 1
            elif ch.isalpha():
                m = tok()
                ch = m.group(2)
                power = 1
            else:
                ch = ""
        elif m.group(2):
            ch = m.group(2)
            power = 1
        else:
            raise ValueError(f"unexpected token in polynomial: {m.group(0)!r}")
        if power == 1:
            if var is None:
                var = ch
            elif var != ch:
                raise ValueError(f"mixed variables {var!r} and {ch!r}")
            if peek_nonspace() == "^":
                tok()
                m = tok()
                if m is None or not m.group(1):
                    raise ValueError("expected integer exponent after '^'")
                power = int(m.group(1))
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
        sign = 1
        first = False
    size = max(coeffs) + 1 if coeffs else 0
    out = [0] * size
    for k, v in coeffs.items():
        out[k] = v
    return IntPoly(out), var or "x"


def poly_to_json(p, var: str = "x") -> dict:
    """Canonical JSON form with arbitrary-precision decimal-string coefficients.

    Integer coefficients are plain strings; Z[zeta_d] coefficients are arrays
    of strings (the residue coordinates in the power basis of zeta_d), with
    the ring tagged by "d".
    """
    if isinstance(p, IntPoly):
        return {"var": var, "coeffs": [str(c) for c in p.coeffs]}
    if isinstance(p, CycPoly):
        return {
            "var": var,
            "d": p.d,
            "coeffs": [[str(c) for c in s.residue.coeffs] for s in p.coeffs],
        }
    raise TypeError(f"not a polynomial: {type(p).__name__}")


def poly_from_json(obj: dict):
    """Inverse of poly_to_json; returns (poly, var)."""
    var = obj.get("var", "x")
    if "d" in obj:
        d = int(obj["d"])
        coeffs = tuple(
            CycScalar(d, IntPoly(tuple(int(c) for c in res))) for res in obj["coeffs"]
        )
        return CycPoly(d, coeffs), var
    return IntPoly(tuple(int(c) for c in obj["coeffs"])), var
