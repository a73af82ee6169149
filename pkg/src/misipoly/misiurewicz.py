"""Misiurewicz polynomials: the Mobius products over orbit differences whose
roots are the parameters with strictly preperiodic critical orbit of a given
tail length and period, together with a keyed JSON disk cache for them.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass

from .orbit import OrbitCtx
from .polyring import (
    IntPoly,
    divisors,
    exact_div,
    mobius,
    poly_from_json,
    poly_to_json,
)


@dataclass(frozen=True)
class MisSpec:
    """Parameters (d, m, n, zeta exponent) naming one Misiurewicz polynomial.

    m >= 2 is the tail length, n >= 1 the period; zeta_exp picks the root of
    unity zeta_d^zeta_exp != 1 in the defining relation
    zeta * a_{m-1} = a_{m+n-1}.  For d = 2 only zeta_exp = 1 (zeta = -1)
    exists.
    """

    d: int
    m: int
    n: int
    zeta_exp: int = 1

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be >= 2")
        if self.m < 2:
            raise ValueError("m must be >= 2")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 1 <= self.zeta_exp <= self.d - 1:
            raise ValueError(f"zeta_exp must lie in [1, {self.d - 1}]")

    def cache_key(self, kind: str = "G") -> str:
        return f"{kind}_d{self.d}_m{self.m}_n{self.n}_z{self.zeta_exp}"


class PolyCache:
    """One JSON document per polynomial under a cache directory.

    Writes go through a single lock and an atomic rename, so concurrent
    sweep workers sharing a cache never observe torn files.
    """

    ENV_VAR = "MISI_CACHE_DIR"

    def __init__(self, directory: str | None = None):
        if directory is None:
            directory = os.environ.get(self.ENV_VAR) or os.path.join(
                os.path.expanduser("~"), ".cache", "misipoly"
            )
        self.directory = directory
        self._lock = threading.Lock()

    def _path(self, key: str) -> str:
        return os.path.join(self.directory, f"{key}.json")

    def load(self, key: str):
        try:
            with open(self._path(key), "r", encoding="utf-8") as fh:
                obj = json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            return None
        poly, _ = poly_from_json(obj)
        return poly

    def store(self, key: str, poly, var: str = "c") -> None:
        with self._lock:
            os.makedirs(self.directory, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(poly_to_json(poly, var), fh)
                os.replace(tmp, self._path(key))
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise

    def clear(self) -> int:
        """Remove all cached polynomial files; returns the number removed."""
        removed = 0
        with self._lock:
            if not os.path.isdir(self.directory):
                return 0
            for name in os.listdir(self.directory):
                if name.endswith(".json"):
                    os.unlink(os.path.join(self.directory, name))
                    removed += 1
        return removed


def misiurewicz_poly(spec: MisSpec, ctx: OrbitCtx | None = None, cache: PolyCache | None = None):
    """The Misiurewicz polynomial for spec, monic over Z (d = 2) or Z[zeta_d].

    Assembled as one numerator product and one denominator product split by
    the sign of mu(n/k), with the extra a_k factors folded in when n | m - 1,
    followed by a single exact division: only the full Mobius product is
    guaranteed to be a polynomial, so nothing is divided per-factor.
    """
    if cache is not None:
        hit = cache.load(spec.cache_key("G"))
        if hit is not None:
            return hit
    if ctx is None:
        ctx = OrbitCtx(spec.d)
    if ctx.d != spec.d:
        raise ValueError("orbit context degree does not match spec")
    m, n = spec.m, spec.n
    one = ctx.ring_poly(IntPoly.one())
    num = one
    den = one
    for k in divisors(n):
        mu = mobius(n // k)
        if mu == 0:
            continue
        # B with l = k, j = 1 is the difference a_{m+k-1} - zeta a_{m-1}
        factor = ctx.B(m, k, 1, spec.zeta_exp)
        if mu == 1:
            num = num * factor
        else:
            den = den * factor
    if (m - 1) % n == 0:
        # multiply by prod over k|n of a_k^(-mu(n/k))
        for k in divisors(n):
            mu = mobius(n // k)
            if mu == 0:
                continue
            ak = ctx.ring_poly(ctx.a(k))
            if mu == 1:
                den = den * ak
            else:
                num = num * ak
    g = exact_div(num, den)
    if cache is not None:
        cache.store(spec.cache_key("G"), g)
    return g


def misiurewicz_degree(spec: MisSpec, cache: PolyCache | None = None) -> int:
    """Predicted degree of the Misiurewicz polynomial.

    Closed formulas for d = 2, n in {1, 2}: degree 2^(m-1) - 1 for n = 1,
    and 2^(m-1) for even m / 2^(m-1) - 1 for odd m when n = 2.  Other
    parameters fall back to constructing the polynomial.
    """
    if spec.d == 2 and spec.n == 1:
        return 2 ** (spec.m - 1) - 1
    if spec.d == 2 and spec.n == 2:
        return 2 ** (spec.m - 1) if spec.m % 2 == 0 else 2 ** (spec.m - 1) - 1
    return int(misiurewicz_poly(spec, cache=cache).degree)


def h_poly(ctx: OrbitCtx, m: int) -> IntPoly:
    """The d = 2 period-two Mobius quotient a_m - a_{m-1} + 1."""
    if ctx.d != 2:
        raise ValueError("h_poly is a d = 2 object")
    if m < 2:
        raise ValueError("m must be >= 2")
    return ctx.a(m) - ctx.a(m - 1) + IntPoly.one()
