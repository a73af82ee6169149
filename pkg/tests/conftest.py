from fractions import Fraction

from misipoly.polyring import IntPoly, poly_rem, resultant


def charpoly_cres_oracle(g: IntPoly, lam: IntPoly) -> IntPoly:
    """Res_c(g(c), x - lam(c)) by scalar resultants at integer points plus
    Lagrange interpolation over Q.  Independent of the trace/Newton path."""
    k = g.degree
    lam_red = poly_rem(lam, g)
    pts = []
    for t in range(k + 1):
        xt = IntPoly((t,)) - lam_red
        if xt.is_zero:
            # t equals the constant lam everywhere; resultant vanishes
            pts.append((t, 0))
        else:
            pts.append((t, resultant(g, xt)))
    coeffs = [Fraction(0)] * (k + 1)
    for i, (xi, yi) in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if i == j:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for t2, b in enumerate(basis):
                new[t2] -= b * xj
                new[t2 + 1] += b
            basis = new
            denom *= xi - xj
        for t2, b in enumerate(basis):
            coeffs[t2] += b * yi / denom
    assert all(f.denominator == 1 for f in coeffs)
    return IntPoly([int(f) for f in coeffs])
