import pytest

from conftest import charpoly_cres_oracle
from misipoly.misiurewicz import MisSpec, PolyCache, misiurewicz_poly
from misipoly.multiplier import (
    Method,
    expansion_coeffs,
    multiplier_closed_n1,
    multiplier_closed_n2,
    multiplier_poly,
    r_poly,
    squarefree_diagnostic,
)
from misipoly.orbit import OrbitCtx
from misipoly.polyring import CycPoly, IntPoly, charpoly_faddeev, poly_from_text, poly_rem


def pt(s):
    return poly_from_text(s)[0]


R4_TEXT = "x^8 - 16*x^7 + 96*x^6 - 128*x^5 - 1536*x^4 + 8192*x^3 - 8192*x^2 - 32768*x + 131072"


class TestCharpolyPath:
    def test_printed_period_one_values(self):
        assert multiplier_poly(MisSpec(2, 2, 1)).poly == pt("x - 4")
        assert multiplier_poly(MisSpec(2, 3, 1)).poly == pt("x^3 - 4*x^2 + 16")
        assert multiplier_poly(MisSpec(2, 4, 1)).poly == pt(
            "x^7 - 8*x^6 + 16*x^5 + 16*x^4 - 64*x^3 + 256"
        )

    def test_monic_with_misiurewicz_degree(self):
        ctx = OrbitCtx(2)
        for m in range(2, 5):
            for n in range(1, 4):
                if m + n > 6:
                    continue
                spec = MisSpec(2, m, n)
                p = multiplier_poly(spec, ctx).poly
                assert p.is_monic
                assert p.degree == misiurewicz_poly(spec, ctx).degree

    def test_method_tag(self):
        got = multiplier_poly(MisSpec(2, 2, 2))
        assert got.method is Method.CHARPOLY

    def test_matches_c_resultant_oracle(self):
        ctx = OrbitCtx(2)
        for m in range(2, 5):
            for n in range(1, 5):
                if m + n > 6:
                    continue
                g = misiurewicz_poly(MisSpec(2, m, n), ctx)
                lam = poly_rem(ctx.cycle_multiplier_poly(m, n), g)
                got = multiplier_poly(MisSpec(2, m, n), ctx).poly
                oracle = charpoly_cres_oracle(g, lam)
                assert got == oracle or got == -oracle, (m, n)

    def test_matches_faddeev_oracle_small(self):
        ctx = OrbitCtx(2)
        for m, n in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)]:
            g = misiurewicz_poly(MisSpec(2, m, n), ctx)
            lam = poly_rem(ctx.cycle_multiplier_poly(m, n), g)
            assert multiplier_poly(MisSpec(2, m, n), ctx).poly == charpoly_faddeev(g, lam)

    def test_cyclotomic_coefficients_for_higher_degree(self):
        p = multiplier_poly(MisSpec(3, 2, 1)).poly
        assert isinstance(p, CycPoly)
        assert p.is_monic
        assert p.degree == 2  # deg G(3,2,1) = (3 - 1)


class TestClosedForms:
    def test_period_one_closed_matches_printed(self):
        assert multiplier_closed_n1(3) == pt("x^3 - 4*x^2 + 16")
        assert multiplier_closed_n1(4) == pt("x^7 - 8*x^6 + 16*x^5 + 16*x^4 - 64*x^3 + 256")

    def test_period_one_closed_matches_charpoly(self):
        ctx = OrbitCtx(2)
        for m in range(3, 7):
            assert multiplier_closed_n1(m, ctx) == multiplier_poly(MisSpec(2, m, 1), ctx).poly, m

    def test_m2_rejected_by_closed_form(self):
        with pytest.raises(ValueError):
            multiplier_closed_n1(2)

    def test_period_two_closed_values(self):
        assert multiplier_closed_n2(2) == pt("x^2 - 8*x + 32")
        assert multiplier_closed_n2(3) == pt("x^3 - 8*x^2 + 128")
        assert multiplier_closed_n2(4) == pt(R4_TEXT)

    def test_period_two_closed_matches_charpoly(self):
        ctx = OrbitCtx(2)
        for m in range(2, 7):
            assert multiplier_closed_n2(m, ctx) == multiplier_poly(MisSpec(2, m, 2), ctx).poly, m


class TestRescaledQuotient:
    def test_printed_values(self):
        assert r_poly(2) == pt("x^2 - 8*x + 32")
        assert r_poly(3) == pt("x^4 - 8*x^3 + 128*x")
        assert r_poly(4) == pt(R4_TEXT)

    def test_odd_m_zero_constant_term(self):
        ctx = OrbitCtx(2)
        for m in (3, 5, 7):
            rm = r_poly(m, ctx)
            assert rm.coeffs[0] == 0
            # and dividing by x gives the period-two multiplier polynomial
            assert IntPoly(rm.coeffs[1:]) == multiplier_closed_n2(m, ctx)

    def test_even_m_equals_period_two(self):
        ctx = OrbitCtx(2)
        for m in (2, 4, 6):
            assert r_poly(m, ctx) == multiplier_closed_n2(m, ctx)


class TestExpansionCoeffs:
    def test_m2(self):
        assert expansion_coeffs(2) == [32, -8]

    def test_m3_subleading(self):
        e = expansion_coeffs(3)
        assert e[3] == -8  # == -2^m at the slot below the leading term

    def test_subleading_formula(self):
        # the -2^m collapse needs the high coefficients of a_m - a_{m-1} + 1
        # to coincide with those of a_m, which starts at m = 3
        ctx = OrbitCtx(2)
        for m in range(3, 8):
            e = expansion_coeffs(m, ctx)
            assert e[2 ** (m - 1) - 1] == -(2**m), m

    def test_matches_rescale_construction(self):
        ctx = OrbitCtx(2)
        for m in range(2, 9):
            e = expansion_coeffs(m, ctx)
            rm = r_poly(m, ctx)
            assert list(rm.coeffs[: 2 ** (m - 1)]) == e, m


class TestCacheAndDiagnostics:
    def test_p_cache_round_trip(self, tmp_path):
        cache = PolyCache(str(tmp_path))
        spec = MisSpec(2, 3, 2)
        p1 = multiplier_poly(spec, cache=cache).poly
        assert (tmp_path / "P_d2_m3_n2_z1.json").exists()
        p2 = multiplier_poly(spec, cache=cache).poly
        assert p1 == p2

    def test_squarefree_diagnostic(self):
        assert squarefree_diagnostic(pt("x^2 - 8*x + 32")) is True
        assert squarefree_diagnostic(pt("x - 4")) is True
        sq = pt("x - 1") * pt("x - 1") * pt("x + 5")
        assert squarefree_diagnostic(sq) is not True

    def test_family_squarefree(self):
        ctx = OrbitCtx(2)
        for m in range(2, 5):
            for n in range(1, 4):
                if m + n <= 6:
                    p = multiplier_poly(MisSpec(2, m, n), ctx).poly
                    assert squarefree_diagnostic(p) is True
