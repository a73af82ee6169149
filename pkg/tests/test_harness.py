import json

import pytest

from misipoly.harness import (
    CONSISTENT,
    FAIL,
    PASS,
    CheckRecord,
    Table1Row,
    check_2special_family,
    check_cross_identity,
    check_recurrence,
    check_special_resultants,
    check_unit_conjecture,
    growth_report,
    table1,
    table1_csv,
    worst_verdict,
)
from misipoly.misiurewicz import PolyCache


@pytest.fixture(scope="module")
def cache(tmp_path_factory):
    return PolyCache(str(tmp_path_factory.mktemp("cache")))


class TestUnitConjecture:
    def test_small_grid_values(self, cache):
        records = check_unit_conjecture(2, 5, cache)
        by_params = {(r.params["m"], r.params["n"], r.params["l"]): r for r in records}
        # Res(c^2+1, c+2) = 5: proper divisor direction, proven for n <= 3
        rec = by_params[(2, 2, 1)]
        assert rec.computed["abs_norm_resultant"] == "5"
        assert rec.verdict == PASS
        # l = 2 does not divide n = 3: unit required (theorem)
        rec = by_params[(2, 3, 2)]
        assert rec.computed["abs_norm_resultant"] == "1"
        assert rec.verdict == PASS

    def test_theorem_direction_all_pass(self, cache):
        records = check_unit_conjecture(2, 7, cache)
        for r in records:
            if r.params["n"] % r.params["l"] != 0:
                assert r.verdict == PASS, r

    def test_divisor_direction_not_unit(self, cache):
        records = check_unit_conjecture(2, 7, cache)
        for r in records:
            if r.params["n"] % r.params["l"] == 0:
                assert int(r.computed["abs_norm_resultant"]) > 1, r
                assert r.verdict in (PASS, CONSISTENT)

    def test_d3_small(self):
        records = check_unit_conjecture(3, 5)
        assert records
        for r in records:
            assert r.params["zeta_exp"] in (1, 2)
            if r.params["n"] % r.params["l"] != 0:
                assert r.verdict == PASS, r
            else:
                assert int(r.computed["abs_norm_resultant"]) > 1, r

    def test_d4_smoke(self):
        records = check_unit_conjecture(4, 4)
        assert records
        for r in records:
            if r.params["n"] % r.params["l"] != 0:
                assert r.verdict == PASS, r

    def test_rejects_unsupported_degree(self):
        with pytest.raises(ValueError):
            check_unit_conjecture(5, 4)


class TestCrossIdentity:
    def test_known_value(self, cache):
        records = check_cross_identity(4, cache)
        rec = next(
            r for r in records if (r.params["m"], r.params["n"], r.params["l"]) == (2, 2, 1)
        )
        assert rec.computed == {"abs_res_g": "5", "abs_res_p_phi": "5"}
        assert rec.verdict == PASS

    def test_exact_equality_everywhere(self, cache):
        for r in check_cross_identity(6, cache):
            assert r.verdict == PASS, r
            assert r.computed["abs_res_g"] == r.computed["abs_res_p_phi"]


class TestTable1:
    def test_row_2_1(self, cache):
        rows = table1(cache)
        assert rows[0] == Table1Row(2, 1, 1, (1, 1, 3, 2, 5, 2, 8, 5))

    def test_row_3_2(self, cache):
        rows = {(r.m, r.n): r for r in table1(cache)}
        assert rows[(3, 2)].degP == 3
        assert rows[(3, 2)].floor_logs == (4, 4, 9, 9, 19, 9, 29, 19)

    def test_row_6_1(self, cache):
        rows = {(r.m, r.n): r for r in table1(cache)}
        assert rows[(6, 1)].degP == 31
        assert rows[(6, 1)].floor_logs == (22, 22, 44, 44, 86, 44, 134, 88)

    def test_csv_shape(self, cache):
        text = table1_csv(table1(cache))
        lines = text.strip().split("\n")
        assert lines[0] == "m,n,degP,l1,l2,l3,l4,l5,l6,l7,l8"
        assert len(lines) == 16
        assert lines[1] == "2,1,1,1,1,3,2,5,2,8,5"

    def test_matches_committed_golden(self, cache, pytestconfig):
        golden = pytestconfig.rootpath / "goldens" / "table1.csv"
        assert table1_csv(table1(cache)) == golden.read_text()


class TestGrowth:
    def test_bounds_hold(self, cache):
        report = growth_report(cache)
        assert report.lower_bound_ok
        assert report.upper_bound_ok
        assert report.outside_small_bound_ok
        assert len(report.entries) == 15 * 8

    def test_first_entry_value(self, cache):
        report = growth_report(cache)
        first = report.entries[0]
        assert (first.m, first.n, first.l) == (2, 1, 1)
        # ln 3 / 1 = 1.0986...
        assert first.ratio.startswith("1.0986")


class TestSpecialSweeps:
    def test_family_2special(self, cache):
        records = check_2special_family(7, cache)
        for r in records:
            assert r.computed["is_2_special"] == "1", r
            expected = PASS if r.params["n"] in (1, 2) else CONSISTENT
            assert r.verdict == expected, r

    def test_max_mn_capped(self):
        with pytest.raises(ValueError):
            check_2special_family(11)

    def test_resultant_floor_small(self, cache):
        records = check_special_resultants(max_mn=5, lmax=12, synthetic=20, cache=cache)
        assert all(r.verdict == PASS for r in records)
        family = [r for r in records if "m" in r.params]
        synth = [r for r in records if "index" in r.params]
        assert len(synth) == 20
        assert family
        for r in records:
            assert int(r.computed["min_abs_resultant"]) > 1
            assert r.computed["power_closure"] == "1"

    def test_seeded_determinism(self, cache):
        a = check_special_resultants(max_mn=4, lmax=6, synthetic=10, cache=cache)
        b = check_special_resultants(max_mn=4, lmax=6, synthetic=10, cache=cache)
        assert len(a) == len(b)
        for x, y in zip(a, b):
            assert x.same_outcome(y)


class TestRecurrenceSweep:
    def test_small(self):
        records = check_recurrence(ds=(2,), ms=(2, 3), ls=(1, 2), jmax=2)
        assert all(r.verdict == PASS for r in records)
        assert len(records) == 4


class TestDeterminismAndParallelism:
    def test_parallel_equals_serial(self, cache):
        serial = check_unit_conjecture(2, 6, cache, jobs=1)
        parallel = check_unit_conjecture(2, 6, cache, jobs=4)
        assert len(serial) == len(parallel)
        for a, b in zip(serial, parallel):
            assert a.same_outcome(b)

    def test_warm_cache_identical(self, cache):
        a = check_cross_identity(5, cache)
        b = check_cross_identity(5, cache)
        for x, y in zip(a, b):
            assert x.same_outcome(y)

    def test_parallel_table(self, cache):
        assert table1(cache) == table1(cache, jobs=3)


class TestRecordPlumbing:
    def test_json_schema(self):
        rec = CheckRecord("x", {"d": 2, "m": 2}, {"v": "1"}, PASS, 3)
        blob = json.dumps(rec.to_json())
        parsed = json.loads(blob)
        assert parsed == {
            "check_id": "x",
            "params": {"d": 2, "m": 2},
            "computed": {"v": "1"},
            "verdict": "pass",
            "elapsed_ms": 3,
        }

    def test_worst_verdict(self):
        mk = lambda v: CheckRecord("c", {}, {}, v, 0)
        assert worst_verdict([mk(PASS), mk(CONSISTENT)]) == CONSISTENT
        assert worst_verdict([mk(PASS), mk(FAIL), mk(CONSISTENT)]) == FAIL
        assert worst_verdict([]) == PASS
