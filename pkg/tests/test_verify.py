import json
import math

import numpy as np
import pytest

from susy_pt import ModelParams, energy_squared, mass_from_k
from susy_pt.verify import (
    DEFAULT_BATTERY,
    SUITE_NAMES,
    run_all,
    run_nonrel_limit,
)

SMALL = dict(n_max=4, grid_n=1024)
FAST_SUITES = ("equidistance", "nonrel_limit", "shape_invariance")


class TestRunAll:
    def test_default_battery_all_pass(self):
        report = run_all(n_max=6, grid_n=1024)
        assert report.all_passed
        assert [s.name for s in report.suites] == list(SUITE_NAMES)
        for s in report.suites:
            assert (s.worst_residual <= s.tolerance) == (s.status == "pass")

    def test_each_suite_listed_exactly_once(self):
        report = run_all(params_set=[ModelParams(1.0, 1.0, 2.0)], **SMALL)
        names = [s.name for s in report.suites]
        assert len(names) == len(set(names)) == len(SUITE_NAMES)

    def test_corrupted_k_fails_ladder_suite(self):
        # deliberate +1e-3 shift of k inside the expected ladder factors
        report = run_all(
            params_set=[ModelParams(1.0, 1.0, 2.0)],
            suites=["ladder"],
            k_corruption=1e-3,
            **SMALL,
        )
        (ladder,) = report.suites
        assert ladder.status == "fail"
        assert not report.all_passed

    def test_suite_subset_selection(self):
        report = run_all(suites=["equidistance"], **SMALL)
        assert [s.name for s in report.suites] == ["equidistance"]

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            run_all(suites=["no_such_suite"], **SMALL)

    def test_empty_battery_rejected(self):
        with pytest.raises(ValueError):
            run_all(params_set=[], **SMALL)

    def test_n_max_validation(self):
        with pytest.raises(ValueError):
            run_all(n_max=17)
        with pytest.raises(ValueError):
            run_all(n_max=-1)

    def test_richardson_tightens_numeric_suite(self):
        battery = [ModelParams(1.0, 1.0, 2.0)]
        plain = run_all(params_set=battery, suites=["numeric_cross_check"], **SMALL)
        sharp = run_all(
            params_set=battery, suites=["numeric_cross_check"], richardson=True, **SMALL
        )
        assert plain.suites[0].tolerance == 1e-3
        assert sharp.suites[0].tolerance == 1e-6
        assert sharp.suites[0].status == "pass"
        assert sharp.suites[0].worst_residual < plain.suites[0].worst_residual

    def test_parallel_run_matches_serial(self):
        battery = [ModelParams(1.0, 1.0, 2.0)]
        a = run_all(params_set=battery, suites=list(FAST_SUITES), **SMALL)
        b = run_all(params_set=battery, suites=list(FAST_SUITES), max_workers=3, **SMALL)
        for sa, sb in zip(a.suites, b.suites):
            assert sa.name == sb.name
            assert sa.worst_residual == sb.worst_residual
            assert sa.status == sb.status

    def test_equidistance_suite_reports_zero_scale_residual(self):
        report = run_all(
            params_set=[ModelParams(1.0, 1.0, 2.0)], suites=["equidistance"], **SMALL
        )
        assert report.suites[0].worst_residual <= 1e-12


class TestReportSerialization:
    def test_json_schema(self):
        report = run_all(params_set=[ModelParams(1.0, 1.0, 2.0)], suites=["equidistance"], **SMALL)
        data = json.loads(report.to_json())
        assert set(data) == {"suites", "meta"}
        suite = data["suites"][0]
        assert set(suite) == {"name", "status", "worst_residual", "tolerance", "params"}
        assert suite["params"][0] == {"omega": 1.0, "epsilon": 1.0, "k": 2.0}
        assert {"params_set", "n_max", "grid_n", "richardson", "timestamp"} <= set(data["meta"])

    def test_text_rendering(self):
        report = run_all(params_set=[ModelParams(1.0, 1.0, 2.0)], suites=list(FAST_SUITES), **SMALL)
        text = report.to_text()
        for name in FAST_SUITES:
            assert name in text
        assert "all suites pass" in text


class TestNonrelLimit:
    def test_monotone_decrease_and_small_tail(self):
        rows = run_nonrel_limit(1.0, 1.0, (1e2, 1e3, 1e4, 1e6))
        assert rows[-1].residuals[0] <= 1e-5
        for n in range(6):
            seq = [r.residuals[n] for r in rows]
            assert all(b < a for a, b in zip(seq, seq[1:]))
        # residual at k=100 visibly larger than at k=1e6
        assert rows[0].residuals[0] > 100.0 * rows[-1].residuals[0]

    def test_other_deformations_also_converge(self):
        for eps in (0.5, 2.0):
            rows = run_nonrel_limit(1.0, eps, (1e3, 1e5))
            for n in range(6):
                assert rows[1].residuals[n] < rows[0].residuals[n]

    def test_exact_gap_relation(self):
        # E_n^2 - m^2 = w^2 (n^2 + 2nk + k) exactly, any k; the float
        # subtraction cancels ~k digits, so tolerance carries the E^2 scale
        rng = np.random.default_rng(3)
        for _ in range(200):
            p = ModelParams(
                10.0 ** rng.uniform(-1, 1),
                10.0 ** rng.uniform(-1, 1),
                10.0 ** rng.uniform(math.log10(1.0 + 1e-4), 6.0),
            )
            n = int(rng.integers(0, 6))
            e2 = energy_squared(p, n)
            lhs = e2 - mass_from_k(p) ** 2
            rhs = p.hat_omega**2 * (n * n + 2.0 * n * p.k + p.k)
            assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-14 * e2)

    def test_rejects_non_increasing_sequence(self):
        with pytest.raises(ValueError):
            run_nonrel_limit(1.0, 1.0, (1e3, 1e2))

    def test_rejects_oversized_k(self):
        with pytest.raises(ValueError):
            run_nonrel_limit(1.0, 1.0, (1e2, 1e9))

    def test_mass_column(self):
        (row,) = run_nonrel_limit(1.0, 1.0, (100.0,))
        assert row.mass == pytest.approx(mass_from_k(ModelParams(1.0, 1.0, 100.0)), rel=1e-15)


def test_default_battery_composition():
    assert len(DEFAULT_BATTERY) == 12
    assert {p.epsilon for p in DEFAULT_BATTERY} == {0.5, 1.0, 2.0}
    assert {p.k for p in DEFAULT_BATTERY} == {1.5, 2.0, 3.7, 10.0}
