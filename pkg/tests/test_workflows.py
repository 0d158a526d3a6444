"""Tests for the scenario drivers: spectrum, sweep, audit, oracle."""

import dataclasses
import math

import pytest

from nclandau import Scenario, audit_run, oracle_run, spectrum_run, sweep_run
from nclandau.workflows import CSV_HEADER, format_number, sweep_csv


class TestScenario:
    def test_defaults_are_isotropic_commutative(self):
        sc = Scenario()
        assert (sc.hbar, sc.m, sc.omega_c) == (1.0, 1.0, 1.0)
        assert (sc.omega1, sc.omega2, sc.theta) == (1.0, 1.0, 0.0)

    def test_rs_requires_pair(self):
        with pytest.raises(ValueError):
            Scenario(gauge="rs")

    def test_nmp_has_no_rs_family(self):
        with pytest.raises(ValueError):
            Scenario(gauge="rs", prescription="nmp", r=0.5, s=0.5)

    def test_unknown_labels_rejected(self):
        with pytest.raises(ValueError):
            Scenario(gauge="coulomb")
        with pytest.raises(ValueError):
            Scenario(prescription="exact")


class TestSpectrumRun:
    def test_default_golden(self):
        res = spectrum_run(Scenario(), levels=3)
        assert res.status == "ok"
        assert res.frequencies.omega_tilde_1 == pytest.approx((1 + math.sqrt(5)) / 2, rel=1e-12)
        assert res.ground_energy == pytest.approx(math.sqrt(5) / 2, rel=1e-12)
        assert len(res.levels) == 3

    def test_zero_mode_notice(self):
        res = spectrum_run(Scenario(omega1=0.0, omega2=0.0, theta=0.7))
        assert res.status == "ok"
        assert res.zero_mode
        assert res.levels == ()
        assert res.frequencies.omega_tilde_2 == 0.0

    def test_out_of_domain(self):
        res = spectrum_run(Scenario(gauge="symmetric", theta=1.2))
        assert res.status == "out_of_domain"

    def test_degenerate(self):
        res = spectrum_run(Scenario(theta=1.0))
        assert res.status == "degenerate"

    def test_explicit_rs_gauge(self):
        res = spectrum_run(Scenario(gauge="rs", r=0.25, s=-1.5, theta=0.3))
        ref = spectrum_run(Scenario(gauge="landau", theta=0.3))
        assert res.status == "ok"
        assert res.frequencies.omega_tilde_1 == pytest.approx(
            ref.frequencies.omega_tilde_1, abs=1e-12
        )

    def test_degenerate_group_annotation(self):
        res = spectrum_run(Scenario(omega_c=0.0, theta=0.0), levels=3)
        assert res.degeneracies == (1, 2, 2)


class TestSweepRun:
    def test_row_per_combination(self):
        recs = sweep_run(
            Scenario(), 0.0, 0.9, 4, gauges=("landau", "symmetric"), prescriptions=("group", "nmp")
        )
        assert len(recs) == 4 * 2 * 2
        assert {r.status for r in recs} == {"ok"}

    def test_gauge_invariance_columnwise(self):
        recs = sweep_run(
            Scenario(omega1=1.5, omega2=1.0), 0.0, 0.9, 10,
            gauges=("landau", "symmetric"), prescriptions=("group",),
        )
        by_theta = {}
        for r in recs:
            by_theta.setdefault(r.theta, {})[r.gauge] = r
        for theta, rows in by_theta.items():
            lan, sym = rows["landau"], rows["symmetric"]
            assert abs(lan.omega_tilde_1 - sym.omega_tilde_1) <= 1e-10
            assert abs(lan.omega_tilde_2 - sym.omega_tilde_2) <= 1e-10

    def test_domain_statuses_share_axis(self):
        recs = sweep_run(
            Scenario(), 0.0, 1.5, 7, gauges=("landau", "symmetric"), prescriptions=("group",)
        )
        thetas = sorted({r.theta for r in recs})
        assert len(thetas) == 7
        sym_tail = [r for r in recs if r.gauge == "symmetric" and r.theta > 1.0]
        assert sym_tail and all(r.status == "out_of_domain" for r in sym_tail)
        degenerate = [r for r in recs if r.theta == 1.0]
        assert degenerate and all(r.status == "degenerate" for r in degenerate)
        for r in recs:
            if r.status != "ok":
                assert r.omega_tilde_1 is None and r.S is None and r.E00 is None

    def test_nmp_rows_present_beyond_pole(self):
        recs = sweep_run(
            Scenario(), 0.0, 1.5, 7, gauges=("landau",), prescriptions=("nmp",)
        )
        assert all(r.status == "ok" for r in recs)

    def test_all_four_prescriptions_coincide_at_theta_zero(self):
        recs = sweep_run(
            Scenario(omega1=1.5, omega2=1.0), 0.0, 0.5, 2,
            gauges=("landau", "symmetric"), prescriptions=("group", "nmp"),
        )
        first = [r for r in recs if r.theta == 0.0]
        assert len(first) == 4
        for r in first[1:]:
            assert abs(r.omega_tilde_1 - first[0].omega_tilde_1) <= 1e-12
            assert abs(r.omega_tilde_2 - first[0].omega_tilde_2) <= 1e-12

    def test_bad_grid_rejected(self):
        with pytest.raises(ValueError):
            sweep_run(Scenario(), 0.0, 1.0, 1, ("landau",), ("group",))
        with pytest.raises(ValueError):
            sweep_run(Scenario(), 1.0, 0.0, 4, ("landau",), ("group",))


class TestSweepCsv:
    def test_header_and_stability(self):
        recs = sweep_run(Scenario(), 0.0, 0.9, 4, ("landau",), ("group",))
        text1 = sweep_csv(recs)
        text2 = sweep_csv(
            sweep_run(Scenario(), 0.0, 0.9, 4, ("landau",), ("group",))
        )
        assert text1 == text2
        lines = text1.splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 5
        assert lines[1].startswith("0,landau,group,")
        assert lines[1].endswith(",ok")

    def test_empty_fields_for_bad_rows(self):
        recs = sweep_run(Scenario(gauge="symmetric"), 1.1, 1.5, 2, ("symmetric",), ("group",))
        for line in sweep_csv(recs).splitlines()[1:]:
            cells = line.split(",")
            assert cells[3:8] == ["", "", "", "", ""]
            assert cells[8] == "out_of_domain"

    def test_seventeen_digit_rendering(self):
        assert format_number(0.1) == "0.10000000000000001"
        assert format_number(1.0) == "1"
        assert format_number(1.618033988749895) == "1.6180339887498949"


class TestAuditRun:
    def test_invariance_holds(self):
        res = audit_run(Scenario(theta=0.3), samples=100, seed=42)
        assert res.passed
        assert res.max_delta_S <= 1e-10
        assert res.max_delta_P <= 1e-10
        assert res.max_commutator_dev <= 1e-12
        assert res.samples == 100

    def test_single_sample_is_landau_itself(self):
        res = audit_run(Scenario(theta=0.3), samples=1, seed=0)
        assert res.passed
        assert (res.worst_r, res.worst_s) == (1.0, 0.0)
        assert res.max_commutator_dev == 0.0 or res.max_commutator_dev <= 1e-15

    def test_deterministic_for_fixed_seed(self):
        a = audit_run(Scenario(theta=0.45), samples=40, seed=7)
        b = audit_run(Scenario(theta=0.45), samples=40, seed=7)
        assert a == b

    def test_nmp_refused(self):
        with pytest.raises(ValueError):
            audit_run(Scenario(prescription="nmp"), samples=10, seed=0)

    def test_runs_beyond_symmetric_domain(self):
        res = audit_run(Scenario(theta=1.4), samples=25, seed=3)
        assert res.passed


class TestOracleRun:
    def test_isotropic_half_theta(self):
        res = oracle_run(Scenario(theta=0.5), nmax=32, tol=1e-6)
        assert res.status == "ok"
        assert res.ok
        assert res.report.mode == "fock"
        assert res.report.max_rel_dev <= 1e-6

    def test_zero_mode_uses_dynamical_path(self):
        res = oracle_run(Scenario(omega1=0.0, omega2=0.0, theta=0.5))
        assert res.ok
        assert res.report.mode == "dynamical_only"
        assert res.report.invariant_dev <= 1e-12

    def test_paper_convention_disagrees(self):
        res = oracle_run(
            Scenario(gauge="symmetric", omega1=0.0, omega2=0.0, theta=0.0),
            paper_convention=True,
        )
        assert res.status == "ok"
        assert not res.ok
        assert res.report.analytic == pytest.approx((1.5, 0.5))
        assert res.report.oracle == pytest.approx((1.0, 0.0))

    def test_domain_error_status(self):
        res = oracle_run(Scenario(gauge="symmetric", theta=1.3))
        assert res.status == "out_of_domain"
        assert not res.ok


def test_sweep_records_are_plain_data():
    recs = sweep_run(Scenario(), 0.0, 0.5, 2, ("landau",), ("group",))
    rec = recs[0]
    assert dataclasses.asdict(rec)["status"] == "ok"
