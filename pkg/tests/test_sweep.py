"""Sweep engine: grid order, determinism, sentinels, phase optimizer."""

import dataclasses
import math

import numpy as np
import pytest

from cmmsim import (NoStablePointError, SweepAxis, SweepSpec, apply_axis,
                    apply_pump_mode, baseline_params, evaluate_point,
                    optimize_phase, run_sweep)

PHYSICS_FIELDS = ("stable", "margin", "r_min", "residual_a", "residual_m",
                  "residual_b", "en_am", "en_ab", "en_mb", "en_a_mb",
                  "en_m_ab", "en_b_am", "abs_ms_sq", "q_s")


def rows_equal(r1, r2, fields=PHYSICS_FIELDS):
    for f in fields:
        a, b = getattr(r1, f), getattr(r2, f)
        if isinstance(a, float) and math.isnan(a) and math.isnan(b):
            continue
        if a != b:
            return False
    return True


class TestEvaluatePoint:
    def test_undriven_system_is_trivial(self, base):
        row = evaluate_point(base.replace(P_a=0.0, P_m=0.0))
        assert row.stable
        assert row.r_min == 0.0
        assert row.abs_ms_sq == 0.0
        assert row.status == "ok"

    def test_entangled_operating_point(self, base):
        row = evaluate_point(base)
        assert row.stable
        assert row.r_min > 0.01
        assert row.status == "ok"

    def test_mirror_detuning_is_stable_but_unentangled(self, base):
        row = evaluate_point(base.replace(delta_a=-base.delta_a))
        assert row.stable
        assert row.r_min == 0.0

    def test_unstable_point_fills_sentinels(self, base):
        # a 20x stronger bare coupling drives the fixed point unstable
        row = evaluate_point(base.replace(g_mb=20.0 * base.g_mb))
        assert not row.stable
        assert row.status == "unstable"
        assert row.margin > 0.0
        for f in ("r_min", "residual_a", "en_am", "en_b_am"):
            assert math.isnan(getattr(row, f))
        # mean-field fields stay real
        assert not math.isnan(row.abs_ms_sq)

    def test_invalid_parameters_become_error_rows(self, base):
        row = evaluate_point(base.replace(kappa_a=-1.0))
        assert not row.stable
        assert row.status.startswith("error:")
        assert "kappa_a" in row.status

    def test_pump_modes_zero_the_right_drive(self, base):
        assert apply_pump_mode(base, "magnon-only").P_a == 0.0
        assert apply_pump_mode(base, "cavity-only").P_m == 0.0
        assert apply_pump_mode(base, "both") is base


class TestRunSweep:
    def test_single_axis_order(self, base):
        spec = SweepSpec(base=base, axes=(SweepAxis("delta_a", -1.5, -1.1, 3),))
        rows = run_sweep(spec)
        assert [r.axis1 for r in rows] == [-1.5, -1.3, -1.1]
        assert all(math.isnan(r.axis2) for r in rows)

    def test_two_axis_row_major(self, base):
        spec = SweepSpec(base=base, axes=(
            SweepAxis("delta_a", -1.4, -1.2, 2),
            SweepAxis("delta_theta", 0.0, 1.0, 3),
        ))
        rows = run_sweep(spec)
        assert [(r.axis1, r.axis2) for r in rows] == [
            (-1.4, 0.0), (-1.4, 0.5), (-1.4, 1.0),
            (-1.2, 0.0), (-1.2, 0.5), (-1.2, 1.0)]

    def test_phase_periodicity_across_rows(self, base):
        spec = SweepSpec(base=base,
                         axes=(SweepAxis("delta_theta", 0.0, 4.0 * math.pi, 81),))
        rows = run_sweep(spec, threads=4)
        for k in range(40):
            r1, r2 = rows[k], rows[k + 40]
            assert abs(r1.r_min - r2.r_min) < 1e-10
            assert abs(r1.abs_ms_sq - r2.abs_ms_sq) <= 1e-10 * r1.abs_ms_sq

    def test_thread_count_never_changes_bits(self, base):
        spec = SweepSpec(base=base, axes=(
            SweepAxis("delta_a", -2.0, 2.0, 9),
            SweepAxis("T", 0.01, 0.2, 3),
        ))
        rows1 = run_sweep(spec, threads=1)
        rows8 = run_sweep(spec, threads=8)
        assert len(rows1) == len(rows8) == 27
        assert all(rows_equal(a, b) for a, b in zip(rows1, rows8))

    def test_pump_mode_equivalence(self, base):
        axes = (SweepAxis("delta_a", -1.5, -1.0, 4),)
        rows_cav = run_sweep(SweepSpec(base=base, axes=axes,
                                       pump_mode="cavity-only"))
        rows_zero = run_sweep(SweepSpec(base=base.replace(P_m=0.0), axes=axes,
                                        pump_mode="both"))
        assert all(rows_equal(a, b) for a, b in zip(rows_cav, rows_zero))

    def test_axis_validation(self, base):
        with pytest.raises(ValueError):
            SweepAxis("delta_a", 2.0, -2.0, 5)
        with pytest.raises(ValueError):
            SweepAxis("delta_a", 0.0, 1.0, 0)
        with pytest.raises(ValueError):
            SweepAxis("bogus", 0.0, 1.0, 5)
        with pytest.raises(ValueError):
            SweepSpec(base=base, axes=(SweepAxis("T", 0.0, 1.0, 2),
                                       SweepAxis("T", 0.0, 1.0, 2)))
        with pytest.raises(ValueError):
            SweepSpec(base=base, pump_mode="nonsense")

    def test_apply_axis_semantics(self, base):
        assert apply_axis(base, "delta_a", -1.2).delta_a == -1.2 * base.omega_b
        assert apply_axis(base, "delta_theta", 0.7).theta_a == base.theta_m + 0.7
        assert apply_axis(base, "T", 0.05).T == 0.05
        assert apply_axis(base, "P_a", 0.2).P_a == 0.2


class TestOptimizePhase:
    def test_single_pump_is_flat(self, base):
        p = base.replace(P_a=0.0)
        theta, value = optimize_phase(p, resolution=16)
        assert theta == 0.0
        assert value == evaluate_point(p).r_min

    def test_dominates_zero_phase_baseline(self, base):
        p = base.replace(P_a=0.45)
        theta, value = optimize_phase(p, resolution=24)
        baseline = evaluate_point(apply_axis(p, "delta_theta", 0.0)).r_min
        assert value >= baseline
        assert 0.0 <= theta < 2.0 * math.pi + 1e-9

    def test_window_shift_finds_same_optimum(self, base):
        p = base.replace(P_a=0.45)
        _, v1 = optimize_phase(p, resolution=32)
        _, v2 = optimize_phase(p, resolution=32,
                               window=(-math.pi, math.pi))
        assert v1 == pytest.approx(v2, abs=1e-9)

    def test_resolution_floor(self, base):
        with pytest.raises(ValueError):
            optimize_phase(base, resolution=4)

    def test_all_unstable_raises(self, base):
        with pytest.raises(NoStablePointError):
            optimize_phase(base.replace(g_mb=50.0 * base.g_mb), resolution=8)


class TestRowSchema:
    def test_row_fields_cover_csv_schema(self):
        from cmmsim.sweep import SweepRow
        names = {f.name for f in dataclasses.fields(SweepRow)}
        expected = {"axis1", "axis2", "stable", "margin", "r_min",
                    "residual_a", "residual_m", "residual_b",
                    "en_am", "en_ab", "en_mb", "en_a_mb", "en_m_ab",
                    "en_b_am", "abs_ms_sq", "q_s", "status"}
        assert names == expected
