"""Parameter-sweep engine and phase optimizer.

Each grid point is an independent pure evaluation of the full pipeline
(mean field -> drift/diffusion -> Lyapunov -> entanglement measures), so a
sweep may be evaluated by any number of worker threads without changing a
single bit of the output; rows are always assembled in row-major grid
order with the first axis outermost.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import dynamics, entanglement, meanfield
from .errors import CmmError, NoStablePointError
from .params import PhysicalParams, validate

AXES = ("delta_a", "delta_theta", "T", "P_a")
PUMP_MODES = ("both", "magnon-only", "cavity-only")

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SweepAxis:
    """One linearly spaced sweep axis.

    ``delta_a`` is dimensionless (units of omega_b), ``delta_theta`` is in
    radians, ``T`` in kelvin, ``P_a`` in watts.
    """

    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.name not in AXES:
            raise ValueError(f"unknown sweep axis {self.name!r}; choose from {AXES}")
        if self.count < 1:
            raise ValueError(f"axis {self.name}: count must be >= 1")
        if not self.start <= self.stop:
            raise ValueError(f"axis {self.name}: start must be <= stop")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepSpec:
    """Base parameters plus up to two sweep axes and a pump mode."""

    base: PhysicalParams
    axes: tuple[SweepAxis, ...] = ()
    pump_mode: str = "both"

    def __post_init__(self):
        if len(self.axes) > 2:
            raise ValueError("at most two sweep axes are supported")
        names = [ax.name for ax in self.axes]
        if len(set(names)) != len(names):
            raise ValueError(f"sweep axes must be distinct, got {names}")
        if self.pump_mode not in PUMP_MODES:
            raise ValueError(
                f"unknown pump_mode {self.pump_mode!r}; choose from {PUMP_MODES}")


@dataclass
class SweepRow:
    """One evaluated grid point.  Entanglement fields are NaN whenever the
    point is unstable or errored; ``status`` says which."""

    axis1: float
    axis2: float
    stable: bool
    margin: float
    r_min: float
    residual_a: float
    residual_m: float
    residual_b: float
    en_am: float
    en_ab: float
    en_mb: float
    en_a_mb: float
    en_m_ab: float
    en_b_am: float
    abs_ms_sq: float
    q_s: float
    status: str = "ok"


def apply_pump_mode(params: PhysicalParams, pump_mode: str) -> PhysicalParams:
    """magnon-only forces P_a = 0; cavity-only forces P_m = 0."""
    if pump_mode == "both":
        return params
    if pump_mode == "magnon-only":
        return params.replace(P_a=0.0)
    if pump_mode == "cavity-only":
        return params.replace(P_m=0.0)
    raise ValueError(f"unknown pump_mode {pump_mode!r}")


def apply_axis(params: PhysicalParams, name: str, value: float) -> PhysicalParams:
    if name == "delta_a":
        return params.replace(delta_a=value * params.omega_b)
    if name == "delta_theta":
        return params.replace(theta_a=params.theta_m + value)
    if name == "T":
        return params.replace(T=value)
    if name == "P_a":
        return params.replace(P_a=value)
    raise ValueError(f"unknown sweep axis {name!r}")


def evaluate_point(params: PhysicalParams, pump_mode: str = "both",
                   return_cm: bool = False):
    """Run the full pipeline at one parameter point.

    Never raises for physics reasons: instability and solver errors are
    captured in the returned row (entanglement fields NaN, ``status`` set).
    With ``return_cm=True`` returns ``(row, V)`` where V is the steady-state
    covariance matrix or None.
    """
    nan = float("nan")
    row = SweepRow(axis1=nan, axis2=nan, stable=False, margin=nan,
                   r_min=nan, residual_a=nan, residual_m=nan, residual_b=nan,
                   en_am=nan, en_ab=nan, en_mb=nan, en_a_mb=nan,
                   en_m_ab=nan, en_b_am=nan, abs_ms_sq=nan, q_s=nan)
    v = None
    try:
        p = validate(apply_pump_mode(params, pump_mode))
        state = meanfield.solve_steady_state(p)
        row.abs_ms_sq = abs(state.m_s) ** 2
        row.q_s = state.q_s
        a = dynamics.build_drift(p, state)
        d = dynamics.build_diffusion(p)
        row.stable, row.margin = dynamics.is_stable(
            a, eps=dynamics.STABILITY_EPS * p.omega_b)
        if not row.stable:
            row.status = "unstable"
            return (row, None) if return_cm else row
        v = dynamics.solve_lyapunov(a, d)
        report = entanglement.entanglement_report(v, stable=True)
        row.r_min = report.r_min
        row.residual_a = report.residual_a
        row.residual_m = report.residual_m
        row.residual_b = report.residual_b
        row.en_am = report.en_am
        row.en_ab = report.en_ab
        row.en_mb = report.en_mb
        row.en_a_mb = report.en_a_mb
        row.en_m_ab = report.en_m_ab
        row.en_b_am = report.en_b_am
    except CmmError as exc:
        row.status = f"error: {exc}"
        v = None
    return (row, v) if return_cm else row


def _grid_points(spec: SweepSpec):
    """(axis1_value, axis2_value, params) per grid point, row-major."""
    if not spec.axes:
        yield float("nan"), float("nan"), spec.base
        return
    if len(spec.axes) == 1:
        for x in spec.axes[0].values():
            yield float(x), float("nan"), apply_axis(spec.base, spec.axes[0].name, float(x))
        return
    ax1, ax2 = spec.axes
    for x in ax1.values():
        p1 = apply_axis(spec.base, ax1.name, float(x))
        for y in ax2.values():
            yield float(x), float(y), apply_axis(p1, ax2.name, float(y))


def run_sweep(spec: SweepSpec, threads: int = 1) -> list[SweepRow]:
    """Evaluate the grid; deterministic row order and values regardless of
    ``threads`` (each point is a pure, independent evaluation)."""
    points = list(_grid_points(spec))

    def job(point):
        x, y, params = point
        row = evaluate_point(params, spec.pump_mode)
        row.axis1, row.axis2 = x, y
        return row

    if threads <= 1 or len(points) <= 1:
        return [job(pt) for pt in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(job, points))


def _r_min_at_phase(params: PhysicalParams, delta_theta: float) -> float:
    row = evaluate_point(apply_axis(params, "delta_theta", delta_theta))
    return row.r_min


def optimize_phase(params: PhysicalParams, resolution: int,
                   window: tuple[float, float] = (0.0, 2.0 * math.pi)):
    """Maximize the minimum residual contangle over the drive phase
    difference.

    Coarse scan of ``resolution`` points over ``window`` (right-open),
    then golden-section refinement of the best bracket down to 1e-6 rad.
    Exact ties break toward the smallest phase; a coarse scan that is
    exactly flat skips refinement and returns the window start.  Unstable
    phases count as minus infinity; if every phase is unstable,
    NoStablePointError is raised.

    Returns ``(delta_theta_star, r_min_star)`` with the phase normalized
    into [0, 2*pi).
    """
    if resolution < 8:
        raise ValueError("resolution must be >= 8")
    lo, hi = window
    grid = lo + (hi - lo) * np.arange(resolution) / resolution
    values = [_r_min_at_phase(params, float(x)) for x in grid]
    finite = [v for v in values if not math.isnan(v)]
    if not finite:
        raise NoStablePointError(
            "no stable operating point at any sampled phase")

    def key(v):
        return -math.inf if math.isnan(v) else v

    two_pi = 2.0 * math.pi
    best = max(range(resolution), key=lambda k: key(values[k]))  # first wins ties
    if all(v == values[0] for v in values):
        return float(grid[0]) % two_pi, values[0]

    h = (hi - lo) / resolution
    a, b = float(grid[best]) - h, float(grid[best]) + h
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = _r_min_at_phase(params, c), _r_min_at_phase(params, d)
    while b - a > 1e-6:
        if key(fc) >= key(fd):
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = _r_min_at_phase(params, c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = _r_min_at_phase(params, d)
    x_ref = 0.5 * (a + b)
    f_ref = _r_min_at_phase(params, x_ref)
    # never return less than the best coarse grid point
    if key(f_ref) >= key(values[best]):
        return x_ref % two_pi, f_ref
    return float(grid[best]) % two_pi, values[best]
