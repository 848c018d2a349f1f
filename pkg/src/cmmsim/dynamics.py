"""Linearized fluctuation dynamics: drift/diffusion matrices, stability,
and the steady-state covariance matrix.

Quadrature ordering is fixed throughout as (X, Y, x, y, q, p): cavity,
magnon, mechanics, position-like before momentum-like.  The covariance
matrix uses the vacuum normalization V_vac = I/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IntegrationError, NumericalError, UnstableSystemError
from .meanfield import MeanFieldState
from .params import PhysicalParams

SQRT2 = math.sqrt(2.0)

#: default relative stability margin, in units of the scale passed to is_stable
STABILITY_EPS = 1e-9

#: enforced relative Frobenius residual of the Lyapunov solve
LYAPUNOV_RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class LinearModel:
    """Drift matrix ``a``, diagonal diffusion matrix ``d`` and the complex
    effective magnomechanical coupling i*sqrt(2)*g_mb*m_s, all in rad/s."""

    a: np.ndarray
    d: np.ndarray
    g_mb_eff: complex
    delta_m_tilde: float


def build_drift(params: PhysicalParams, state: MeanFieldState) -> np.ndarray:
    """Real 6x6 drift matrix of the linearized fluctuation dynamics.

    Rows are the time derivatives of (X, Y, x, y, q, p).  The
    magnon-mechanics entries carry the real and imaginary parts of the
    steady-state magnon amplitude separately, so the matrix is valid for
    arbitrary drive phases.
    """
    ka, km, gb = params.kappa_a, params.kappa_m, params.gamma_b
    da, dm = params.delta_a, state.delta_m_tilde
    g = params.g_ma
    wb = params.omega_b
    cm = SQRT2 * params.g_mb
    mr, mi = state.m_s.real, state.m_s.imag
    return np.array([
        [-ka,  da,   0.0,  g,    0.0,      0.0],
        [-da, -ka,  -g,    0.0,  0.0,      0.0],
        [0.0,  g,   -km,   dm,   cm * mi,  0.0],
        [-g,   0.0, -dm,  -km,  -cm * mr,  0.0],
        [0.0,  0.0,  0.0,  0.0,  0.0,      wb],
        [0.0,  0.0, -cm * mr, -cm * mi, -wb, -gb],
    ])


def build_diffusion(params: PhysicalParams) -> np.ndarray:
    """Diagonal 6x6 diffusion matrix of the input noises.

    Entries are kappa_a(2N_a+1) twice, kappa_m(2N_m+1) twice, 0 for the
    mechanical position, gamma_b(2N_b+1) for the mechanical momentum.
    """
    occ = params.occupations()
    return np.diag([
        params.kappa_a * (2.0 * occ.n_a + 1.0),
        params.kappa_a * (2.0 * occ.n_a + 1.0),
        params.kappa_m * (2.0 * occ.n_m + 1.0),
        params.kappa_m * (2.0 * occ.n_m + 1.0),
        0.0,
        params.gamma_b * (2.0 * occ.n_b + 1.0),
    ])


def build_linear_model(params: PhysicalParams,
                       state: MeanFieldState) -> LinearModel:
    return LinearModel(
        a=build_drift(params, state),
        d=build_diffusion(params),
        g_mb_eff=1j * SQRT2 * params.g_mb * state.m_s,
        delta_m_tilde=state.delta_m_tilde,
    )


def is_stable(a: np.ndarray, eps: float | None = None) -> tuple[bool, float]:
    """Spectral stability test.

    Returns ``(flag, margin)`` with ``margin`` the maximum real part of the
    spectrum of ``a``; the flag is true iff ``margin < -eps``.  ``eps``
    defaults to STABILITY_EPS times the largest matrix entry; the pipeline
    passes STABILITY_EPS * omega_b explicitly.  Eigensolver failures
    propagate as numpy.linalg.LinAlgError, never as a silent False.
    """
    margin = float(np.linalg.eigvals(np.asarray(a, dtype=float)).real.max())
    if eps is None:
        eps = STABILITY_EPS * float(np.abs(a).max())
    return margin < -eps, margin


def solve_lyapunov(a: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Unique symmetric solution V of a V + V a^T = -d for stable ``a``.

    Solved densely through the Kronecker identity
    (I (x) a + a (x) I) vec(V) = -vec(d); for generic parameter sweeps the
    6x6 system makes the 36x36 solve trivial.  The result is symmetrized
    and its relative Frobenius residual verified against
    LYAPUNOV_RESIDUAL_TOL.

    Raises UnstableSystemError when ``a`` is not Hurwitz-stable, and
    NumericalError if the residual contract fails.
    """
    a = np.asarray(a, dtype=float)
    d = np.asarray(d, dtype=float)
    n = a.shape[0]
    flag, margin = is_stable(a, eps=0.0)
    if margin >= 0.0:
        raise UnstableSystemError(
            f"no steady state: spectral abscissa {margin:.3e} >= 0")
    eye = np.eye(n)
    k = np.kron(eye, a) + np.kron(a, eye)
    v = np.linalg.solve(k, -d.flatten(order="F")).reshape((n, n), order="F")
    v = 0.5 * (v + v.T)
    d_norm = np.linalg.norm(d)
    residual = np.linalg.norm(a @ v + v @ a.T + d) / (d_norm if d_norm > 0 else 1.0)
    if residual > LYAPUNOV_RESIDUAL_TOL:
        raise NumericalError(
            f"Lyapunov residual {residual:.3e} exceeds {LYAPUNOV_RESIDUAL_TOL:.1e}")
    return v


def integrate_covariance(a: np.ndarray, d: np.ndarray, v0: np.ndarray,
                         t_final: float, dt: float | None = None) -> np.ndarray:
    """Propagate dV/dt = a V + V a^T + d with a fixed-step classical
    fourth-order Runge-Kutta scheme, symmetrizing after every step.

    Default step is 0.01 / max|Re eig(a)|.  Serves as the independent
    cross-check of :func:`solve_lyapunov`; for stable ``a`` and
    t_final >> 1/|margin| the two agree to the integrator's accuracy.

    Raises IntegrationError on norm blow-up (entries beyond 1e12),
    which indicates the step is too large for the spectrum of ``a``.
    """
    a = np.asarray(a, dtype=float)
    d = np.asarray(d, dtype=float)
    v = 0.5 * (np.asarray(v0, dtype=float) + np.asarray(v0, dtype=float).T)
    if t_final < 0.0 or (dt is not None and dt <= 0.0):
        raise ValueError("t_final must be >= 0 and dt > 0")
    if t_final == 0.0:
        return v
    if dt is None:
        decay = float(np.abs(np.linalg.eigvals(a).real).max())
        dt = 0.01 / decay if decay > 0.0 else t_final / 1000.0

    def flow(m):
        return a @ m + m @ a.T + d

    n_steps = int(math.ceil(t_final / dt - 1e-12))
    t = 0.0
    for k in range(n_steps):
        h = min(dt, t_final - t)
        k1 = flow(v)
        k2 = flow(v + 0.5 * h * k1)
        k3 = flow(v + 0.5 * h * k2)
        k4 = flow(v + h * k3)
        v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        v = 0.5 * (v + v.T)
        t += h
        if not np.all(np.isfinite(v)) or np.abs(v).max() > 1e12:
            raise IntegrationError(
                f"covariance integration blew up at t={t:.3e} "
                f"(step {k + 1}/{n_steps}); reduce dt")
    return v
