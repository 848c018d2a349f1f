"""Classical steady state of the driven cavity-magnon-mechanics system.

The mean-field equations close on the magnon amplitude once the effective
magnon detuning (bare detuning plus the static magnomechanical frequency
pull) is known.  Two solving modes are supported:

* effective targeting (default): the effective detuning is an *input*;
  the magnon equation is then linear, the displacement follows from
  |m_s|^2, and the bare detuning is back-solved.  No iteration.
* bare mode: the bare detuning is given, and |m_s|^2 must satisfy a cubic
  self-consistency condition.  The cubic is solved in closed form, each
  root polished by one Newton step, and the physical root selected by a
  16-step homotopy continued from the zero-coupling solution.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import NoSteadyStateError, SingularityError
from .params import PhysicalParams

_HOMOTOPY_STEPS = 16
_POLISH_TOL = 1e-14


@dataclass(frozen=True)
class MeanFieldState:
    """Self-consistent classical fixed point.

    ``p_s`` is exactly zero in any steady state; ``delta_m`` is the bare
    magnon detuning actually used and ``delta_m_tilde`` the effective one
    (they differ by the frequency pull g_mb*q_s).  ``root_multiplicity``
    counts the admissible roots of the self-consistency cubic the solver
    saw (1 whenever the state is unambiguous).
    """

    alpha_s: complex
    m_s: complex
    q_s: float
    p_s: float
    delta_m: float
    delta_m_tilde: float
    root_multiplicity: int = 1


def _magnon_numerator(params: PhysicalParams) -> complex:
    eps_a, eps_m = params.drive_amplitudes()
    return (-1j * params.g_ma * eps_a * cmath.exp(-1j * params.theta_a)
            + (1j * params.delta_a + params.kappa_a)
            * eps_m * cmath.exp(-1j * params.theta_m))


def _magnon_denominator(params: PhysicalParams, delta_m_tilde: float) -> complex:
    return ((1j * delta_m_tilde + params.kappa_m)
            * (1j * params.delta_a + params.kappa_a) + params.g_ma ** 2)


def _cavity_amplitude(params: PhysicalParams, m_s: complex) -> complex:
    eps_a, _ = params.drive_amplitudes()
    return ((eps_a * cmath.exp(-1j * params.theta_a) - 1j * params.g_ma * m_s)
            / (1j * params.delta_a + params.kappa_a))


def _denominator_scale(params: PhysicalParams, delta_m_tilde: float) -> float:
    return max(abs(delta_m_tilde * params.delta_a),
               params.kappa_m * params.kappa_a,
               params.g_ma ** 2)


def solve_steady_state(params: PhysicalParams,
                       bare_delta_m: float | None = None) -> MeanFieldState:
    """Solve the classical fixed point.

    With ``bare_delta_m=None`` the effective detuning is pinned to
    ``params.delta_m_tilde_target`` and the bare detuning is back-solved.
    Passing a bare detuning instead activates the cubic self-consistency
    mode with homotopy root selection.

    Raises NoSteadyStateError if the magnon response has no admissible
    solution (e.g. an exact pole of the linear response).
    """
    eps_a, eps_m = params.drive_amplitudes()
    if eps_a == 0.0 and eps_m == 0.0:
        delta_m_tilde = (params.delta_m_tilde_target if bare_delta_m is None
                         else bare_delta_m)
        return MeanFieldState(alpha_s=0j, m_s=0j, q_s=0.0, p_s=0.0,
                              delta_m=delta_m_tilde,
                              delta_m_tilde=delta_m_tilde)
    if bare_delta_m is None:
        return _solve_effective(params, params.delta_m_tilde_target)
    return _solve_bare(params, bare_delta_m)


def _solve_effective(params: PhysicalParams, delta_m_tilde: float) -> MeanFieldState:
    num = _magnon_numerator(params)
    den = _magnon_denominator(params, delta_m_tilde)
    if abs(den) < 1e-12 * _denominator_scale(params, delta_m_tilde):
        raise NoSteadyStateError(
            "magnon linear response is singular at the requested detunings")
    m_s = num / den
    q_s = -params.g_mb * abs(m_s) ** 2 / params.omega_b
    return MeanFieldState(
        alpha_s=_cavity_amplitude(params, m_s),
        m_s=m_s,
        q_s=q_s,
        p_s=0.0,
        delta_m=delta_m_tilde - params.g_mb * q_s,
        delta_m_tilde=delta_m_tilde,
    )


def _cubic_real_roots(a3: float, a2: float, a1: float, a0: float) -> list[float]:
    """Real roots of a3 x^3 + a2 x^2 + a1 x + a0 via the discriminant-based
    closed form (trigonometric/Cardano), no iteration."""
    b, c, d = a2 / a3, a1 / a3, a0 / a3
    p = c - b * b / 3.0
    q = 2.0 * b ** 3 / 27.0 - b * c / 3.0 + d
    shift = -b / 3.0
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc > 0.0:  # one real root
        s = math.sqrt(disc)
        t = math.copysign(abs(-q / 2.0 + s) ** (1.0 / 3.0), -q / 2.0 + s)
        u = math.copysign(abs(-q / 2.0 - s) ** (1.0 / 3.0), -q / 2.0 - s)
        return [t + u + shift]
    if p == 0.0:  # triple root
        return [shift]
    # three real roots (possibly degenerate)
    r = 2.0 * math.sqrt(-p / 3.0)
    arg = max(-1.0, min(1.0, 3.0 * q / (p * r)))
    phi = math.acos(arg)
    return sorted(r * math.cos((phi - turn) / 3.0) + shift
                  for turn in (0.0, 2.0 * math.pi, 4.0 * math.pi))


def _self_consistency_roots(params: PhysicalParams, delta_m: float,
                            g_mb: float) -> list[float]:
    """Admissible (real, non-negative) roots u = |m_s|^2 of
    u * |den(u)|^2 = |num|^2 at coupling ``g_mb``.

    The cubic is solved in a normalized variable w = u / u_ref with
    u_ref the zero-coupling solution, which keeps coefficients O(1).
    """
    num2 = abs(_magnon_numerator(params)) ** 2
    c = 1j * params.delta_a + params.kappa_a
    d0 = (1j * delta_m + params.kappa_m) * c + params.g_ma ** 2
    beta = g_mb ** 2 / params.omega_b
    if abs(d0) == 0.0 and beta == 0.0:
        raise NoSteadyStateError(
            "magnon linear response is singular at the requested detunings")
    if beta == 0.0:
        return [num2 / abs(d0) ** 2]
    u_ref = num2 / abs(d0) ** 2 if abs(d0) > 0.0 else (num2 / beta ** 2) ** (1. / 3.)
    if u_ref == 0.0:
        return [0.0]
    # u|d0 - i*beta*c*u|^2 - num2 = 0, expanded in powers of u
    k3 = beta ** 2 * abs(c) ** 2
    k2 = 2.0 * beta * (c * d0.conjugate()).imag
    k1 = abs(d0) ** 2
    # normalize: u = u_ref * w
    roots = _cubic_real_roots(k3 * u_ref ** 3, k2 * u_ref ** 2, k1 * u_ref, -num2)
    out = []
    for w in roots:
        u = w * u_ref
        if u < 0.0 and u > -1e-12 * u_ref:
            u = 0.0
        if u < 0.0:
            continue
        # one Newton polish step on f(u) = u|den(u)|^2 - num2
        for _ in range(3):
            f = u * (k1 + k2 * u + k3 * u * u) - num2
            df = k1 + 2.0 * k2 * u + 3.0 * k3 * u * u
            if df == 0.0:
                break
            step = f / df
            u_new = u - step
            if u_new < 0.0:
                u_new = 0.0
            if abs(u_new - u) <= _POLISH_TOL * max(u, u_ref):
                u = u_new
                break
            u = u_new
        out.append(u)
    # deduplicate roots that collapsed under polishing
    out.sort()
    dedup: list[float] = []
    for u in out:
        if not dedup or abs(u - dedup[-1]) > 1e-9 * max(u, u_ref):
            dedup.append(u)
    if not dedup:
        raise NoSteadyStateError(
            "self-consistency cubic has no admissible non-negative root")
    return dedup


def _solve_bare(params: PhysicalParams, delta_m: float) -> MeanFieldState:
    # homotopy in the coupling, continued from the zero-coupling solution
    u = _self_consistency_roots(params, delta_m, 0.0)[0]
    roots = [u]
    for k in range(1, _HOMOTOPY_STEPS + 1):
        g_k = params.g_mb * k / _HOMOTOPY_STEPS
        roots = _self_consistency_roots(params, delta_m, g_k)
        u = min(roots, key=lambda r: abs(r - u))
    # tie-break: smallest admissible root wins if continuation is ambiguous
    ambiguous = [r for r in roots if abs(r - u) <= 1e-9 * max(u, roots[-1])]
    if len(ambiguous) > 1:
        u = min(ambiguous)
    q_s = -params.g_mb * u / params.omega_b
    delta_m_tilde = delta_m + params.g_mb * q_s
    den = _magnon_denominator(params, delta_m_tilde)
    if abs(den) < 1e-12 * _denominator_scale(params, delta_m_tilde):
        raise NoSteadyStateError(
            "magnon linear response is singular at the self-consistent detuning")
    m_s = _magnon_numerator(params) / den
    return MeanFieldState(
        alpha_s=_cavity_amplitude(params, m_s),
        m_s=m_s,
        q_s=q_s,
        p_s=0.0,
        delta_m=delta_m,
        delta_m_tilde=delta_m_tilde,
        root_multiplicity=len(roots),
    )


def magnon_amplitude_approx(params: PhysicalParams,
                            delta_m_tilde: float) -> complex:
    """Large-detuning approximation of the magnon amplitude,
    (-i g_ma eps_a e^{-i theta_a} + i delta_a eps_m e^{-i theta_m})
    / (g_ma^2 - delta_m_tilde * delta_a).

    Valid when both detunings dominate the linewidths.  Raises
    SingularityError at the pole g_ma^2 = delta_m_tilde * delta_a.
    """
    eps_a, eps_m = params.drive_amplitudes()
    den = params.g_ma ** 2 - delta_m_tilde * params.delta_a
    scale = max(params.g_ma ** 2, abs(delta_m_tilde * params.delta_a))
    if scale == 0.0 or abs(den) < 1e-12 * scale:
        raise SingularityError(
            "approximate magnon response pole: g_ma^2 = delta_m_tilde * delta_a")
    num = (-1j * params.g_ma * eps_a * cmath.exp(-1j * params.theta_a)
           + 1j * params.delta_a * eps_m * cmath.exp(-1j * params.theta_m))
    return num / den


def classical_rhs(params: PhysicalParams, alpha: complex, m: complex,
                  q: float, p: float, delta_m: float):
    """Right-hand side of the nonlinear classical flow at a given point.

    Returns (dalpha/dt, dm/dt, dq/dt, dp/dt).  The drift matrix of the
    linearized fluctuation dynamics is the Jacobian of this flow mapped to
    quadratures.
    """
    eps_a, eps_m = params.drive_amplitudes()
    dalpha = (-(1j * params.delta_a + params.kappa_a) * alpha
              - 1j * params.g_ma * m
              + eps_a * cmath.exp(-1j * params.theta_a))
    dm = (-(1j * delta_m + params.kappa_m) * m
          - 1j * params.g_ma * alpha
          - 1j * params.g_mb * m * q
          + eps_m * cmath.exp(-1j * params.theta_m))
    dq = params.omega_b * p
    dp = (-params.omega_b * q - params.g_mb * abs(m) ** 2
          - params.gamma_b * p)
    return dalpha, dm, dq, dp


def steady_state_residual(params: PhysicalParams,
                          state: MeanFieldState) -> float:
    """Euclidean norm of the classical flow at ``state``, normalized by the
    drive-amplitude scale.  Zero iff the state is an exact fixed point."""
    dalpha, dm, dq, dp = classical_rhs(
        params, state.alpha_s, state.m_s, state.q_s, state.p_s, state.delta_m)
    eps_a, eps_m = params.drive_amplitudes()
    scale = max(eps_a, eps_m)
    if scale == 0.0:
        scale = 1.0
    return math.sqrt(abs(dalpha) ** 2 + abs(dm) ** 2 + dq ** 2 + dp ** 2) / scale
