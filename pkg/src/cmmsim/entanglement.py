"""Gaussian entanglement measures on 6x6 covariance matrices.

Modes are labeled 'a' (cavity), 'm' (magnon), 'b' (mechanics) in that
order; quadratures interleave as (x_1, p_1, x_2, p_2, ...) with vacuum
variance 1/2.  Logarithmic negativity kinks at 2*nu = 1, the contangle is
its square, and the residual contangle of pivot r is
E^2(r|st) - E^2(r|s) - E^2(r|t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError

MODES = ("a", "m", "b")

#: pairing tolerance for +/- symplectic eigenvalue pairs, relative
PAIRING_TOL = 1e-9

#: slack on monogamy margins and physicality eigenvalues, absolute
MONOGAMY_SLACK = 1e-10


@dataclass(frozen=True)
class Partition:
    """One-vs-one or one-vs-two bipartition of {a, m, b}."""

    side_u: str
    side_v: tuple[str, ...]

    def __post_init__(self):
        sides = (self.side_u, *self.side_v)
        if self.side_u in self.side_v:
            raise ValueError(f"side_u {self.side_u!r} repeated in side_v")
        if len(set(sides)) != len(sides) or not set(sides) <= set(MODES):
            raise ValueError(f"invalid partition {sides!r}; modes are {MODES}")
        if len(self.side_v) not in (1, 2):
            raise ValueError("side_v must contain one or two modes")


@dataclass(frozen=True)
class EntanglementReport:
    """All pairwise and one-vs-two log-negativities, the three residual
    contangles, their minimum, and the monogamy/stability flags."""

    en_am: float
    en_ab: float
    en_mb: float
    en_a_mb: float
    en_m_ab: float
    en_b_am: float
    residual_a: float
    residual_m: float
    residual_b: float
    r_min: float
    monogamy_margins: tuple[float, float, float]
    monogamy_ok: bool
    stable: bool = True


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal symplectic form, n copies of [[0, 1], [-1, 0]]."""
    omega = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


def _mode_positions(v: np.ndarray, modes: tuple[str, ...]) -> dict[str, int]:
    if v.shape[0] != 2 * len(modes) or v.shape[0] != v.shape[1]:
        raise ValueError(
            f"matrix shape {v.shape} does not match modes {modes!r}")
    return {label: k for k, label in enumerate(modes)}


def reduce_cm(v: np.ndarray, modes: tuple[str, str]) -> np.ndarray:
    """4x4 principal submatrix keeping two modes of a 6x6 matrix.

    The output preserves the original quadrature order regardless of the
    order the pair is given in.  Duplicate mode labels are rejected.
    """
    if len(modes) != 2 or modes[0] == modes[1]:
        raise ValueError(f"need two distinct modes, got {modes!r}")
    pos = _mode_positions(v, MODES)
    keep = sorted(pos[m] for m in modes)
    idx = [i for k in keep for i in (2 * k, 2 * k + 1)]
    return v[np.ix_(idx, idx)]


def partial_transpose(v: np.ndarray, transposed_mode: str,
                      modes: tuple[str, ...] = MODES) -> np.ndarray:
    """Momentum-sign flip of one mode: P V P with P diagonal, -1 at the
    transposed mode's momentum quadrature.  ``modes`` lists the labels
    present in ``v`` in matrix order (defaults to the full three-mode set).
    Applying the operation twice returns ``v`` exactly.
    """
    pos = _mode_positions(v, modes)
    if transposed_mode not in pos:
        raise ValueError(
            f"mode {transposed_mode!r} not present in {modes!r}")
    signs = np.ones(v.shape[0])
    signs[2 * pos[transposed_mode] + 1] = -1.0
    return v * np.outer(signs, signs)


def symplectic_eigenvalues(v: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a symmetric positive-definite 4x4 or 6x6
    matrix: the n values nu such that Omega V has eigenvalues +/- i nu.

    Returned ascending.  Raises NumericalError if the spectrum does not
    pair up to PAIRING_TOL (input not symmetric/physical enough).
    """
    v = np.asarray(v, dtype=float)
    if v.shape not in ((4, 4), (6, 6)):
        raise ValueError(f"expected a 4x4 or 6x6 matrix, got {v.shape}")
    asym = np.abs(v - v.T).max()
    scale = max(np.abs(v).max(), 1.0)
    if asym > 1e-8 * scale:
        raise NumericalError(f"matrix is not symmetric: |V - V^T| = {asym:.3e}")
    n = v.shape[0] // 2
    ev = np.linalg.eigvals(symplectic_form(n) @ v)
    order = np.argsort(ev.imag)
    neg = ev[order[:n]]        # imaginary parts ascending: n negatives first
    pos = ev[order[:n - 1:-1]]  # then n positives, matched largest-to-largest
    nus_pos = np.sort(pos.imag)
    nus_neg = np.sort(-neg.imag)
    ref = max(float(np.abs(ev).max()), 1e-300)
    mismatch = float(np.abs(nus_pos - nus_neg).max()) / ref
    off_axis = float(np.abs(ev.real).max()) / ref
    if mismatch > PAIRING_TOL or off_axis > PAIRING_TOL:
        raise NumericalError(
            "symplectic spectrum fails +/- pairing "
            f"(mismatch {mismatch:.2e}, real parts {off_axis:.2e})")
    return 0.5 * (nus_pos + nus_neg)


def _min_pt_symplectic_eigenvalue(v: np.ndarray, partition: Partition) -> float:
    if len(partition.side_v) == 1:
        kept = (partition.side_u, partition.side_v[0])
        v_red = reduce_cm(v, kept)
        ordered = tuple(m for m in MODES if m in kept)
        v_pt = partial_transpose(v_red, partition.side_u, ordered)
        return float(symplectic_eigenvalues(v_pt)[0])
    v_pt = partial_transpose(v, partition.side_u, MODES)
    nus = symplectic_eigenvalues(v_pt)
    # at most one symplectic eigenvalue of a one-vs-two partial
    # transposition can drop below vacuum; guard that assumption
    below = int(np.sum(nus < 0.5 - MONOGAMY_SLACK))
    if below > 1:
        raise NumericalError(
            f"{below} symplectic eigenvalues below vacuum after a 1|2 "
            "partial transposition; covariance matrix is not physical")
    return float(nus[0])


def log_negativity(v: np.ndarray, partition: Partition) -> float:
    """Logarithmic negativity max[0, -ln(2 nu_min)] across ``partition``,
    with nu_min the smallest symplectic eigenvalue after partially
    transposing ``side_u``.  Exactly 0.0 for separable-by-PPT states."""
    nu = _min_pt_symplectic_eigenvalue(v, partition)
    if 2.0 * nu >= 1.0:
        return 0.0
    return -math.log(2.0 * nu)


def contangle(v: np.ndarray, partition: Partition) -> float:
    """Squared logarithmic negativity."""
    return log_negativity(v, partition) ** 2


def residual_contangle(v: np.ndarray, pivot: str) -> float:
    """Contangle of pivot vs the rest minus both pairwise contangles."""
    s, t = (m for m in MODES if m != pivot)
    return (contangle(v, Partition(pivot, (s, t)))
            - contangle(v, Partition(pivot, (s,)))
            - contangle(v, Partition(pivot, (t,))))


def min_residual_contangle(v: np.ndarray) -> float:
    """Minimum residual contangle over the three pivots.

    The pairwise terms are symmetric in the two non-pivot modes, so the
    minimum over mode permutations reduces to the minimum over pivots.
    A strictly positive value certifies genuine tripartite entanglement.
    """
    return min(residual_contangle(v, r) for r in MODES)


def check_monogamy(v: np.ndarray):
    """Residual-contangle margins for all pivots.

    Returns ``(flags, margins)``: per-pivot booleans
    margin >= -MONOGAMY_SLACK, and the margins themselves.
    """
    margins = tuple(residual_contangle(v, r) for r in MODES)
    flags = tuple(m >= -MONOGAMY_SLACK for m in margins)
    return flags, margins


def check_physicality(v: np.ndarray):
    """Uncertainty-principle test: V + (i/2) Omega >= 0.

    Returns ``(flag, min_eigenvalue)`` of the Hermitian matrix
    V + (i/2) Omega; the flag allows MONOGAMY_SLACK of negative slack.
    """
    v = np.asarray(v, dtype=float)
    n = v.shape[0] // 2
    herm = v + 0.5j * symplectic_form(n)
    min_eig = float(np.linalg.eigvalsh(herm)[0])
    return min_eig >= -MONOGAMY_SLACK, min_eig


def entanglement_report(v: np.ndarray, stable: bool = True) -> EntanglementReport:
    """Evaluate every measure reported by the sweep engine on one matrix."""
    en_pairs = {
        (u, w): log_negativity(v, Partition(u, (w,)))
        for u, w in (("a", "m"), ("a", "b"), ("m", "b"))
    }
    en_one_two = {
        u: log_negativity(v, Partition(u, tuple(m for m in MODES if m != u)))
        for u in MODES
    }
    residuals = {}
    for u in MODES:
        s, t = (m for m in MODES if m != u)
        pair_s = en_pairs.get((u, s), en_pairs.get((s, u)))
        pair_t = en_pairs.get((u, t), en_pairs.get((t, u)))
        residuals[u] = en_one_two[u] ** 2 - pair_s ** 2 - pair_t ** 2
    margins = (residuals["a"], residuals["m"], residuals["b"])
    return EntanglementReport(
        en_am=en_pairs[("a", "m")],
        en_ab=en_pairs[("a", "b")],
        en_mb=en_pairs[("m", "b")],
        en_a_mb=en_one_two["a"],
        en_m_ab=en_one_two["m"],
        en_b_am=en_one_two["b"],
        residual_a=residuals["a"],
        residual_m=residuals["m"],
        residual_b=residuals["b"],
        r_min=min(margins),
        monogamy_margins=margins,
        monogamy_ok=all(m >= -MONOGAMY_SLACK for m in margins),
        stable=stable,
    )
