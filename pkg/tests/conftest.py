"""Shared fixtures and generators for the test suite."""

import numpy as np
import pytest

from cmmsim import baseline_params


@pytest.fixture
def base():
    """Calibrated baseline parameter set (entangled operating point)."""
    return baseline_params()


def haar_unitary(rng, n):
    z = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def orthogonal_symplectic(rng, n_modes):
    """Haar-random orthogonal symplectic matrix (passive transformation),
    interleaved (x1, p1, x2, p2, ...) quadrature ordering."""
    u = haar_unitary(rng, n_modes)
    x, y = u.real, u.imag
    s_xxpp = np.block([[x, -y], [y, x]])
    perm = np.empty(2 * n_modes, dtype=int)
    perm[0::2] = np.arange(n_modes)
    perm[1::2] = np.arange(n_modes) + n_modes
    return s_xxpp[np.ix_(perm, perm)]


def random_symplectic(rng, n_modes, squeeze_max=1.0):
    """Random symplectic via Euler decomposition: passive, squeeze, passive."""
    r = rng.uniform(-squeeze_max, squeeze_max, n_modes)
    z = np.diag(np.repeat(np.exp(r), 2) ** np.tile([1.0, -1.0], n_modes))
    return orthogonal_symplectic(rng, n_modes) @ z @ orthogonal_symplectic(rng, n_modes)


def random_physical_cm(rng, n_modes=3, nu_max=3.0, squeeze_max=1.0):
    """Random physical covariance matrix: random symplectic conjugation of a
    random thermal Williamson form (all symplectic eigenvalues >= 1/2)."""
    nus = rng.uniform(0.5, nu_max, n_modes)
    s = random_symplectic(rng, n_modes, squeeze_max)
    return s @ np.diag(np.repeat(nus, 2)) @ s.T


def tmsv_cm(r):
    """Two-mode squeezed vacuum covariance matrix, vacuum variance 1/2."""
    c, s = np.cosh(2.0 * r), np.sinh(2.0 * r)
    return 0.5 * np.array([
        [c, 0.0, s, 0.0],
        [0.0, c, 0.0, -s],
        [s, 0.0, c, 0.0],
        [0.0, -s, 0.0, c],
    ])


def embed_with_vacuum(v4):
    """Place a two-mode matrix on modes (a, m) with mode b in vacuum."""
    v6 = np.eye(6) * 0.5
    v6[:4, :4] = v4
    return v6


def single_mode_rotation(phi, mode, n_modes=3):
    """Symplectic rotation of one mode's quadrature plane."""
    s = np.eye(2 * n_modes)
    c, sn = np.cos(phi), np.sin(phi)
    k = 2 * mode
    s[k:k + 2, k:k + 2] = [[c, sn], [-sn, c]]
    return s
