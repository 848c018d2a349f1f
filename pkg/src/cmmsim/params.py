"""Physical parameter model for the driven cavity-magnon-mechanics system.

Unit conventions
----------------
All frequencies and rates inside the library are angular (rad/s).  User-facing
configuration quotes ordinary frequencies in Hz; the config loader multiplies
by 2*pi exactly once at the boundary (see :mod:`cmmsim.cli`).  Powers are in
watts, phases in radians, temperature in kelvin.

Both drive tones share one frequency ``omega_d = omega_a - delta_a``; it is
always derived, never user-supplied, so detunings are the only frequency
handles exposed.

Physical constants are the exact SI-2019 (CODATA 2018) values:

    h   = 6.62607015e-34 J s        (exact)
    k_B = 1.380649e-23  J/K         (exact)
    hbar = h / (2*pi)               = 1.0545718176461565e-34 J s
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

from .errors import ParameterError

TWO_PI = 2.0 * math.pi
PLANCK = 6.62607015e-34
HBAR = PLANCK / TWO_PI
BOLTZMANN = 1.380649e-23


@dataclass(frozen=True)
class PhysicalParams:
    """One complete system instance.  All rates/frequencies in rad/s.

    Attributes
    ----------
    omega_a, omega_b : float
        Cavity and mechanical resonance frequencies.
    kappa_a, kappa_m : float
        Cavity and magnon amplitude dissipation rates.
    gamma_b : float
        Mechanical damping rate.
    g_ma : float
        Magnon-microwave beamsplitter coupling rate.
    g_mb : float
        Single-magnon magnomechanical coupling rate.
    P_a, P_m : float
        Input powers of the cavity and magnon drives [W].
    delta_a : float
        Cavity-drive detuning (cavity frequency minus drive frequency).
    delta_m_tilde_target : float
        Target *effective* magnon-drive detuning, i.e. the bare detuning
        shifted by the static magnomechanical displacement.  The bare
        detuning is back-solved by the mean-field solver.
    T : float
        Bath temperature [K], shared by all three baths.
    theta_a, theta_m : float
        Drive phases [rad]; only the difference is physical.
    """

    omega_a: float
    omega_b: float
    kappa_a: float
    kappa_m: float
    gamma_b: float
    g_ma: float
    g_mb: float
    P_a: float
    P_m: float
    delta_a: float
    delta_m_tilde_target: float
    T: float
    theta_a: float = 0.0
    theta_m: float = 0.0

    @property
    def drive_frequency(self) -> float:
        """Shared drive frequency omega_d = omega_a - delta_a [rad/s]."""
        return self.omega_a - self.delta_a

    @property
    def delta_theta(self) -> float:
        """Drive phase difference theta_a - theta_m."""
        return self.theta_a - self.theta_m

    def drive_amplitudes(self) -> tuple[float, float]:
        """(eps_a, eps_m), both in 1/s, from the shared drive frequency."""
        wd = self.drive_frequency
        return (drive_amplitude(self.kappa_a, self.P_a, wd),
                drive_amplitude(self.kappa_m, self.P_m, wd))

    def occupations(self) -> "NoiseOccupations":
        """Thermal occupations of the three baths.

        The magnon bath is evaluated at the magnon frequency reconstructed
        from the effective detuning, ``delta_m_tilde_target + omega_d``;
        at millikelvin temperatures this choice is numerically irrelevant
        because both gigahertz occupations are ~1e-21.
        """
        wd = self.drive_frequency
        return NoiseOccupations(
            n_a=thermal_occupation(self.omega_a, self.T),
            n_m=thermal_occupation(self.delta_m_tilde_target + wd, self.T),
            n_b=thermal_occupation(self.omega_b, self.T),
        )

    def replace(self, **changes) -> "PhysicalParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class NoiseOccupations:
    """Mean thermal excitation numbers of the photon/magnon/phonon baths."""

    n_a: float
    n_m: float
    n_b: float


def thermal_occupation(omega: float, T: float) -> float:
    """Bose-Einstein occupation 1/(exp(hbar*omega/k_B*T) - 1).

    Returns exactly 0.0 at T = 0.  Raises ParameterError for omega <= 0
    (T < 0 is likewise rejected).
    """
    if omega <= 0.0:
        raise ParameterError([f"thermal_occupation: omega must be > 0, got {omega!r}"])
    if T < 0.0:
        raise ParameterError([f"thermal_occupation: T must be >= 0, got {T!r}"])
    if T == 0.0:
        return 0.0
    x = HBAR * omega / (BOLTZMANN * T)
    if x > 700.0:  # exp would overflow; occupation is below ~1e-304 anyway
        return 0.0
    return 1.0 / math.expm1(x)


def drive_amplitude(kappa: float, P: float, omega_d: float) -> float:
    """Drive amplitude sqrt(2*kappa*P / (hbar*omega_d)) in 1/s.

    Zero iff P = 0.  Scales exactly as sqrt(P).
    """
    if omega_d <= 0.0:
        raise ParameterError([f"drive_amplitude: omega_d must be > 0, got {omega_d!r}"])
    if kappa <= 0.0:
        raise ParameterError([f"drive_amplitude: kappa must be > 0, got {kappa!r}"])
    if P < 0.0:
        raise ParameterError([f"drive_amplitude: P must be >= 0, got {P!r}"])
    return math.sqrt(2.0 * kappa * P / (HBAR * omega_d))


_POSITIVE = ("omega_a", "omega_b", "kappa_a", "kappa_m", "gamma_b")
_NON_NEGATIVE = ("P_a", "P_m", "T", "g_ma", "g_mb")


def validate(params: PhysicalParams) -> PhysicalParams:
    """Check every type invariant; return ``params`` unchanged if all hold.

    Raises ParameterError carrying the *complete* list of violations,
    each naming the offending field and value.
    """
    violations = []
    for name in _POSITIVE:
        value = getattr(params, name)
        if not value > 0.0:
            violations.append(f"{name} must be > 0, got {value!r}")
    for name in _NON_NEGATIVE:
        value = getattr(params, name)
        if not value >= 0.0:
            violations.append(f"{name} must be >= 0, got {value!r}")
    for f in fields(params):
        value = getattr(params, f.name)
        if not math.isfinite(value):
            violations.append(f"{f.name} must be finite, got {value!r}")
    if not violations and not params.drive_frequency > 0.0:
        violations.append(
            "derived drive frequency omega_a - delta_a must be > 0, "
            f"got {params.drive_frequency!r}")
    if violations:
        raise ParameterError(violations)
    return params


def baseline_params(**overrides) -> PhysicalParams:
    """The experimentally-accessible baseline parameter set used throughout
    the shipped configs, demos and tests.

    Cavity at 10 GHz, mechanics at 10 MHz, megahertz-scale dissipation and
    magnon-microwave coupling, a sub-hertz single-magnon magnomechanical
    coupling (the strong magnon drive lifts it to an effective coupling of a
    few MHz), drives of 9 mW / 0.9 W at a common tone, 10 mK baths.  The
    default operating point sits at delta_a = -1.35 omega_b with effective
    magnon detuning +0.9 omega_b and drive phase difference pi/2, where the
    steady state is both stable and tripartite-entangled.
    """
    base = dict(
        omega_a=TWO_PI * 10e9,
        omega_b=TWO_PI * 10e6,
        kappa_a=TWO_PI * 1e6,
        kappa_m=TWO_PI * 1e6,
        gamma_b=TWO_PI * 100.0,
        g_ma=TWO_PI * 1e6,
        g_mb=TWO_PI * 0.28,
        P_a=9e-3,
        P_m=0.9,
        delta_a=-1.35 * TWO_PI * 10e6,
        delta_m_tilde_target=0.9 * TWO_PI * 10e6,
        T=10e-3,
        theta_a=math.pi / 2.0,
        theta_m=0.0,
    )
    base.update(overrides)
    return PhysicalParams(**base)
