"""Spin-0 (Klein-Gordon) plane-wave scattering at a 2D potential step.

The potential is 0 for z < 0 and V for z > 0.  Energies are in joules,
wavevectors in rad/m.  On the transmitted side the dispersion is
``(c hbar Q)^2 = (E - V)^2 - (m c^2)^2``; above the strong threshold
``V > E + mc^2`` the transmitted wave rides the lower branch, whose group
velocity ``c^2 hbar Q / (E - V)`` is antiparallel to Q.  Causality then
forces ``Q_z < 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._interface import amplitude_coefficients, flux_coefficients
from .constants import C, HBAR, uev_to_joule
from .errors import DomainError, RegimeBoundaryError

__all__ = [
    "KleinStep",
    "KgIncident",
    "KgScatterResult",
    "REGIMES",
    "classify_regime",
    "excess_potential",
    "normal_energy_sq_direct",
    "normal_energy_sq_excess",
    "refract_kg",
    "kg_group_velocity",
    "evanescence_threshold",
    "probability_current",
]

CHBAR = C * HBAR

REGIMES = (
    "weak",
    "weak-evanescent",
    "intermediate",
    "strong-propagating",
    "strong-evanescent",
)


@dataclass(frozen=True)
class KleinStep:
    """Step height ``V`` (J), particle mass ``m`` (kg) and incident energy ``E`` (J)."""

    V: float
    m: float
    E: float

    def __post_init__(self):
        if self.m < 0:
            raise DomainError("mass must be non-negative")
        if not self.V >= 0:
            raise DomainError("V must be non-negative")
        if not self.E > self.rest_energy:
            raise DomainError("E must exceed m c^2 for a propagating incident particle")

    @classmethod
    def from_uev(cls, E, V, m=0.0):
        return cls(uev_to_joule(V), m, uev_to_joule(E))

    @property
    def rest_energy(self):
        return self.m * C**2

    @property
    def incident_wavenumber(self):
        mc2 = self.rest_energy
        return math.sqrt((self.E - mc2) * (self.E + mc2)) / CHBAR


@dataclass(frozen=True)
class KgIncident:
    """Incident positive-energy plane wave ``exp(i(K.r - E t/hbar))``."""

    K: tuple[float, float]
    theta_i: float

    def __post_init__(self):
        # negative angles occur for off-axis components of near-normal beams
        if not abs(self.theta_i) < math.pi / 2:
            raise DomainError("theta_i must lie in (-pi/2, pi/2)")
        if not self.K[1] > 0:
            raise DomainError("incident K_z must be positive")

    @classmethod
    def from_angle(cls, step: KleinStep, theta_i):
        k = step.incident_wavenumber
        return cls((k * math.sin(theta_i), k * math.cos(theta_i)), theta_i)


@dataclass(frozen=True)
class KgScatterResult:
    K: tuple[float, float]
    Q: tuple[float, complex]
    K_reflect: tuple[float, float]
    tau: complex
    rho: complex
    T: float
    R: float
    regime: str
    omega: float

    @property
    def evanescent(self):
        return isinstance(self.Q[1], complex)


def classify_regime(step: KleinStep) -> str:
    """'weak' (V < E - mc^2), 'intermediate' (E - mc^2 < V < E + mc^2)
    or 'strong' (V > E + mc^2)."""
    mc2 = step.rest_energy
    lo, hi = step.E - mc2, step.E + mc2
    if step.V == lo or step.V == hi:
        raise RegimeBoundaryError(f"V={step.V!r} J sits on a regime boundary")
    if step.V < lo:
        return "weak"
    if step.V < hi:
        return "intermediate"
    return "strong"


def excess_potential(step: KleinStep) -> float:
    """Margin ``V - E - mc^2`` above the strong-step threshold, J."""
    return step.V - step.E - step.rest_energy


def normal_energy_sq_direct(step: KleinStep, K) -> float:
    """``(c hbar Q_z)^2`` written with the incident normal wavenumber."""
    kz = K[1]
    return (CHBAR * kz) ** 2 - 2 * step.E * step.V + step.V**2


def normal_energy_sq_excess(step: KleinStep, kx) -> float:
    """``(c hbar Q_z)^2`` written with the excess potential and K_x."""
    dv = excess_potential(step)
    return 2 * step.rest_energy * dv + dv**2 - (CHBAR * kx) ** 2


def evanescence_threshold(m, kx) -> float:
    """Excess potential below which a strong-step wave is still damped, J.

    Equal to ``-mc^2 + sqrt((c hbar K_x)^2 + (mc^2)^2)``, evaluated in a
    cancellation-free form.
    """
    if kx < 0:
        raise DomainError("K_x must be non-negative")
    mc2 = m * C**2
    p = CHBAR * kx
    if p == 0:
        return 0.0
    return p * p / (mc2 + math.hypot(p, mc2))


def refract_kg(step: KleinStep, inc: KgIncident) -> KgScatterResult:
    """Scatter one plane wave off the step and classify the outcome.

    Raises
    ------
    DomainError
        If ``inc`` does not lie on the free dispersion shell of ``step``.
    InterfacePoleError
        If ``K_z + Q_z`` vanishes.
    """
    kx, kz = inc.K
    shell = step.E**2 - step.rest_energy**2
    if abs(CHBAR**2 * (kx * kx + kz * kz) - shell) > 1e-12 * shell:
        raise DomainError("incident wavevector is off the free-particle energy shell")
    kind = classify_regime(step)
    qz2 = normal_energy_sq_direct(step, inc.K) / CHBAR**2
    if qz2 > 0:
        qz = math.sqrt(qz2)
        if kind == "strong":
            qz = -qz
            kind = "strong-propagating"
        tau, rho = amplitude_coefficients(kz, qz)
        T, R = flux_coefficients(kz, qz, tau, rho)
    else:
        qz = 1j * math.sqrt(-qz2)
        if kind != "intermediate":
            kind += "-evanescent"
        tau, rho = amplitude_coefficients(kz, qz)
        T, R = 0.0, 1.0
    return KgScatterResult(
        K=(kx, kz),
        Q=(kx, qz),
        K_reflect=(kx, -kz),
        tau=tau,
        rho=rho,
        T=T,
        R=R,
        regime=kind,
        omega=step.E / HBAR,
    )


def kg_group_velocity(step: KleinStep, Q) -> np.ndarray:
    """Transmitted-side group velocity ``c^2 hbar Q / (E - V)``, m/s."""
    q = np.asarray(Q)
    if np.iscomplexobj(q):
        if np.any(q.imag != 0):
            raise DomainError("group velocity needs a real wavevector")
        q = q.real
    gap = step.E - step.V
    if gap == 0:
        raise DomainError("group velocity is singular at E = V")
    return C**2 * HBAR * q.astype(float) / gap


def probability_current(psi, grad_psi, m=0.0):
    """Current ``(1/2im)(psi* grad psi - psi grad psi*)``.

    ``grad_psi`` carries the spatial components on its last axis.  For
    ``m > 0`` the result is scaled by ``hbar/m`` (SI units, m/s times
    density); for ``m == 0`` the bare ``Im(psi* grad psi)`` is returned.
    Transmission and reflection are ratios of currents, so the choice of
    prefactor never changes them.
    """
    psi = np.asarray(psi)
    grad = np.asarray(grad_psi)
    j = np.imag(np.conj(psi)[..., None] * grad)
    if m > 0:
        j = j * (HBAR / m)
    return j
