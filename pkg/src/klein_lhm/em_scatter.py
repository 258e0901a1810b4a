"""TE plane-wave scattering from vacuum (z < 0) into a half-space (z > 0).

The electric field is polarized along y.  The refracted normal
wavenumber carries the handedness of the medium: it is negative for a
left-handed sample, so transmitted phase fronts move back toward the
interface while the energy flux moves away from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._interface import amplitude_coefficients, flux_coefficients
from .constants import C
from .errors import DomainError

__all__ = ["EmIncident", "EmScatterResult", "refract_em", "em_group_velocity"]


@dataclass(frozen=True)
class EmIncident:
    """Incident plane wave ``exp(i(K.r - omega t))`` in vacuum."""

    omega: float
    K: tuple[float, float]
    theta_i: float

    def __post_init__(self):
        if not self.omega > 0:
            raise DomainError("omega must be positive")
        # negative angles occur for off-axis components of near-normal beams
        if not abs(self.theta_i) < math.pi / 2:
            raise DomainError("theta_i must lie in (-pi/2, pi/2)")
        kx, kz = self.K
        if not kz > 0:
            raise DomainError("incident K_z must be positive")
        k0 = self.omega / C
        if abs(math.hypot(kx, kz) - k0) > 1e-12 * k0:
            raise DomainError("|K| must equal omega/c in vacuum")

    @classmethod
    def from_angle(cls, omega, theta_i):
        k0 = omega / C
        return cls(omega, (k0 * math.sin(theta_i), k0 * math.cos(theta_i)), theta_i)


@dataclass(frozen=True)
class EmScatterResult:
    K: tuple[float, float]
    Q: tuple[float, complex]
    K_reflect: tuple[float, float]
    tau: complex
    rho: complex
    T: float
    R: float
    sigma: int
    omega: float

    @property
    def evanescent(self):
        return isinstance(self.Q[1], complex)

    @property
    def regime(self):
        if self.evanescent:
            return "evanescent"
        return "negative-index" if self.sigma < 0 else "positive-index"


def refract_em(inc: EmIncident, med) -> EmScatterResult:
    """Scatter one TE plane wave off the interface with medium ``med``.

    ``med`` is a :class:`~klein_lhm.media.MediumSample` with real, nonzero
    ``n``.  A transmitted wave with ``|n| K < K_x`` is returned as
    evanescent (``Q_z = +i kappa``) with ``T = 0`` and ``R = 1``.
    """
    n, mu = med.n, med.mu
    if isinstance(n, complex) or isinstance(mu, complex) or n == 0:
        raise DomainError("refract_em needs a real, nonzero refractive index")
    kx, kz = inc.K
    sigma = 1 if n > 0 else -1
    arg = n * n * (kx * kx + kz * kz) - kx * kx
    a = mu * kz
    if arg > 0:
        qz = sigma * math.sqrt(arg)
        tau, rho = amplitude_coefficients(a, qz)
        T, R = flux_coefficients(a, qz, tau, rho)
    else:
        qz = 1j * math.sqrt(-arg)
        tau, rho = amplitude_coefficients(a, qz)
        T, R = 0.0, 1.0
    return EmScatterResult(
        K=(kx, kz),
        Q=(kx, qz),
        K_reflect=(kx, -kz),
        tau=tau,
        rho=rho,
        T=T,
        R=R,
        sigma=sigma,
        omega=inc.omega,
    )


def em_group_velocity(result: EmScatterResult, med) -> np.ndarray:
    """Group velocity ``(Q/|Q|) * sigma * c / n_g`` of the refracted wave, m/s."""
    if result.evanescent:
        raise DomainError("group velocity undefined for an evanescent wave")
    n_g = med.n_g
    if not (math.isfinite(n_g) and n_g > 0):
        raise DomainError(f"group index must be finite and positive, got {n_g!r}")
    q = np.array(result.Q, dtype=float)
    return q / np.linalg.norm(q) * (result.sigma * C / n_g)
