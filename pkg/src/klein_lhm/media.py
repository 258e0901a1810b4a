"""Dispersive effective-medium model for the left-handed half-space.

Permittivity follows a Drude wire response and permeability a Lorentz
split-ring response::

    eps(w) = 1 - wp^2 / (w (w + i ge))
    mu(w)  = 1 - F w^2 / (w^2 - w0^2 + i gm w)

Both loss rates default to zero, in which case every quantity is real
away from the magnetic resonance and the refractive index takes the
sign rule n < 0 exactly when eps < 0 and mu < 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ResonanceError

__all__ = [
    "MediumDispersion",
    "ConstantMedium",
    "MediumSample",
    "sample_medium",
    "group_index",
    "DEFAULT_CENTER_FREQUENCY",
]

#: Ordinary (not angular) center frequency of the reference scenario, Hz.
DEFAULT_CENTER_FREQUENCY = 5e9


@dataclass(frozen=True)
class MediumDispersion:
    """Drude/Lorentz left-handed medium.

    Parameters
    ----------
    plasma_frequency : float
        Drude pole of the permittivity, rad/s.
    magnetic_resonance_frequency : float
        Lorentz pole of the permeability, rad/s.
    magnetic_fill_factor : float
        Oscillator strength F of the split rings, 0 < F < 1.
    loss_rates : tuple of float
        Electric and magnetic damping rates, rad/s.
    """

    plasma_frequency: float
    magnetic_resonance_frequency: float
    magnetic_fill_factor: float
    loss_rates: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if not self.plasma_frequency > 0:
            raise DomainError("plasma_frequency must be positive")
        if not self.magnetic_resonance_frequency > 0:
            raise DomainError("magnetic_resonance_frequency must be positive")
        if not 0 < self.magnetic_fill_factor < 1:
            raise DomainError("magnetic_fill_factor must lie strictly in (0, 1)")
        if len(self.loss_rates) != 2 or min(self.loss_rates) < 0:
            raise DomainError("loss_rates must be two non-negative rates")

    @classmethod
    def fitted(
        cls,
        center_frequency=DEFAULT_CENTER_FREQUENCY,
        epsilon=-4.76,
        mu=-1.222,
        fill_factor=0.5,
    ):
        """Pin the model so that eps and mu take the given values at
        ``2*pi*center_frequency``.

        The plasma frequency comes out as ``w_c*sqrt(1 - epsilon)``
        (2.4 w_c for the defaults) and the resonance from solving the
        Lorentz form for ``w0`` at fixed ``fill_factor``.
        """
        if not (epsilon < 1 and mu < 1):
            raise DomainError("target epsilon and mu must both be below 1")
        if fill_factor >= 1 - mu:
            raise DomainError("fill_factor too large to reach the target mu")
        omega_c = 2 * math.pi * center_frequency
        omega_p = omega_c * math.sqrt(1 - epsilon)
        omega_0 = omega_c * math.sqrt(1 - fill_factor / (1 - mu))
        return cls(omega_p, omega_0, fill_factor)

    @property
    def lossless(self):
        return self.loss_rates[0] == 0 and self.loss_rates[1] == 0

    def permittivity(self, omega):
        ge = self.loss_rates[0]
        if ge == 0:
            return 1 - self.plasma_frequency**2 / omega**2
        return 1 - self.plasma_frequency**2 / (omega * (omega + 1j * ge))

    def permeability(self, omega):
        w0, gm = self.magnetic_resonance_frequency, self.loss_rates[1]
        if gm == 0:
            if omega == w0:
                raise ResonanceError(f"lossless permeability is singular at omega={omega!r}")
            return 1 - self.magnetic_fill_factor * omega**2 / (omega**2 - w0**2)
        return 1 - self.magnetic_fill_factor * omega**2 / (omega**2 - w0**2 + 1j * gm * omega)

    def permittivity_derivative(self, omega):
        # lossless only
        return 2 * self.plasma_frequency**2 / omega**3

    def permeability_derivative(self, omega):
        w0 = self.magnetic_resonance_frequency
        return 2 * self.magnetic_fill_factor * omega * w0**2 / (omega**2 - w0**2) ** 2

    def negative_index_band(self):
        """Lossless band ``(lo, hi)`` where eps < 0 and mu < 0."""
        w0 = self.magnetic_resonance_frequency
        mu_zero = w0 / math.sqrt(1 - self.magnetic_fill_factor)
        lo, hi = w0, min(mu_zero, self.plasma_frequency)
        if hi <= lo:
            raise DomainError("model has no negative-index band")
        return lo, hi


@dataclass(frozen=True)
class ConstantMedium:
    """Nondispersive medium with fixed relative eps and mu."""

    epsilon: float
    mu: float
    lossless = True

    @classmethod
    def from_index(cls, n, mu):
        """Medium with index ``n`` and permeability ``mu``; the sign of
        ``n`` must agree with the handedness implied by ``mu``."""
        if n == 0 or mu == 0:
            raise DomainError("n and mu must be nonzero")
        if (n < 0) != (mu < 0):
            raise DomainError("negative n requires negative mu (and vice versa)")
        return cls(n * n / mu, mu)

    def permittivity(self, omega):
        return self.epsilon

    def permeability(self, omega):
        return self.mu

    def permittivity_derivative(self, omega):
        return 0.0

    def permeability_derivative(self, omega):
        return 0.0


@dataclass(frozen=True)
class MediumSample:
    """Material constants at one angular frequency.

    ``n`` is real and signed in a lossless passband, purely imaginary in
    a lossless stopband and complex (with ``Im n >= 0``) for lossy
    models.  ``n_g`` is NaN wherever the group index is undefined.
    """

    omega: float
    epsilon: complex | float
    mu: complex | float
    n: complex | float
    n_g: float

    @property
    def propagating(self):
        return isinstance(self.n, float) and self.n != 0


def _real_index(eps, mu):
    product = eps * mu
    if product <= 0:
        return None
    root = math.sqrt(product)
    return -root if (eps < 0 and mu < 0) else root


def sample_medium(model, omega) -> MediumSample:
    """Evaluate eps, mu, n and n_g of ``model`` at ``omega`` (rad/s)."""
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    eps = model.permittivity(omega)
    mu = model.permeability(omega)
    if not model.lossless:
        n = complex(eps * mu) ** 0.5
        if n.imag < 0:
            n = -n
        return MediumSample(omega, eps, mu, n, math.nan)
    eps, mu = float(eps), float(mu)
    n = _real_index(eps, mu)
    if n is None:
        n = 1j * math.sqrt(-eps * mu)
        return MediumSample(omega, eps, mu, n, math.nan)
    return MediumSample(omega, eps, mu, n, _group_index(model, omega, eps, mu, n))


def _group_index(model, omega, eps, mu, n):
    # n^2 = eps*mu  =>  dn/dw = (eps' mu + eps mu') / (2 n), valid on both branches
    deps = model.permittivity_derivative(omega)
    dmu = model.permeability_derivative(omega)
    return n + omega * (deps * mu + eps * dmu) / (2 * n)


def group_index(model, omega) -> float:
    """Group index ``d(omega*n)/d omega`` from the closed-form model.

    Raises
    ------
    DomainError
        For lossy models or when ``omega`` lies in a stopband.
    """
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    if not model.lossless:
        raise DomainError("group index is only defined for the lossless model")
    eps = float(model.permittivity(omega))
    mu = float(model.permeability(omega))
    n = _real_index(eps, mu)
    if n is None:
        raise DomainError(f"omega={omega!r} is outside every passband")
    return _group_index(model, omega, eps, mu, n)
