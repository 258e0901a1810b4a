"""Component-wise transformation between the left-handed medium and the
Klein step.

Each electromagnetic plane wave is paired with a spin-0 plane wave of the
same incidence angle whose transmitted-to-incident wavenumber ratio equals
``|n|``.  For a massless particle this gives ``|n| = (V - E)/E``, so a
fixed step height ``V`` is kept across a dispersive spectrum by assigning
each frequency the energy ``E(omega) = V / (1 - n(omega))``.

Only wavevectors (angles, fringe geometry) are matched.  Flux
coefficients agree only when the medium has ``mu = 1``; for the fitted
medium (``mu = -1.222``) the transmittances differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import C
from .errors import DomainError
from .kg_scatter import KleinStep, classify_regime
from .media import MediumSample, sample_medium

__all__ = [
    "MappingSpec",
    "index_to_potential",
    "potential_to_index",
    "counter_dispersive_energy",
    "equivalent_em_sample",
    "map_table",
]


@dataclass(frozen=True)
class MappingSpec:
    V: float
    center_energy: float
    m: float = 0.0

    def __post_init__(self):
        if not self.V > self.center_energy + self.m * C**2:
            raise DomainError("mapping needs a strong step: V > E_c + mc^2")

    @property
    def center_index(self):
        return potential_to_index(self.V, self.center_energy, self.m)


def index_to_potential(n, E, m=0.0) -> float:
    """Step height whose transmitted/incident wavenumber ratio is ``|n|``."""
    if not n < 0:
        raise DomainError(f"index must be negative, got {n!r}")
    mc2 = m * C**2
    if not E > mc2:
        raise DomainError("E must exceed m c^2")
    if m == 0:
        return E * (1 - n)
    return E + math.sqrt(n * n * (E - mc2) * (E + mc2) + mc2 * mc2)


def potential_to_index(V, E, m=0.0) -> float:
    """Negative index ``-|Q|/|K|`` equivalent to a strong step ``V``."""
    step = KleinStep(V, m, E)
    if classify_regime(step) != "strong":
        raise DomainError("potential_to_index is defined only for a strong step")
    if m == 0:
        return -(V - E) / E
    mc2 = step.rest_energy
    return -math.sqrt((V - E - mc2) * (V - E + mc2)) / math.sqrt((E - mc2) * (E + mc2))


def counter_dispersive_energy(model, V, omega) -> float:
    """Massless-particle energy for the component at ``omega`` that keeps
    the step height fixed at ``V``."""
    n = sample_medium(model, omega).n
    if isinstance(n, complex) or not n < 0:
        raise DomainError(f"omega={omega!r} is outside the negative-index band")
    return V / (1 - n)


def equivalent_em_sample(n, omega=1.0) -> MediumSample:
    """Formal ``mu = 1`` sample with signed index ``n``.

    Not a physical medium (eps = n^2 > 0 with n < 0); it exists so the
    electromagnetic formulas can be evaluated on the mapped branch.
    """
    return MediumSample(omega, n * n, 1.0, n, math.nan)


def map_table(model, V, omegas):
    """Rows ``(omega, n, E, V_back)`` for each angular frequency.

    ``V_back`` is the step height recovered from ``(n, E)`` and equals
    ``V`` up to rounding.
    """
    rows = []
    for omega in omegas:
        n = sample_medium(model, omega).n
        E = counter_dispersive_energy(model, V, omega)
        rows.append((omega, n, E, index_to_potential(n, E)))
    return rows
