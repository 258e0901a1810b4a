"""Gaussian beams as finite angular spectra, and the total field they
produce at a planar interface.

A beam is a weighted set of plane waves.  Every component is scattered
independently, then the field is summed on a rectangular (x, z) grid::

    z < 0 :  sum_j w_j e^{-i w_j t} (e^{i K_j.r} + rho_j e^{i K'_j.r})
    z >= 0:  sum_j w_j e^{-i w_j t} tau_j e^{i Q_j.r}

Components are always accumulated in ascending (angle, carrier) order so
the result does not depend on how callers order them or on how many
threads share the grid.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .em_scatter import EmIncident, refract_em
from .errors import DomainError, SamplingError, UndefinedAxisError
from .kg_scatter import KgIncident, KleinStep, refract_kg
from .mapping import counter_dispersive_energy
from .media import sample_medium

__all__ = [
    "PlaneWaveComponent",
    "BeamSpec",
    "GridSpec",
    "FieldGrid",
    "build_spectrum",
    "scatter_em",
    "scatter_kg",
    "map_components",
    "evaluate_field",
    "assemble_field",
    "interface_traces",
    "centroid_angle",
    "ALL_PARTS",
]

ALL_PARTS = ("incident", "reflected", "transmitted")
TRUNCATION = 3.0
MIN_POINTS_PER_WAVELENGTH = 8


@dataclass(frozen=True)
class PlaneWaveComponent:
    """One plane wave of a beam.

    ``carrier`` is the angular frequency (rad/s) for the electromagnetic
    picture and the energy (J) for the particle picture.
    """

    theta: float
    weight: float
    carrier: float


@dataclass(frozen=True)
class BeamSpec:
    center: float
    theta_i: float
    angular_sigma: float = 0.06
    n_components: int = 129
    n_spectral: int = 1
    spectral_sigma: float = 0.0

    def __post_init__(self):
        if self.n_components < 1 or self.n_components % 2 == 0:
            raise DomainError("n_components must be a positive odd integer")
        if self.n_spectral < 1 or self.n_spectral % 2 == 0:
            raise DomainError("n_spectral must be a positive odd integer")
        if not 0 < self.angular_sigma < math.pi / 8:
            raise DomainError("angular_sigma must lie in (0, pi/8)")
        if not (0 <= self.theta_i and self.theta_i + TRUNCATION * self.angular_sigma < math.pi / 2):
            raise DomainError("theta_i + 3*angular_sigma must stay below pi/2")
        if not self.center > 0:
            raise DomainError("center frequency/energy must be positive")
        if self.n_spectral > 1 and not 0 < TRUNCATION * self.spectral_sigma < 1:
            raise DomainError("spectral_sigma must lie in (0, 1/3) for a polychromatic beam")


def _gaussian_nodes(n, sigma):
    if n == 1:
        return np.zeros(1), np.ones(1)
    # integer grid keeps the nodes exactly symmetric about zero
    offsets = (np.arange(n) - n // 2) * (2 * TRUNCATION * sigma / (n - 1))
    return offsets, np.exp(-(offsets**2) / (2 * sigma**2))


def build_spectrum(spec: BeamSpec) -> list[PlaneWaveComponent]:
    """Equally spaced angles over +-3 sigma with Gaussian weights
    normalized to unit total power (sum of squared weights is 1).

    With ``n_spectral > 1`` the carrier is also spread, as
    ``center*(1 + delta)`` with Gaussian weights in ``delta``.
    """
    d_theta, w_theta = _gaussian_nodes(spec.n_components, spec.angular_sigma)
    d_carrier, w_carrier = _gaussian_nodes(spec.n_spectral, spec.spectral_sigma)
    weights = np.outer(w_theta, w_carrier)
    weights /= math.sqrt(np.sum(weights**2))
    components = []
    for i, dt in enumerate(d_theta):
        for k, dc in enumerate(d_carrier):
            components.append(
                PlaneWaveComponent(
                    spec.theta_i + float(dt),
                    float(weights[i, k]),
                    spec.center * (1 + float(dc)),
                )
            )
    return components


def scatter_em(components, model):
    """Scatter every component (carrier = omega) into ``model``."""
    return [
        refract_em(EmIncident.from_angle(c.carrier, c.theta), sample_medium(model, c.carrier))
        for c in components
    ]


def scatter_kg(components, V, m=0.0):
    """Scatter every component (carrier = E) off a step of height ``V``."""
    results = []
    for c in components:
        step = KleinStep(V, m, c.carrier)
        results.append(refract_kg(step, KgIncident.from_angle(step, c.theta)))
    return results


def map_components(components, model, V):
    """Replace each electromagnetic carrier ``omega`` by the massless
    particle energy that keeps the step at ``V``."""
    return [
        PlaneWaveComponent(c.theta, c.weight, counter_dispersive_energy(model, V, c.carrier))
        for c in components
    ]


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    z_min: float
    z_max: float
    nx: int
    nz: int

    def __post_init__(self):
        if self.nx < 2 or self.nz < 2:
            raise DomainError("grid needs at least 2 points per axis")
        if not self.x_min < self.x_max:
            raise DomainError("x_min must be below x_max")
        if not self.z_min < 0 < self.z_max:
            raise DomainError("grid must span both sides of z = 0")

    @classmethod
    def centered(cls, half_width, n):
        return cls(-half_width, half_width, -half_width, half_width, n, n)

    @property
    def x(self):
        return np.linspace(self.x_min, self.x_max, self.nx)

    @property
    def z(self):
        return np.linspace(self.z_min, self.z_max, self.nz)


@dataclass(frozen=True, eq=False)
class FieldGrid:
    """Complex field on an (x, z) grid.

    ``values[i, k]`` is the field at ``(x[i], z[k])``; flattening in C
    order therefore runs z fastest.
    """

    x: np.ndarray
    z: np.ndarray
    values: np.ndarray
    density: np.ndarray

    @classmethod
    def from_values(cls, x, z, values):
        return cls(x, z, values, np.abs(values) ** 2)

    @property
    def nx(self):
        return len(self.x)

    @property
    def nz(self):
        return len(self.z)

    @property
    def x_range(self):
        return float(self.x[0]), float(self.x[-1])

    @property
    def z_range(self):
        return float(self.z[0]), float(self.z[-1])


def _ordered(components, results):
    if len(components) != len(results):
        raise DomainError("need exactly one scatter result per component")
    order = sorted(range(len(components)), key=lambda j: (components[j].theta, components[j].carrier))
    return [(components[j], results[j]) for j in order]


def _z_factor(res, z, side, parts, derivative):
    """z-dependent part of one component on one side of the interface."""
    kz = res.K[1]
    if side == "lower":
        out = np.zeros(len(z), dtype=complex)
        if "incident" in parts:
            f = np.exp(1j * kz * z)
            out += f * (1j * kz) if derivative == "z" else f
        if "reflected" in parts:
            f = res.rho * np.exp(-1j * kz * z)
            out += f * (-1j * kz) if derivative == "z" else f
        return out
    if "transmitted" not in parts:
        return np.zeros(len(z), dtype=complex)
    qz = res.Q[1]
    f = res.tau * np.exp(1j * qz * z)
    return f * (1j * qz) if derivative == "z" else f


def evaluate_field(
    components,
    results,
    x,
    z,
    t=0.0,
    parts=ALL_PARTS,
    side=None,
    derivative=None,
    workers=1,
):
    """Field (or its x/z derivative) on the tensor grid ``x`` by ``z``.

    ``side`` forces the 'lower' (z < 0) or 'upper' (z >= 0) expression
    everywhere, which gives one-sided limits at the interface.  By default
    each z picks the expression for its own half.
    """
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    pairs = _ordered(components, results)
    if side is None:
        lower = z < 0
    elif side in ("lower", "upper"):
        lower = np.full(z.shape, side == "lower")
    else:
        raise ValueError(f"unknown side {side!r}")
    zl, zu = z[lower], z[~lower]

    # per-component factors are shared by all row chunks
    x_factors, lower_factors, upper_factors = [], [], []
    for comp, res in pairs:
        kx = res.K[0]
        fx = comp.weight * np.exp(-1j * res.omega * t) * np.exp(1j * kx * x)
        if derivative == "x":
            fx = fx * (1j * kx)
        x_factors.append(fx)
        lower_factors.append(_z_factor(res, zl, "lower", parts, derivative))
        upper_factors.append(_z_factor(res, zu, "upper", parts, derivative))

    values = np.zeros((len(x), len(z)), dtype=complex)

    def fill(rows):
        lo = np.zeros((rows.stop - rows.start, len(zl)), dtype=complex)
        up = np.zeros((rows.stop - rows.start, len(zu)), dtype=complex)
        for fx, fl, fu in zip(x_factors, lower_factors, upper_factors):
            col = fx[rows, None]
            lo += col * fl[None, :]
            up += col * fu[None, :]
        values[rows][:, lower] = lo
        values[rows][:, ~lower] = up

    workers = max(1, int(workers))
    step = -(-len(x) // workers)
    chunks = [slice(i, min(i + step, len(x))) for i in range(0, len(x), step)]
    if workers == 1:
        for rows in chunks:
            fill(rows)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill, chunks))
    return values


def _check_sampling(results, grid: GridSpec):
    kmax = 0.0
    for res in results:
        kmax = max(kmax, math.hypot(*res.K))
        qz = res.Q[1]
        if not isinstance(qz, complex):
            kmax = max(kmax, math.hypot(res.Q[0], qz))
    spacing = max((grid.x_max - grid.x_min) / (grid.nx - 1), (grid.z_max - grid.z_min) / (grid.nz - 1))
    points = 2 * math.pi / kmax / spacing
    if points < MIN_POINTS_PER_WAVELENGTH:
        raise SamplingError(
            f"grid resolves the shortest wavelength with {points:.2f} points "
            f"(need {MIN_POINTS_PER_WAVELENGTH})"
        )


def assemble_field(components, results, grid: GridSpec, t=0.0, parts=ALL_PARTS, workers=1) -> FieldGrid:
    """Total field of a scattered beam on ``grid`` at time ``t``.

    Raises
    ------
    SamplingError
        If the grid has fewer than 8 points per shortest wavelength.
    """
    _check_sampling(results, grid)
    x, z = grid.x, grid.z
    values = evaluate_field(components, results, x, z, t=t, parts=parts, workers=workers)
    return FieldGrid.from_values(x, z, values)


def interface_traces(components, results, x, t=0.0):
    """One-sided limits at z = 0 of the field and of its z-derivative.

    Returns a dict with keys ``lower``, ``upper``, ``lower_dz`` and
    ``upper_dz``, each an array over ``x``.
    """
    z0 = np.zeros(1)
    out = {}
    for side in ("lower", "upper"):
        out[side] = evaluate_field(components, results, x, z0, t=t, side=side)[:, 0]
        out[side + "_dz"] = evaluate_field(components, results, x, z0, t=t, side=side, derivative="z")[:, 0]
    return out


_HALVES = {"upper": "upper", "transmitted": "upper", "lower": "lower", "incident": "lower"}


def centroid_angle(grid: FieldGrid, half="transmitted") -> float:
    """Signed angle of the beam ridge from the z-axis on one half-plane.

    The ridge is the line through the density-weighted x-centroids of
    each z-slice, fitted by weighted least squares.  Positive angles mean
    x grows with z, so a negatively refracted beam (transmitted toward
    the incident side of the normal) measures negative.

    Raises
    ------
    UndefinedAxisError
        If the density on that half has no preferred direction.
    """
    which = _HALVES.get(half)
    if which is None:
        raise ValueError(f"unknown half {half!r}")
    mask = grid.z > 0 if which == "upper" else grid.z < 0
    z = grid.z[mask]
    dens = grid.density[:, mask]
    peak = float(np.max(dens)) if dens.size else 0.0
    if peak <= 0 or float(np.ptp(dens)) <= 1e-12 * peak:
        raise UndefinedAxisError("density is uniform on this half-plane")

    xx, zz = np.meshgrid(grid.x, z, indexing="ij")
    total = dens.sum()
    mx, mz = (dens * xx).sum() / total, (dens * zz).sum() / total
    cxx = (dens * (xx - mx) ** 2).sum() / total
    czz = (dens * (zz - mz) ** 2).sum() / total
    cxz = (dens * (xx - mx) * (zz - mz)).sum() / total
    spread = math.hypot(cxx - czz, 2 * cxz)
    # a beam ridge is anisotropic by orders of magnitude; 1 % is a round spot
    if spread <= 1e-2 * (cxx + czz):
        raise UndefinedAxisError("density is isotropic; no principal axis")

    weights = dens.sum(axis=0)
    keep = weights > 0
    xbar = (dens[:, keep] * grid.x[:, None]).sum(axis=0) / weights[keep]
    slope = np.polyfit(z[keep], xbar, 1, w=np.sqrt(weights[keep]))[0]
    return math.atan(slope)
