"""Amplitude and flux coefficients common to both wave pictures.

With ``a`` the weighted incident normal wavenumber (``mu*K_z`` for the
electromagnetic TE case, ``K_z`` for the scalar particle) and ``b`` the
transmitted normal wavenumber, matching the field and its weighted
normal derivative at z = 0 gives ``tau = 2a/(a+b)`` and
``rho = (a-b)/(a+b)``.
"""

from .errors import InterfacePoleError


def amplitude_coefficients(a, b):
    denom = a + b
    # cancellation down to rounding level counts as the pole itself
    if abs(denom) <= 1e-12 * (abs(a) + abs(b)):
        raise InterfacePoleError("interface pole: a + b = 0, coefficients diverge")
    return 2 * a / denom, (a - b) / denom


def flux_coefficients(a, b, tau, rho):
    """(T, R) for a real transmitted wavenumber ``b``."""
    return abs(tau) ** 2 * b / a, abs(rho) ** 2
