"""Physical constants (CODATA, SI) and unit helpers."""

from scipy import constants as _c

C = _c.c
HBAR = _c.hbar
EV = _c.eV  # 1.602176634e-19 J exactly
MICRO_EV = 1e-6 * EV


def uev_to_joule(value):
    return value * MICRO_EV


def joule_to_uev(value):
    return value / MICRO_EV
