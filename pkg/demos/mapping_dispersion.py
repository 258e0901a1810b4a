"""
Trading a frequency for an energy
=================================

A left-handed medium at fixed frequency and a Klein step at fixed
energy refract the same way when V = E (1 - n).  Away from the center
the medium disperses; the Klein picture keeps V fixed and lets the
energy absorb the dispersion instead.
"""

# %%
import math

import numpy as np

from klein_lhm import (
    EmIncident,
    KgIncident,
    KleinStep,
    MediumDispersion,
    counter_dispersive_energy,
    equivalent_em_sample,
    index_to_potential,
    potential_to_index,
    refract_em,
    refract_kg,
)
from klein_lhm.constants import HBAR, joule_to_uev, uev_to_joule

model = MediumDispersion.fitted()
omega_c = 2 * math.pi * 5e9
E = uev_to_joule(20.7)

# %%
# The center point, both ways.
V = index_to_potential(-2.412, E)
print(f"n=-2.412 -> V={joule_to_uev(V):.3f} ueV -> n={potential_to_index(V, E):.5f}")
print(f"photon energy at 5 GHz: {joule_to_uev(HBAR * omega_c):.3f} ueV")

# %%
# Plane-wave coefficients agree to rounding once the medium is replaced
# by its mu = 1 equivalent.
n = potential_to_index(V, E)
step = KleinStep(V, 0.0, E)
for deg in (0, 20, 40, 60):
    th = math.radians(deg)
    kg = refract_kg(step, KgIncident.from_angle(step, th))
    em = refract_em(EmIncident.from_angle(omega_c, th), equivalent_em_sample(n, omega_c))
    print(f"{deg:2d} deg  |d tau|={abs(kg.tau - em.tau):.1e}  |d rho|={abs(kg.rho - em.rho):.1e}")

# %%
# Across the band, the mapped energy follows the index.
for f in np.linspace(4.8e9, 5.2e9, 5):
    w = 2 * math.pi * f
    print(f"{f / 1e9:.2f} GHz  E={joule_to_uev(counter_dispersive_energy(model, V, w)):.3f} ueV")
