"""
A massless Klein-Gordon particle at a strong potential step
===========================================================

Take E = 20.7 ueV and a step of 70.63 ueV.  The step is higher than
E + mc^2, so the transmitted wave lives on the negative-energy branch.
"""

# %%
import math

from klein_lhm import (
    BeamSpec,
    GridSpec,
    KgIncident,
    KleinStep,
    assemble_field,
    build_spectrum,
    centroid_angle,
    classify_regime,
    evanescence_threshold,
    excess_potential,
    kg_group_velocity,
    refract_kg,
    scatter_kg,
)
from klein_lhm.constants import joule_to_uev

step = KleinStep.from_uev(E=20.7, V=70.63)
print("regime:", classify_regime(step))

# %%
# Transmission is negative and reflection exceeds one, but the two still
# sum to one.  Negative T means the transmitted current points back at
# the step, which is the flux picture of pair production.
theta = math.pi / 6
inc = KgIncident.from_angle(step, theta)
res = refract_kg(step, inc)
print(f"tau={res.tau.real:+.4f} rho={res.rho.real:+.4f}")
print(f"T={res.T:+.5f} R={res.R:+.5f} sum={res.T + res.R:.15f}")

# %%
# The wavevector points back toward the interface, but the group
# velocity (which carries the packet) points away from it.
vg = kg_group_velocity(step, res.Q)
print(f"Q_z={res.Q[1]:.4g} 1/m, v_g,z={vg[1]:.4g} m/s")

# %%
# At grazing incidence the wave can still be damped if the step barely
# clears the threshold.  The margin needed grows with K_x.
dv = excess_potential(step)
star = evanescence_threshold(step.m, inc.K[0])
print(f"excess potential {joule_to_uev(dv):.2f} ueV, needed {joule_to_uev(star):.2f} ueV")

# %%
# The wavepacket version of the same scene.
comps = build_spectrum(BeamSpec(step.E, theta))
lam = 2 * math.pi / step.incident_wavenumber
field = assemble_field(comps, scatter_kg(comps, step.V), GridSpec.centered(10 * lam, 512))
print(f"transmitted beam centroid {math.degrees(centroid_angle(field)):.2f} deg")
