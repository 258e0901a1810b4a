"""
Sweeping the step height through every regime
=============================================

A particle with a small mass meets steps from 0 up to well beyond
E + mc^2, at 20 degrees incidence.
"""

# %%
import math

import numpy as np

from klein_lhm import InterfacePoleError, KgIncident, KleinStep, RegimeBoundaryError, refract_kg
from klein_lhm.constants import C, uev_to_joule

E = uev_to_joule(20.7)
m = 0.3 * E / C**2
theta = math.radians(20)

# %%
# Watch T go from positive, to zero over the evanescent stretch, to
# negative once the lower branch opens.  R + T stays at one throughout.
for v in np.linspace(0, 80, 17):
    try:
        step = KleinStep(uev_to_joule(v), m, E)
        r = refract_kg(step, KgIncident.from_angle(step, theta))
    except (RegimeBoundaryError, InterfacePoleError) as exc:
        print(f"V={v:5.1f} ueV  {type(exc).__name__}")
        continue
    print(f"V={v:5.1f} ueV  {r.regime:<19s} T={r.T:+8.4f} R={r.R:+8.4f}")
