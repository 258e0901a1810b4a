"""Negative refraction in left-handed media and at strong Klein steps.

Plane-wave scattering in both pictures, the component-wise map between
them, and Gaussian-beam field synthesis on a grid.
"""

from .em_scatter import EmIncident, EmScatterResult, em_group_velocity, refract_em
from .errors import (
    ConfigError,
    DomainError,
    InterfacePoleError,
    RegimeBoundaryError,
    ResonanceError,
    SamplingError,
    UndefinedAxisError,
)
from .kg_scatter import (
    KgIncident,
    KgScatterResult,
    KleinStep,
    classify_regime,
    evanescence_threshold,
    excess_potential,
    kg_group_velocity,
    probability_current,
    refract_kg,
)
from .mapping import (
    MappingSpec,
    counter_dispersive_energy,
    equivalent_em_sample,
    index_to_potential,
    potential_to_index,
)
from .media import ConstantMedium, MediumDispersion, MediumSample, group_index, sample_medium
from .wavepacket import (
    BeamSpec,
    FieldGrid,
    GridSpec,
    PlaneWaveComponent,
    assemble_field,
    build_spectrum,
    centroid_angle,
    scatter_em,
    scatter_kg,
)

__version__ = "0.1.0"
