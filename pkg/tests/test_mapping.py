import math

import numpy as np
import pytest

from klein_lhm._interface import amplitude_coefficients
from klein_lhm.constants import C, joule_to_uev, uev_to_joule
from klein_lhm.em_scatter import EmIncident, refract_em
from klein_lhm.errors import DomainError
from klein_lhm.kg_scatter import KgIncident, KleinStep, refract_kg
from klein_lhm.mapping import (
    MappingSpec,
    counter_dispersive_energy,
    equivalent_em_sample,
    index_to_potential,
    map_table,
    potential_to_index,
)
from klein_lhm.media import ConstantMedium, MediumSample, sample_medium

from conftest import E_KLEIN, OMEGA_C, V_KLEIN


def test_lhm_index_maps_to_klein_potential():
    V = index_to_potential(-2.412, E_KLEIN, 0.0)
    assert joule_to_uev(V) == pytest.approx(70.63, abs=0.01)


def test_matched_index_gives_twice_energy():
    assert index_to_potential(-1.0, E_KLEIN) == 2 * E_KLEIN
    assert potential_to_index(2 * E_KLEIN, E_KLEIN) == -1


def test_klein_potential_maps_back_to_lhm_index():
    assert potential_to_index(V_KLEIN, E_KLEIN) == pytest.approx(-2.4121, abs=1e-4)
    assert potential_to_index(V_KLEIN, E_KLEIN) == pytest.approx(-2.412, abs=1e-3)


@pytest.mark.parametrize("n", [-0.3, -1.0, -2.412, -7.5])
@pytest.mark.parametrize("mc2_frac", [0.0, 0.2, 0.9])
def test_round_trip(n, mc2_frac):
    m = mc2_frac * E_KLEIN / C**2
    V = index_to_potential(n, E_KLEIN, m)
    assert potential_to_index(V, E_KLEIN, m) == pytest.approx(n, rel=1e-12)


def test_domain_errors():
    with pytest.raises(DomainError):
        index_to_potential(0.5, E_KLEIN)
    with pytest.raises(DomainError):
        potential_to_index(0.5 * E_KLEIN, E_KLEIN)
    with pytest.raises(DomainError):
        MappingSpec(E_KLEIN, E_KLEIN)


def test_mapping_spec_center_index():
    assert MappingSpec(V_KLEIN, E_KLEIN).center_index == pytest.approx(-2.4121, abs=1e-4)


def _mapped_pair(theta, V=V_KLEIN, E=E_KLEIN):
    step = KleinStep(V, 0.0, E)
    kg = refract_kg(step, KgIncident.from_angle(step, theta))
    n = potential_to_index(V, E)
    em = refract_em(EmIncident.from_angle(OMEGA_C, theta), equivalent_em_sample(n, OMEGA_C))
    return kg, em


@pytest.mark.parametrize("theta", [0.0, 0.2, math.pi / 6, 0.9, 1.3])
def test_scattering_level_equivalence(theta):
    kg, em = _mapped_pair(theta)
    for a, b in [(kg.tau, em.tau), (kg.rho, em.rho), (kg.T, em.T), (kg.R, em.R)]:
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))
    # identical refraction angles
    assert math.atan2(kg.Q[0], kg.Q[1]) == pytest.approx(math.atan2(em.Q[0], em.Q[1]), abs=1e-12)


def test_shared_coefficient_function_is_bitwise_equal():
    # mu = 1 makes the two pictures the same function of (K_z, Q_z)
    kz, qz = 0.8660254037844386, -2.3596857577948134
    em_inputs = (1.0 * kz, qz)
    assert amplitude_coefficients(*em_inputs) == amplitude_coefficients(kz, qz)


def test_power_mismatch_is_the_mu_dependence():
    theta = math.pi / 6
    kg, _ = _mapped_pair(theta)
    lhm_case = refract_em(EmIncident.from_angle(OMEGA_C, theta), MediumSample(OMEGA_C, -4.76, -1.222, -2.412, math.nan))
    assert lhm_case.T == pytest.approx(0.855, abs=1e-3)
    assert kg.T == pytest.approx(-3.66, abs=1e-2)
    # same index with mu = 1 reproduces the particle coefficients
    unit_mu = refract_em(EmIncident.from_angle(OMEGA_C, theta), equivalent_em_sample(-2.412, OMEGA_C))
    assert unit_mu.T == pytest.approx(kg.T, abs=2e-3)
    # and mu enters only through a = mu*K_z
    tau, rho = amplitude_coefficients(-1.222 * lhm_case.K[1], lhm_case.Q[1])
    assert (tau, rho) == (lhm_case.tau, lhm_case.rho)


def test_counter_dispersive_energy_at_center(fitted):
    E = counter_dispersive_energy(fitted, V_KLEIN, OMEGA_C)
    assert joule_to_uev(E) == pytest.approx(20.70, abs=0.005)


def test_counter_dispersive_energy_matched_limit():
    matched = ConstantMedium(-1.0, -1.0)
    assert sample_medium(matched, OMEGA_C).n == -1.0
    assert counter_dispersive_energy(matched, V_KLEIN, OMEGA_C) == V_KLEIN / 2


def test_counter_dispersive_energy_outside_band(fitted):
    with pytest.raises(DomainError):
        counter_dispersive_energy(fitted, V_KLEIN, 3 * OMEGA_C)
    with pytest.raises(DomainError):
        counter_dispersive_energy(fitted, V_KLEIN, 0.5 * OMEGA_C)


def test_potential_is_constant_across_band(fitted):
    lo, hi = fitted.negative_index_band()
    omegas = np.linspace(lo, hi, 502)[1:-1]
    for omega in omegas:
        n = sample_medium(fitted, omega).n
        E = counter_dispersive_energy(fitted, V_KLEIN, omega)
        assert index_to_potential(n, E, 0.0) == pytest.approx(V_KLEIN, rel=1e-10)
    energies = [counter_dispersive_energy(fitted, V_KLEIN, w) for w in omegas]
    # compensation: energy varies with omega although V does not
    assert max(energies) / min(energies) > 1.5


def test_map_table_rows(fitted):
    rows = map_table(fitted, V_KLEIN, [0.95 * OMEGA_C, OMEGA_C, 1.05 * OMEGA_C])
    assert len(rows) == 3
    for omega, n, E, V in rows:
        assert n < 0
        assert V == pytest.approx(V_KLEIN, rel=1e-12)


def test_mapped_energy_matches_photon_energy_scale():
    # the Klein scenario energy is the 5 GHz photon energy to within 0.2 %
    from klein_lhm.constants import HBAR

    assert joule_to_uev(HBAR * OMEGA_C) == pytest.approx(20.7, rel=2e-3)
    assert uev_to_joule(20.7) == E_KLEIN
