import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klein_lhm.constants import C
from klein_lhm.em_scatter import EmIncident, em_group_velocity, refract_em
from klein_lhm.errors import DomainError, InterfacePoleError
from klein_lhm.media import ConstantMedium, MediumSample, sample_medium

from conftest import OMEGA_C


def _sample(n, mu, omega=OMEGA_C, n_g=math.nan):
    return MediumSample(omega, n * n / mu, mu, n, n_g)


def test_lhm_center_coefficients():
    res = refract_em(EmIncident.from_angle(OMEGA_C, math.pi / 6), _sample(-2.412, -1.222))
    assert res.T == pytest.approx(0.855, abs=1e-3)
    assert res.R == pytest.approx(0.145, abs=1e-3)


def test_lhm_hand_evaluated_amplitudes():
    # K = 1 normalization: mu*K_z = -1.0583, Q_z = -sqrt(5.8177 - 0.25)
    omega = C  # |K| = omega/c = 1
    res = refract_em(EmIncident.from_angle(omega, math.pi / 6), _sample(-2.412, -1.222, omega))
    assert res.Q[1] == pytest.approx(-2.3597, abs=1e-3)
    assert res.tau == pytest.approx(0.6192, abs=1e-3)
    assert res.rho == pytest.approx(-0.3807, abs=1e-3)
    assert res.sigma == -1


def test_matched_veselago_medium():
    res = refract_em(EmIncident.from_angle(OMEGA_C, 0.0), _sample(-1.0, -1.0))
    assert res.tau == 1 and res.rho == 0
    assert res.T == 1 and res.R == 0


def test_phase_matching_is_bitwise():
    inc = EmIncident.from_angle(OMEGA_C, 0.4)
    res = refract_em(inc, _sample(-2.0, -1.5))
    assert res.Q[0] == inc.K[0]
    assert res.K_reflect == (inc.K[0], -inc.K[1])


def test_evanescent_branch():
    inc = EmIncident.from_angle(OMEGA_C, math.radians(60))
    res = refract_em(inc, _sample(0.5, 1.0))
    assert res.evanescent
    assert res.Q[1].real == 0 and res.Q[1].imag > 0
    assert (res.T, res.R) == (0.0, 1.0)
    assert abs(res.rho) == pytest.approx(1, rel=1e-12)


def test_interface_pole_detected():
    # mu*K_z + Q_z = 0 needs a mu < 0 sample on the positive branch
    inc = EmIncident.from_angle(C, 0.0)
    with pytest.raises(InterfacePoleError):
        refract_em(inc, MediumSample(C, -1.0, -1.0, 1.0, 1.0))


def test_incident_invariants():
    with pytest.raises(DomainError):
        EmIncident(OMEGA_C, (0.0, 2 * OMEGA_C / C), 0.0)
    with pytest.raises(DomainError):
        EmIncident.from_angle(OMEGA_C, math.pi / 2)
    with pytest.raises(DomainError):
        refract_em(EmIncident.from_angle(OMEGA_C, 0.1), MediumSample(OMEGA_C, -1, 1, 1j, math.nan))


@settings(max_examples=300, deadline=None)
@given(
    theta=st.floats(0, math.pi / 2, exclude_max=True),
    n=st.floats(-5, -1),
    mu=st.floats(-3, -0.5),
)
def test_unitarity_property(theta, n, mu):
    res = refract_em(EmIncident.from_angle(OMEGA_C, theta), _sample(n, mu))
    assert abs(res.R + res.T - 1) < 1e-12
    assert res.Q[1] <= 0


@settings(max_examples=200, deadline=None)
@given(theta=st.floats(0.01, 1.4), n=st.floats(-5, -1.01), mu=st.floats(-3, -0.5))
def test_negative_refraction_geometry(theta, n, mu):
    res = refract_em(EmIncident.from_angle(OMEGA_C, theta), _sample(n, mu, n_g=2.0))
    assert res.Q[0] > 0 and res.Q[1] < 0
    vg = em_group_velocity(res, _sample(n, mu, n_g=2.0))
    assert vg[1] > 0 and np.dot(vg, res.Q) < 0
    # refracted ray on the incident side of the normal
    theta_t = math.atan2(vg[0], vg[1])
    assert theta_t < 0
    assert math.sin(-theta_t) == pytest.approx(math.sin(theta) / abs(n), rel=1e-12)


def test_vacuum_group_velocity():
    med = sample_medium(ConstantMedium(1.0, 1.0), OMEGA_C)
    res = refract_em(EmIncident.from_angle(OMEGA_C, 0.0), med)
    np.testing.assert_allclose(em_group_velocity(res, med), [0.0, C], rtol=1e-15)


def test_group_velocity_matches_dispersion_slope(fitted):
    # |Q|(omega) = |n(omega)| omega / c ; group speed = |d omega / d|Q||
    med = sample_medium(fitted, OMEGA_C)
    res = refract_em(EmIncident.from_angle(OMEGA_C, math.pi / 6), med)
    vg = em_group_velocity(res, med)

    def qmag(w):
        return abs(sample_medium(fitted, w).n) * w / C

    h = 1e-6 * OMEGA_C
    slope = (qmag(OMEGA_C + h) - qmag(OMEGA_C - h)) / (2 * h)
    assert np.linalg.norm(vg) == pytest.approx(abs(1 / slope), rel=1e-4)
    assert np.linalg.norm(vg) == pytest.approx(C / med.n_g, rel=1e-14)
    # backward wave: |Q| falls as omega rises
    assert slope < 0


def test_group_velocity_rejects_evanescent():
    inc = EmIncident.from_angle(OMEGA_C, math.radians(60))
    med = _sample(0.5, 1.0, n_g=1.0)
    with pytest.raises(DomainError):
        em_group_velocity(refract_em(inc, med), med)


def test_deterministic_results():
    inc = EmIncident.from_angle(OMEGA_C, 0.3)
    med = _sample(-2.2, -0.9)
    assert refract_em(inc, med) == refract_em(inc, med)
