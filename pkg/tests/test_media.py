import math

import numpy as np
import pytest

from klein_lhm.errors import DomainError, ResonanceError
from klein_lhm.media import ConstantMedium, MediumDispersion, group_index, sample_medium

from conftest import OMEGA_C


def test_fitted_values_at_center(fitted):
    s = sample_medium(fitted, OMEGA_C)
    assert s.epsilon == pytest.approx(-4.76, abs=1e-3)
    assert s.mu == pytest.approx(-1.222, abs=1e-3)
    assert s.n == pytest.approx(-2.412, abs=1e-3)


def test_plasma_fit_is_exact():
    model = MediumDispersion.fitted()
    assert model.plasma_frequency == pytest.approx(2.4 * OMEGA_C, rel=1e-15)
    assert model.permittivity(OMEGA_C) == pytest.approx(1 - 2.4**2, rel=1e-14)


def test_high_frequency_limit(fitted):
    s = sample_medium(fitted, 1e6 * OMEGA_C)
    F = fitted.magnetic_fill_factor
    assert s.epsilon == pytest.approx(1, abs=1e-10)
    assert s.mu == pytest.approx(1 - F, abs=1e-10)
    assert s.n == pytest.approx(math.sqrt(1 - F), abs=1e-10)


def test_negative_band_invariants(fitted):
    lo, hi = fitted.negative_index_band()
    for w in np.linspace(lo, hi, 1002)[1:-1]:
        s = sample_medium(fitted, w)
        assert s.epsilon < 0 and s.mu < 0 and s.n < 0
        assert abs(s.n**2 - s.epsilon * s.mu) <= 1e-12 * abs(s.epsilon * s.mu)


def test_group_index_at_least_one_in_negative_band(fitted):
    lo, hi = fitted.negative_index_band()
    ng = [group_index(fitted, w) for w in np.linspace(lo, hi, 1002)[1:-1]]
    assert min(ng) >= 1


def test_group_index_above_one_at_center(fitted):
    assert group_index(fitted, OMEGA_C) > 1


def test_upper_band_group_index_dips_below_one(fitted):
    # mu -> 1 - F at high frequency, so this model is superluminal there
    assert group_index(fitted, 4 * OMEGA_C) < 1
    assert group_index(fitted, 2.6 * OMEGA_C) >= 1


def test_constant_index_one_has_unit_group_index():
    assert group_index(ConstantMedium(1.0, 1.0), OMEGA_C) == 1


def _omega_n(model, w):
    return w * sample_medium(model, w).n


@pytest.mark.parametrize("factor", [0.89, 0.95, 1.0, 1.1, 1.2, 2.5, 3.0])
def test_group_index_matches_finite_difference(fitted, factor):
    w = factor * OMEGA_C
    h = 1e-6 * w
    fd = (_omega_n(fitted, w + h) - _omega_n(fitted, w - h)) / (2 * h)
    assert group_index(fitted, w) == pytest.approx(fd, rel=1e-6)


def test_stopband_sample_is_evanescent(fitted):
    s = sample_medium(fitted, 0.5 * OMEGA_C)
    assert isinstance(s.n, complex) and s.n.real == 0 and s.n.imag > 0
    assert math.isnan(s.n_g)
    with pytest.raises(DomainError):
        group_index(fitted, 0.5 * OMEGA_C)


def test_sign_rule_positive_band(fitted):
    s = sample_medium(fitted, 3 * OMEGA_C)
    assert s.epsilon > 0 and s.mu > 0 and s.n > 0


def test_resonance_and_domain_errors(fitted):
    with pytest.raises(ResonanceError):
        sample_medium(fitted, fitted.magnetic_resonance_frequency)
    with pytest.raises(DomainError):
        sample_medium(fitted, 0.0)
    with pytest.raises(DomainError):
        sample_medium(fitted, -OMEGA_C)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(plasma_frequency=0, magnetic_resonance_frequency=1, magnetic_fill_factor=0.5),
        dict(plasma_frequency=1, magnetic_resonance_frequency=-1, magnetic_fill_factor=0.5),
        dict(plasma_frequency=1, magnetic_resonance_frequency=1, magnetic_fill_factor=1.0),
        dict(plasma_frequency=1, magnetic_resonance_frequency=1, magnetic_fill_factor=0.5, loss_rates=(-1, 0)),
    ],
)
def test_invalid_models_rejected(kwargs):
    with pytest.raises(DomainError):
        MediumDispersion(**kwargs)


def test_lossy_branch_is_passive(fitted):
    lossy = MediumDispersion(
        fitted.plasma_frequency, fitted.magnetic_resonance_frequency, fitted.magnetic_fill_factor, (1e8, 1e8)
    )
    s = sample_medium(lossy, OMEGA_C)
    assert s.n.imag > 0 and s.n.real < 0
    assert s.n**2 == pytest.approx(s.epsilon * s.mu, rel=1e-12)
    with pytest.raises(DomainError):
        group_index(lossy, OMEGA_C)


def test_constant_medium_from_index():
    med = ConstantMedium.from_index(-2.412, -1.222)
    s = sample_medium(med, OMEGA_C)
    assert s.n == pytest.approx(-2.412, rel=1e-15)
    assert s.n_g == s.n
    with pytest.raises(DomainError):
        ConstantMedium.from_index(-1.0, 1.0)
