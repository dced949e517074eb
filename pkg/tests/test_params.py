import math

import pytest
from mpmath import mp, mpf, sech

from squeezed_otto import EngineParams, HBAR, derive, from_lab_units, nmr_params
from squeezed_otto.errors import ValidationError
from squeezed_otto.params import zeta_of


def test_nmr_dimensionless_temperatures():
    d = derive(nmr_params())
    assert d.theta_c == pytest.approx(0.52, abs=0.005)
    assert d.theta_h == pytest.approx(3.62, abs=0.005)


def test_theta_definition():
    p = nmr_params()
    d = derive(p)
    assert d.theta_c == pytest.approx(0.5 * p.beta_c * HBAR * p.omega_c, rel=1e-15)
    assert d.theta_h == pytest.approx(0.5 * p.beta_h * HBAR * p.omega_h, rel=1e-15)


def test_no_squeezing():
    d = derive(nmr_params(0.0))
    assert (d.zeta, d.mu, d.nu) == (1.0, 1.0, 0.0)


def test_zeta_half():
    mp.dps = 40
    oracle = float(sech(mpf(1)) ** 2)
    assert oracle == pytest.approx(0.419974, abs=1e-6)
    d = derive(nmr_params(0.5))
    assert d.zeta == pytest.approx(oracle, abs=1e-15)
    assert d.zeta == pytest.approx(1.0 / (d.mu**2 + d.nu**2) ** 2, rel=1e-12)


@pytest.mark.parametrize("r", [0.0, 0.1, 0.5, 1.0, 2.0, 5.0])
def test_derived_invariants(r):
    d = derive(nmr_params(r))
    assert d.mu**2 - d.nu**2 == pytest.approx(1.0, abs=1e-12 * d.mu**2)
    assert 0.0 < d.zeta <= 1.0
    assert d.zeta == pytest.approx(1.0 / math.cosh(2 * r) ** 2, rel=1e-12)


def test_zeta_monotone_and_vanishing():
    values = [zeta_of(r) for r in (0, 1, 2, 4, 8)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert zeta_of(400.0) == 0.0


def test_from_lab_units():
    p = from_lab_units(2.5, 10, 10, 0.7, 0.3)
    assert p.omega_c == pytest.approx(2 * math.pi * 2500)
    assert p.omega_h == pytest.approx(10 * p.omega_c)
    assert p.beta_c == pytest.approx(0.1)
    assert p.beta_h == pytest.approx(0.07)
    assert p.r == 0.3
    assert p == nmr_params(0.3)


def test_equal_temperatures_valid_with_note():
    p = from_lab_units(2.5, 10, 10, 1.0, 0)
    assert p.beta_h == p.beta_c
    assert derive(p).notes


@pytest.mark.parametrize("kwargs,field", [
    (dict(freq_c_khz=2.5, ratio=1.0, energy_scale_pev=10, beta_ratio=0.7), "ratio"),
    (dict(freq_c_khz=0.0, ratio=10, energy_scale_pev=10, beta_ratio=0.7), "freq_c_khz"),
    (dict(freq_c_khz=2.5, ratio=10, energy_scale_pev=-1, beta_ratio=0.7), "energy_scale_pev"),
    (dict(freq_c_khz=2.5, ratio=10, energy_scale_pev=10, beta_ratio=0.0), "beta_ratio"),
])
def test_lab_units_validation(kwargs, field):
    with pytest.raises(ValidationError) as err:
        from_lab_units(**kwargs)
    assert err.value.field == field


@pytest.mark.parametrize("kwargs,field", [
    (dict(omega_c=-1.0, omega_h=2.0, beta_c=1.0, beta_h=1.0), "omega_c"),
    (dict(omega_c=2.0, omega_h=2.0, beta_c=1.0, beta_h=1.0), "omega_h"),
    (dict(omega_c=1.0, omega_h=2.0, beta_c=0.0, beta_h=1.0), "beta_c"),
    (dict(omega_c=1.0, omega_h=2.0, beta_c=1.0, beta_h=-1.0), "beta_h"),
    (dict(omega_c=1.0, omega_h=2.0, beta_c=1.0, beta_h=1.0, r=-0.1), "r"),
    (dict(omega_c=1.0, omega_h=float("nan"), beta_c=1.0, beta_h=1.0), "omega_h"),
])
def test_engine_validation(kwargs, field):
    with pytest.raises(ValidationError) as err:
        EngineParams(**kwargs)
    assert err.value.field == field
