import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from squeezed_otto import EngineParams, nmr_params, thermo
from squeezed_otto.errors import OutOfRegimeError, RangeError
from squeezed_otto.optimize import (numeric_max_work, opt_eff_ho_quasistatic, opt_eff_tls,
                                    opt_eff_tls_quasistatic, opt_extracting_highT,
                                    opt_ratio_highT, opt_work_highT)
from squeezed_otto.params import zeta_of


def test_ratio_no_squeezing():
    assert opt_ratio_highT(0.7, 0.0, 0.0) == pytest.approx(1.4 / 1.7, abs=1e-15)


def test_ratio_limits():
    assert opt_ratio_highT(0.7, 20.0, 0.0) < 1e-30
    with pytest.raises(OutOfRegimeError):
        opt_ratio_highT(0.7, 0.0, 0.49)
    with pytest.raises(RangeError):
        opt_ratio_highT(0.7, 0.0, 0.5)


def test_eff_tls_reduces_to_quasistatic():
    assert opt_eff_tls(0.7, 0.0, 0.0) == pytest.approx(0.176470588235294, abs=1e-6)
    assert opt_eff_tls_quasistatic(0.7, 0.0) == pytest.approx(3.0 / 17.0, abs=1e-15)


def test_eff_tls_finite_time():
    # x = zeta(1) * 0.7 = 0.0494558
    assert zeta_of(1.0) * 0.7 == pytest.approx(0.04945557739721513, abs=1e-15)
    assert opt_eff_tls(0.7, 1.0, 0.15) == pytest.approx(0.699348514224990, abs=1e-12)


def test_eff_tls_against_exact_efficiency_at_small_theta():
    """Optimal ratio fed into the exact efficiency with theta ~ 1e-4."""
    beta_ratio, r, xi = 0.7, 1.0, 0.15
    ratio = opt_ratio_highT(beta_ratio, r, xi)
    omega_c = 1e4
    beta_c = 2e-4 / (6.582119569e-4 * omega_c)
    p = EngineParams(omega_c, omega_c / ratio, beta_c, beta_ratio * beta_c, r)
    assert thermo.efficiency(p, xi) == pytest.approx(opt_eff_tls(beta_ratio, r, xi), abs=1e-6)


def test_unit_efficiency_trend():
    assert zeta_of(2.56) == pytest.approx(1.428e-4, rel=1e-3)
    assert opt_eff_tls(0.7, 2.56, 0.4) >= 0.99


def test_quasistatic_examples():
    assert opt_eff_tls_quasistatic(0.7, 0.0) == pytest.approx(0.176471, abs=1e-6)
    assert opt_eff_tls_quasistatic(1.0, 0.0) == 0.0
    assert opt_eff_tls_quasistatic(0.7, 30.0) == pytest.approx(1.0, abs=1e-12)


def test_ho_examples():
    assert opt_eff_ho_quasistatic(0.7, 0.0) == pytest.approx(1 - math.sqrt(0.7), abs=1e-15)
    assert opt_eff_ho_quasistatic(0.7, 0.0) == pytest.approx(0.163340, abs=1e-6)
    assert opt_eff_ho_quasistatic(1.0, 0.0) == 0.0
    assert opt_eff_ho_quasistatic(0.7, 1.0) == pytest.approx(0.777613900170862, abs=1e-12)
    with pytest.raises(OutOfRegimeError):
        opt_eff_ho_quasistatic(1.5, 0.0)


def test_stationary_point_not_always_extracting():
    # maximum of the work exists but the work there is still positive
    assert opt_ratio_highT(0.7, 0.5, 0.1) < 1
    assert opt_work_highT(0.7, 0.5, 0.1) > 0
    assert not opt_extracting_highT(0.7, 0.5, 0.1)
    assert opt_extracting_highT(0.7, 0.0, 0.0)


@settings(max_examples=1000, deadline=None)
@given(beta_ratio=st.floats(1e-3, 0.999), r=st.floats(0.0, 5.0))
def test_tls_dominates_ho(beta_ratio, r):
    x = zeta_of(r) * beta_ratio
    tls = opt_eff_tls_quasistatic(beta_ratio, r)
    ho = opt_eff_ho_quasistatic(beta_ratio, r)
    assert tls >= ho
    if x < 0.99:
        assert tls > ho


@settings(max_examples=500, deadline=None)
@given(beta_ratio=st.floats(1e-3, 2.0), r=st.floats(0.0, 5.0))
def test_optimized_efficiency_matches_quasistatic_at_xi_zero(beta_ratio, r):
    try:
        eta_opt = opt_eff_tls(beta_ratio, r, 0.0)
    except OutOfRegimeError:
        return
    assert eta_opt == pytest.approx(opt_eff_tls_quasistatic(beta_ratio, r), abs=1e-14)


@pytest.mark.parametrize("xi", [0.0, 0.1, 0.2, 0.3, 0.4])
def test_eff_tls_increasing_in_r(xi):
    rs = np.linspace(0.0, 3.0, 301)
    etas = [opt_eff_tls(0.7, r, xi) for r in rs if opt_extracting_highT(0.7, r, xi)]
    assert len(etas) > 10
    assert all(a < b for a, b in zip(etas, etas[1:]))


class TestNumericMaxWork:
    @pytest.mark.parametrize("r,xi", [(0.0, 0.0), (0.3, 0.0), (0.5, 0.0), (1.0, 0.1), (1.0, 0.25), (1.5, 0.3)])
    def test_high_temperature_limit(self, r, xi):
        p = nmr_params(r)
        p = p.replace(beta_c=p.beta_c * 1e-3, beta_h=p.beta_h * 1e-3)
        res = numeric_max_work(p, xi)
        assert res.found
        assert res.ratio == pytest.approx(opt_ratio_highT(0.7, r, xi), rel=1e-4)
        assert res.eta_star == pytest.approx(opt_eff_tls(0.7, r, xi), abs=1e-4)

    def test_nmr_no_squeezing_against_dense_grid(self):
        p = nmr_params(0.0)
        res = numeric_max_work(p, 0.0, ratio_cap=100.0)
        assert res.found and res.w_net_star < 0
        q = p.replace(omega_h=res.omega_h_star)
        assert derive_gate(q)
        brute = zoom_grid_min(lambda w: thermo.work_net(p.replace(omega_h=w), 0.0),
                              p.omega_c * 1.000001, 100.0 * p.omega_c)
        assert res.w_net_star <= brute + 1e-12 * abs(brute)
        assert res.w_net_star == pytest.approx(brute, rel=1e-10)

    def test_certified_against_probe_grid(self):
        p = nmr_params(0.0)
        res = numeric_max_work(p, 0.0)
        probes = p.omega_c * (1.0 + 99.0 * np.arange(1, 1025) / 1024)
        assert all(res.w_net_star <= thermo.work_net(p.replace(omega_h=w), 0.0) for w in probes)

    def test_stationarity(self):
        p = nmr_params(0.0)
        res = numeric_max_work(p, 0.0)
        w = res.omega_h_star
        h = 1e-4 * w
        f = lambda om: thermo.work_net(p.replace(omega_h=om), 0.0)
        slope = (f(w + h) - f(w - h)) / (2 * h)
        curvature = (f(w + h) - 2 * f(w) + f(w - h)) / h**2
        assert abs(slope) <= 1e-6 * abs(curvature) * w

    def test_no_operating_point(self):
        p = nmr_params(0.0).replace(beta_h=0.1)
        res = numeric_max_work(p, 0.0)
        assert not res.found and res.mode == "numeric_exact"


def derive_gate(p):
    from squeezed_otto import derive
    d = derive(p)
    return d.zeta * math.tanh(d.theta_h) < math.tanh(d.theta_c)


def zoom_grid_min(f, lo, hi, points=4001, rounds=3):
    """Brute-force minimum: uniform grid, then re-grid around the best cell."""
    for _ in range(rounds):
        grid = np.linspace(lo, hi, points)
        vals = np.array([f(w) for w in grid])
        k = int(np.argmin(vals))
        lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, points - 1)]
    return float(vals[k])
