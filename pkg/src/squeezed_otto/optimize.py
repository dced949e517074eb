"""Maximum-work operating points and optimized efficiencies.

"Maximum power" here means maximum extracted work per cycle with respect to
the frequency gap at a fixed stroke protocol: ``omega_c`` is held fixed and
``omega_h`` varies. The closed forms hold in the high-temperature limit
(tanh theta ~ theta) and depend on the temperatures only through
``beta_ratio = beta_h/beta_c``.
"""
from dataclasses import dataclass
import math

import numpy as np

from . import thermo
from .errors import OutOfRegimeError, RangeError, ValidationError
from .params import zeta_of

GRID_POINTS = 1024
GOLDEN_RTOL = 1e-10
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptResult:
    """Optimal operating point. ``ratio`` is ``omega_c/omega_h``; all fields
    except ``mode`` are ``None`` when the engine cannot extract work."""

    ratio: float | None
    omega_h_star: float | None
    w_net_star: float | None
    eta_star: float | None
    mode: str

    @property
    def found(self):
        return self.ratio is not None


def _x(beta_ratio, r):
    if not beta_ratio > 0:
        raise ValidationError("beta_ratio must be positive", field="beta_ratio")
    if not r >= 0:
        raise ValidationError("r must be non-negative", field="r")
    return zeta_of(r) * beta_ratio


def _check_xi(xi):
    if not 0.0 <= xi < 0.5:
        raise RangeError(f"xi must lie in [0, 1/2), got {xi!r}")


def opt_ratio_highT(beta_ratio, r, xi):
    """``omega_c/omega_h`` at maximum extracted work (high-temperature limit)."""
    _check_xi(xi)
    x = _x(beta_ratio, r)
    ratio = 2.0 * x / ((1.0 - 2.0 * xi) * (1.0 + x))
    if not ratio < 1.0:
        raise OutOfRegimeError(f"optimal ratio {ratio!r} >= 1: no maximum-work point")
    return ratio


def opt_eff_tls(beta_ratio, r, xi):
    """Efficiency at maximum extracted work, any xi (high-temperature limit)."""
    opt_ratio_highT(beta_ratio, r, xi)
    x = _x(beta_ratio, r)
    a = (1.0 - 2.0 * xi) ** 2
    # 2 - a(1+x) rewritten as 4 xi (1-xi)(1+x) + (1-x) so that (1-x) cancels
    # exactly against the denominator as x -> 1
    num = 4.0 * xi * (1.0 - xi) * (1.0 + x) + (1.0 - x)
    return 1.0 - 2.0 * x * num / (a * (1.0 - x) * (1.0 + x))


def opt_work_highT(beta_ratio, r, xi):
    """Net work at the maximum-work ratio, in units of ``hbar k omega_c^2``
    where ``theta = k omega`` on the cold side. Negative means extraction."""
    ratio = opt_ratio_highT(beta_ratio, r, xi)
    x = _x(beta_ratio, r)
    rho = 1.0 / ratio
    return -0.5 * (rho - 1.0) * (1.0 - x * rho) + xi * rho * (1.0 + x)


def opt_extracting_highT(beta_ratio, r, xi):
    """True when a maximum-work point exists and actually extracts work."""
    try:
        return opt_work_highT(beta_ratio, r, xi) < 0.0
    except OutOfRegimeError:
        return False


def opt_eff_tls_quasistatic(beta_ratio, r):
    x = _x(beta_ratio, r)
    return 1.0 - 2.0 * x / (1.0 + x)


def opt_eff_ho_quasistatic(beta_ratio, r):
    """Harmonic-oscillator engine baseline ``1 - sqrt(zeta beta_h/beta_c)``."""
    x = _x(beta_ratio, r)
    if x > 1.0:
        raise OutOfRegimeError(f"zeta*beta_ratio = {x!r} > 1")
    return 1.0 - math.sqrt(x)


def numeric_max_work(p_base, xi, ratio_cap=100.0, grid_points=GRID_POINTS, rtol=GOLDEN_RTOL):
    """Exact-tanh maximizer of extracted work over ``omega_h`` in ``(omega_c, cap*omega_c]``.

    A uniform grid brackets the best probe (ties go to the smallest omega_h),
    then golden-section search refines it. Returns an empty :class:`OptResult`
    when no probe extracts work.
    """
    _check_xi(xi)
    if not ratio_cap > 1.0:
        raise ValidationError("ratio_cap must exceed 1", field="ratio_cap")
    wc = p_base.omega_c

    def extracted(omega_h):
        return -thermo.work_net(p_base.replace(omega_h=omega_h), xi)

    grid = wc * (1.0 + (ratio_cap - 1.0) * np.arange(1, grid_points + 1) / grid_points)
    values = np.array([extracted(w) for w in grid])
    best = int(np.argmax(values))
    if not values[best] > 0:
        return OptResult(None, None, None, None, "numeric_exact")

    lo = grid[best - 1] if best > 0 else wc * (1.0 + 1e-12)
    hi = grid[best + 1] if best + 1 < grid_points else grid[best]
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = extracted(c), extracted(d)
    while (b - a) > rtol * 0.5 * (a + b):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = extracted(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = extracted(d)
    w_star = float(0.5 * (a + b))
    f_star = float(extracted(w_star))
    if f_star < values[best]:
        w_star, f_star = float(grid[best]), float(values[best])
    p_star = p_base.replace(omega_h=w_star)
    eta = thermo.efficiency(p_star, xi) if xi < thermo.xi_max(p_star) else None
    return OptResult(wc / w_star, w_star, -f_star, eta, "numeric_exact")
