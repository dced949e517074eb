"""Closed-form cycle thermodynamics as functions of the adiabaticity xi.

Sign convention: positive heat flows into the working substance, negative
work flows out of it. The net work is taken as ``-(q_hot + q_cold)`` so the
first law closes exactly; its xi term is
``hbar xi (omega_h tanh theta_c + zeta omega_c tanh theta_h)``.
"""
from dataclasses import dataclass
import math

from .errors import OutOfRegimeError, RangeError
from .params import HBAR, derive


@dataclass(frozen=True)
class CycleThermo:
    q_hot: float
    q_cold: float
    w_net: float
    eta: float | None
    xi_max: float
    extracting: bool
    above_carnot: bool


def _check_xi(xi):
    if not 0.0 <= xi <= 1.0:
        raise RangeError(f"xi must lie in [0, 1], got {xi!r}")


def _polarizations(p):
    d = derive(p)
    return math.tanh(d.theta_c), d.zeta * math.tanh(d.theta_h)


def heat_hot(p, xi):
    """Heat absorbed from the squeezed hot reservoir (peV)."""
    _check_xi(xi)
    tc, ztH = _polarizations(p)
    return 0.5 * HBAR * p.omega_h * (tc - ztH) - HBAR * xi * p.omega_h * tc


def heat_cold(p, xi):
    """Heat exchanged with the cold reservoir (peV); negative when the engine runs."""
    _check_xi(xi)
    tc, ztH = _polarizations(p)
    return -0.5 * HBAR * p.omega_c * (tc - ztH) - HBAR * xi * p.omega_c * ztH


def work_net(p, xi):
    """Net work per cycle (peV); negative means work is extracted."""
    return -(heat_hot(p, xi) + heat_cold(p, xi))


def xi_max(p):
    """Largest xi still extracting work. Non-positive means no extraction at all."""
    tc, ztH = _polarizations(p)
    return (p.omega_h - p.omega_c) * (tc - ztH) / (2.0 * (p.omega_h * tc + p.omega_c * ztH))


def efficiency(p, xi):
    """Engine efficiency ``-w_net/q_hot``; only defined for ``0 <= xi < xi_max``."""
    _check_xi(xi)
    bound = xi_max(p)
    if not xi < bound:
        raise OutOfRegimeError(f"no work extraction at xi={xi!r} (xi_max={bound!r})")
    tc, ztH = _polarizations(p)
    gap = tc - ztH
    f = ztH / gap
    g = tc / gap
    return 1.0 - (p.omega_c / p.omega_h) * (1.0 + 2.0 * xi * f) / (1.0 - 2.0 * xi * g)


def carnot(p):
    return 1.0 - p.beta_h / p.beta_c


def cycle_thermo(p, xi):
    """All closed-form cycle quantities at once."""
    qh = heat_hot(p, xi)
    qc = heat_cold(p, xi)
    bound = xi_max(p)
    extracting = xi < bound
    eta = efficiency(p, xi) if extracting else None
    return CycleThermo(
        q_hot=qh,
        q_cold=qc,
        w_net=-(qh + qc),
        eta=eta,
        xi_max=bound,
        extracting=extracting,
        above_carnot=extracting and eta > carnot(p),
    )
