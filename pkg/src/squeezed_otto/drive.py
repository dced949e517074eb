"""Sweep Hamiltonian of the unitary strokes, its propagator, and the
adiabaticity parameter xi.

The drive rotates the field from the x axis to the y axis while the splitting
ramps linearly from ``omega_c`` to ``omega_h``::

    H(t) = (hbar/2) [omega_c (1 - t/tau) + omega_h t/tau]
           [cos(pi t / 2 tau) sigma_x + sin(pi t / 2 tau) sigma_y]

The propagator is a product of exact SU(2) exponentials of the midpoint
Hamiltonian, latest step on the left.
"""
from dataclasses import dataclass
import math

import numpy as np

from . import qmath
from ._backend import BACKEND, midpoint_product
from .errors import NonConvergenceError, NotFoundError, RangeError, ValidationError
from .params import HBAR

XI_TOL = 1e-10
START_STEPS = 1024
MAX_STEPS = 1 << 22


@dataclass(frozen=True)
class DriveSchedule:
    omega_c: float
    omega_h: float
    tau: float = 0.0

    def __post_init__(self):
        if not (self.omega_c > 0 and self.omega_h > self.omega_c):
            raise ValidationError("need omega_h > omega_c > 0", field="omega_h")
        if not (math.isfinite(self.tau) and self.tau >= 0):
            raise ValidationError("tau must be finite and non-negative", field="tau")

    @classmethod
    def from_params(cls, p, tau=0.0):
        return cls(p.omega_c, p.omega_h, tau)

    def with_tau(self, tau):
        return DriveSchedule(self.omega_c, self.omega_h, tau)


@dataclass(frozen=True, eq=False)
class Propagator:
    u: np.ndarray
    steps_used: int = 0
    converged: bool = True

    def __post_init__(self):
        if qmath.unitarity_defect(self.u) > 1e-10:
            raise ValidationError("propagator is not unitary to 1e-10", field="u")

    @property
    def xi(self):
        """``|<+_y|U|-_x>|^2``."""
        return qmath.transition_probability(self.u, qmath.PLUS_Y, qmath.MINUS_X)

    @property
    def xi_mirror(self):
        """``|<-_y|U|+_x>|^2``; equal to :attr:`xi` for any 2x2 unitary."""
        return qmath.transition_probability(self.u, qmath.MINUS_Y, qmath.PLUS_X)


def hamiltonian_at(s, t):
    """Drive Hamiltonian (peV) at time ``t`` in ``[0, tau]``."""
    if not s.tau > 0:
        raise RangeError("hamiltonian_at needs tau > 0")
    if not 0.0 <= t <= s.tau:
        raise RangeError(f"t = {t!r} outside [0, {s.tau!r}]")
    frac = t / s.tau
    w = s.omega_c * (1.0 - frac) + s.omega_h * frac
    phi = 0.5 * math.pi * frac
    return 0.5 * HBAR * w * (math.cos(phi) * qmath.SIGMA_X + math.sin(phi) * qmath.SIGMA_Y)


def _su2(a_re, a_im, b_re, b_im):
    a = complex(a_re, a_im)
    b = complex(b_re, b_im)
    return np.array([[a, -b.conjugate()], [b, a.conjugate()]], dtype=np.complex128)


def propagate(s, n_steps, t_start=0.0, t_end=None, kernel=None):
    """Time-ordered propagator over ``[t_start, t_end]`` (default the whole stroke).

    ``kernel`` overrides the import-time backend; it must follow the
    ``midpoint_product`` signature.
    """
    n_steps = int(n_steps)
    if n_steps < 1:
        raise ValidationError("n_steps must be >= 1", field="n_steps")
    if not s.tau > 0:
        raise RangeError("propagate needs tau > 0; use the identity for a sudden quench")
    t_end = s.tau if t_end is None else t_end
    if not 0.0 <= t_start <= t_end <= s.tau:
        raise RangeError("need 0 <= t_start <= t_end <= tau")
    kernel = midpoint_product if kernel is None else kernel
    u = _su2(*kernel(float(s.omega_c), float(s.omega_h), float(s.tau),
                     float(t_start), float(t_end), n_steps))
    return Propagator(u, steps_used=n_steps, converged=False)


@dataclass(frozen=True)
class XiResult:
    xi: float
    steps_used: int
    converged: bool
    propagator: Propagator
    previous: float = math.nan


def adiabaticity_xi(s, tol=XI_TOL, start_steps=START_STEPS, max_steps=MAX_STEPS, kernel=None):
    """Converged adiabaticity parameter for the schedule ``s``.

    Doubles the step count from ``start_steps`` until successive xi estimates
    agree to ``tol``. Raises :class:`NonConvergenceError` past ``max_steps``.
    """
    if s.tau == 0.0:
        prop = Propagator(qmath.IDENTITY.copy(), steps_used=0, converged=True)
        return XiResult(prop.xi, 0, True, prop)
    n = start_steps
    prev = cur = propagate(s, n, kernel=kernel).xi
    while True:
        n *= 2
        if n > max_steps:
            raise NonConvergenceError(
                f"xi not converged to {tol} within {max_steps} steps at tau={s.tau!r}",
                estimates=(prev, cur),
            )
        prop = propagate(s, n, kernel=kernel)
        cur = prop.xi
        if abs(cur - prev) < tol:
            if abs(prop.xi_mirror - cur) > 1e-10:
                raise NonConvergenceError("two-sided xi definitions disagree", estimates=(cur, prop.xi_mirror))
            prop = Propagator(prop.u, steps_used=n, converged=True)
            return XiResult(cur, n, True, prop, previous=prev)
        prev = cur


def xi_to_tau(s, xi_target, tau_max=1e-3, grid_step=5e-6, refinements=40, **kw):
    """Shortest stroke duration after which xi stays at or below ``xi_target``.

    ``xi(tau)`` oscillates while it decays, so the crossing is taken on the
    upper envelope: scan a grid of spacing ``grid_step`` up to ``tau_max``,
    find the last grid point still above the target, then bisect the downward
    crossing inside the following cell. Oscillation peaks narrower than the
    grid spacing are not resolved. ``s.tau`` is ignored.
    """
    if not 0.0 < xi_target < 0.5:
        raise RangeError("xi_target must lie in (0, 1/2)")
    n = int(math.ceil(tau_max / grid_step))
    taus = np.arange(n + 1) * grid_step
    xis = np.array([adiabaticity_xi(s.with_tau(float(t)), **kw).xi for t in taus])
    above = np.nonzero(xis > xi_target)[0]
    last = int(above[-1])
    if last == n:
        raise NotFoundError(f"xi is still above {xi_target} at tau = {taus[-1]!r} s")
    lo, hi = float(taus[last]), float(taus[last + 1])
    for _ in range(refinements):
        mid = 0.5 * (lo + hi)
        if adiabaticity_xi(s.with_tau(mid), **kw).xi <= xi_target:
            hi = mid
        else:
            lo = mid
    return hi
