"""Stroke-by-stroke density-matrix simulation of the four-stroke cycle.

Heat is the energy change on the fixed-Hamiltonian strokes, work the energy
change on the unitary strokes. Thermalization replaces the state with the
reservoir's asymptotic state outright.
"""
from dataclasses import dataclass
import cmath
import math

import numpy as np

from . import qmath
from .drive import Propagator
from .errors import ConsistencyError, ValidationError
from .states import Hamiltonian2, QubitState, energy, gibbs, squeezed_asymptotic

# columns are the eigenkets (+, -) of sigma_x and sigma_y
_BASIS_X = np.column_stack([qmath.PLUS_X, qmath.MINUS_X])
_BASIS_Y = np.column_stack([qmath.PLUS_Y, qmath.MINUS_Y])


@dataclass(frozen=True, eq=False)
class CycleLedger:
    rho1: QubitState
    rho2: QubitState
    rho3: QubitState
    rho4: QubitState
    e1c: float
    e2h: float
    e3h: float
    e4c: float
    q_cold: float
    q_hot: float
    w_expansion: float
    w_compression: float
    w_net: float
    xi_effective: float

    @property
    def closure(self):
        """Net energy change over the cycle; zero up to rounding."""
        return self.q_hot + self.q_cold + self.w_expansion + self.w_compression

    @property
    def scale(self):
        return max(abs(self.e1c), abs(self.e2h), abs(self.e3h), abs(self.e4c))

    @property
    def extracting(self):
        return self.w_net < 0 < self.q_hot and self.q_cold < 0

    @property
    def eta(self):
        return -self.w_net / self.q_hot if self.extracting else None


def synthetic_unitary(xi, phase=0.0):
    """Unitary with ``|<+_y|U|-_x>|^2 = xi``.

    Built in the eigenbases as ``U = B_y M B_x^dagger`` with
    ``M = e^{-i pi/4} [[c, i e^{-i phase} s], [i e^{i phase} s, c]]``,
    ``s = sqrt(xi)``. ``xi = 0`` maps ``|+-_x>`` onto ``|+-_y>``; ``xi = 1/2`` with
    ``phase = 0`` gives the identity. ``phase`` changes coherences only.
    """
    if not 0.0 <= xi <= 1.0:
        raise ValidationError("xi must lie in [0, 1]", field="xi")
    s = math.sqrt(xi)
    c = math.sqrt(1.0 - xi)
    m = cmath.exp(-0.25j * math.pi) * np.array(
        [[c, 1j * cmath.exp(-1j * phase) * s], [1j * cmath.exp(1j * phase) * s, c]],
        dtype=np.complex128,
    )
    return Propagator(_BASIS_Y @ m @ qmath.adjoint(_BASIS_X))


def _checked(rho, stroke):
    try:
        return QubitState(rho).check()
    except ConsistencyError as exc:
        raise ConsistencyError(f"after {stroke}: {exc}") from exc


def run_cycle(p, U):
    """Run one cycle of the engine ``p`` with expansion unitary ``U``."""
    u = U.u if isinstance(U, Propagator) else np.asarray(U, dtype=np.complex128)
    if qmath.unitarity_defect(u) > 1e-10:
        raise ValidationError("U is not unitary to 1e-10", field="U")
    ud = qmath.adjoint(u)
    h_c = Hamiltonian2("x", p.omega_c)
    h_h = Hamiltonian2("y", p.omega_h)

    rho1 = _checked(gibbs(h_c, p.beta_c).rho, "cooling")
    rho2 = _checked(u @ rho1.rho @ ud, "expansion")
    rho3 = _checked(squeezed_asymptotic(h_h, p.beta_h, p.r).rho, "heating")
    rho4 = _checked(ud @ rho3.rho @ u, "compression")

    e1c = energy(rho1, h_c)
    e2h = energy(rho2, h_h)
    e3h = energy(rho3, h_h)
    e4c = energy(rho4, h_c)
    w_exp = e2h - e1c
    w_comp = e4c - e3h
    return CycleLedger(
        rho1=rho1, rho2=rho2, rho3=rho3, rho4=rho4,
        e1c=e1c, e2h=e2h, e3h=e3h, e4c=e4c,
        q_cold=e1c - e4c,
        q_hot=e3h - e2h,
        w_expansion=w_exp,
        w_compression=w_comp,
        w_net=w_exp + w_comp,
        xi_effective=qmath.transition_probability(u, qmath.PLUS_Y, qmath.MINUS_X),
    )
