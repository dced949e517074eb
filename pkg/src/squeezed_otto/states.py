"""Boundary states of the cycle and their energies."""
from dataclasses import dataclass

import numpy as np

from . import qmath
from .errors import ConsistencyError, ValidationError
from .params import HBAR, zeta_of

STATE_TOL = 1e-12


@dataclass(frozen=True)
class Hamiltonian2:
    """``(1/2) hbar omega sigma_axis`` in peV, axis in {'x', 'y'}."""

    axis: str
    omega: float

    def __post_init__(self):
        if self.axis not in ("x", "y"):
            raise ValidationError(f"axis must be 'x' or 'y', got {self.axis!r}", field="axis")

    @property
    def h(self):
        return 0.5 * HBAR * self.omega * qmath.pauli(self.axis)

    def ground(self):
        return qmath.eigenket(self.axis, -1)

    def excited(self):
        return qmath.eigenket(self.axis, +1)


@dataclass(frozen=True, eq=False)
class QubitState:
    rho: np.ndarray

    def check(self, tol=STATE_TOL):
        """Raise :class:`ConsistencyError` unless rho is a density matrix."""
        rho = self.rho
        if rho.shape != (2, 2) or not np.all(np.isfinite(rho)):
            raise ConsistencyError("density matrix must be a finite 2x2 array")
        if abs(qmath.trace(rho) - 1.0) > tol:
            raise ConsistencyError(f"trace {qmath.trace(rho)!r} != 1")
        if not qmath.is_hermitian(rho, tol):
            raise ConsistencyError("density matrix is not Hermitian")
        if np.min(np.linalg.eigvalsh(rho)) < -tol:
            raise ConsistencyError("density matrix has a negative eigenvalue")
        return self

    def population(self, ket):
        return float(np.real(qmath.inner(ket, self.rho @ ket)))

    def polarization(self, axis):
        """``Tr(rho sigma_axis)``."""
        return float(np.real(qmath.trace(self.rho @ qmath.pauli(axis))))


def polarized_state(axis, polarization):
    """``(I + p sigma_axis)/2``, the diagonal state with Bloch component p."""
    return QubitState(0.5 * (qmath.IDENTITY + polarization * qmath.pauli(axis)))


def gibbs(H, beta):
    """Thermal state ``exp(-beta H)/Z``.

    For ``H = (1/2) hbar omega sigma`` this is exactly ``(I - tanh(theta) sigma)/2``,
    which avoids overflow of the exponentials at large beta.
    """
    if not beta > 0:
        raise ValidationError("beta must be positive", field="beta")
    th = 0.5 * beta * HBAR * H.omega
    return polarized_state(H.axis, -np.tanh(th))


def squeezed_asymptotic(H_h, beta_h, r):
    """Steady state left by the squeezed hot reservoir.

    Diagonal in the eigenbasis of ``H_h`` with polarization ``-zeta tanh(theta_h)``,
    so the squeezing only shrinks the thermal polarization by ``zeta = sech^2(2r)``.
    """
    if not beta_h > 0:
        raise ValidationError("beta_h must be positive", field="beta_h")
    if not r >= 0:
        raise ValidationError("r must be non-negative", field="r")
    th = 0.5 * beta_h * HBAR * H_h.omega
    return polarized_state(H_h.axis, -zeta_of(r) * np.tanh(th))


def energy(s, H):
    """``Tr(rho H)`` in peV."""
    e = qmath.trace(s.rho @ H.h)
    scale = 0.5 * HBAR * abs(H.omega)
    if abs(e.imag) > 1e-9 * max(scale, 1.0):
        raise ConsistencyError(f"energy has imaginary part {e.imag!r}")
    return float(e.real)
