"""Fixed-convention 2x2 complex linear algebra.

Matrices are ``numpy`` arrays of shape ``(2, 2)`` and dtype ``complex128``,
kets are arrays of shape ``(2,)``. Everything is written in the sigma_z basis
with the eigenbasis phases fixed below, so intermediate values are
reproducible bit for bit.
"""
import numpy as np

from .errors import ValidationError

TOL = 1e-12

IDENTITY = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

_SQRT_HALF = 1.0 / np.sqrt(2.0)
PLUS_X = np.array([1, 1], dtype=np.complex128) * _SQRT_HALF
MINUS_X = np.array([1, -1], dtype=np.complex128) * _SQRT_HALF
PLUS_Y = np.array([1, 1j], dtype=np.complex128) * _SQRT_HALF
MINUS_Y = np.array([1, -1j], dtype=np.complex128) * _SQRT_HALF

_PAULI = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}
_KETS = {("x", +1): PLUS_X, ("x", -1): MINUS_X, ("y", +1): PLUS_Y, ("y", -1): MINUS_Y}


def pauli(axis):
    """Return a fresh copy of the Pauli matrix for ``axis`` in {'x', 'y', 'z'}."""
    try:
        return _PAULI[axis].copy()
    except KeyError:
        raise ValidationError(f"unknown Pauli axis {axis!r}", field="axis") from None


def eigenket(axis, sign):
    """Eigenket of sigma_axis with eigenvalue ``sign`` (+1 or -1), fixed phase."""
    try:
        return _KETS[(axis, int(sign))].copy()
    except KeyError:
        raise ValidationError(f"no fixed eigenket for axis={axis!r}, sign={sign!r}") from None


def expm_su2(a, nx, ny, nz):
    """Closed-form ``exp(-i a n.sigma) = cos(a) I - i sin(a) n.sigma``.

    The direction ``(nx, ny, nz)`` must be a unit vector to within ``1e-12``.
    """
    norm = np.sqrt(nx * nx + ny * ny + nz * nz)
    if not np.isfinite(a) or abs(norm - 1.0) > TOL:
        raise ValidationError(f"direction must be a unit vector, |n| = {norm!r}", field="n")
    c, s = np.cos(a), np.sin(a)
    return np.array(
        [[c - 1j * s * nz, -1j * s * (nx - 1j * ny)],
         [-1j * s * (nx + 1j * ny), c + 1j * s * nz]],
        dtype=np.complex128,
    )


def matmul(a, b):
    return a @ b


def adjoint(a):
    return np.conj(np.transpose(a))


def trace(a):
    return complex(a[0, 0] + a[1, 1])


def apply(a, v):
    return a @ v


def inner(u, v):
    """``<u|v>``, conjugate-linear in the first argument."""
    return complex(np.vdot(u, v))


def outer(u, v):
    """``|u><v|``."""
    return np.outer(u, np.conj(v))


def is_hermitian(a, tol=TOL):
    return bool(np.max(np.abs(a - adjoint(a))) <= tol)


def is_unitary(u, tol=TOL):
    return bool(np.max(np.abs(adjoint(u) @ u - IDENTITY)) <= tol)


def unitarity_defect(u):
    """Max-abs entry of ``U^dagger U - I``."""
    return float(np.max(np.abs(adjoint(u) @ u - IDENTITY)))


def transition_probability(u, bra, ket):
    """``|<bra|U|ket>|^2``."""
    return abs(inner(bra, u @ ket)) ** 2
