# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled time-ordered midpoint product for the sweep Hamiltonian."""
from libc.math cimport cos, sin, M_PI


cdef void _product(double omega_c, double omega_h, double tau, double t_start,
                   double dt, long n_steps, double* out) noexcept nogil:
    cdef double a_re = 1.0, a_im = 0.0, b_re = 0.0, b_im = 0.0
    cdef double s, w, phi, c, sn, sb_re, sb_im, na_re, na_im, nb_re, nb_im
    cdef long k
    for k in range(n_steps):
        s = (t_start + (k + 0.5) * dt) / tau
        w = omega_c * (1.0 - s) + omega_h * s
        phi = 0.5 * M_PI * s
        c = cos(0.5 * w * dt)
        sn = sin(0.5 * w * dt)
        # step = [[c, -conj(sb)], [sb, c]] with sb = -i sn e^{i phi}
        sb_re = sn * sin(phi)
        sb_im = -sn * cos(phi)
        # step @ U: a = c a - conj(sb) b ; b = sb a + c b
        na_re = c * a_re - (sb_re * b_re + sb_im * b_im)
        na_im = c * a_im - (sb_re * b_im - sb_im * b_re)
        nb_re = sb_re * a_re - sb_im * a_im + c * b_re
        nb_im = sb_re * a_im + sb_im * a_re + c * b_im
        a_re = na_re
        a_im = na_im
        b_re = nb_re
        b_im = nb_im
    out[0] = a_re
    out[1] = a_im
    out[2] = b_re
    out[3] = b_im


def midpoint_product(double omega_c, double omega_h, double tau,
                     double t_start, double t_end, long n_steps):
    """Return ``(a_re, a_im, b_re, b_im)`` of ``U = [[a, -conj(b)], [b, conj(a)]]``."""
    cdef double out[4]
    cdef double dt = (t_end - t_start) / n_steps
    with nogil:
        _product(omega_c, omega_h, tau, t_start, dt, n_steps, out)
    return out[0], out[1], out[2], out[3]
