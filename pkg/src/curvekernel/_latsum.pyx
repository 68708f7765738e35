# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice tail sums; same contract as ``_latsum_py.tail_sums``."""
import numpy as np


def tail_sums(const double complex[::1] z, const double complex[::1] w):
    cdef Py_ssize_t i, j, nz = z.shape[0], nw = w.shape[0]
    cdef double complex zi, q, d, q5, acc_z, acc_p
    s_zeta = np.empty(nz, dtype=np.complex128)
    s_wp = np.empty(nz, dtype=np.complex128)
    cdef double complex[::1] vz = s_zeta
    cdef double complex[::1] vp = s_wp
    for i in range(nz):
        zi = z[i]
        acc_z = 0
        acc_p = 0
        for j in range(nw):
            q = zi / w[j]
            d = zi - w[j]
            q5 = q * q
            q5 = q5 * q5 * q
            acc_z = acc_z + q5 * q / d
            acc_p = acc_p + q5 * (6.0 - 5.0 * q) / (d * d)
        vz[i] = acc_z
        vp[i] = acc_p
    return s_zeta, s_wp
