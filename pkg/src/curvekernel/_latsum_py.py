"""Pure-numpy implementation of the lattice tail sums.

For a truncated lattice grid ``w`` (origin removed) and points ``z`` this
evaluates, with ``q = z/w``,

    s_zeta(z) = sum_w q^6 / (z - w)
    s_wp(z)   = sum_w q^5 (6 - 5 q) / (z - w)^2

These are the Taylor-corrected summands of the Weierstrass zeta and p
series: the corrections up to order q^5 telescope into the closed forms
above, so each term decays like |z/w|^5 / |w|^2 and the partial sums are
stable (no cancellation between large terms).
"""
from __future__ import annotations

import numpy as np

# Chunk size keeps the (chunk, grid) outer products below ~32 MB.
_CHUNK = 64


def tail_sums(z: np.ndarray, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return (s_zeta, s_wp) for 1-D complex arrays z against grid w."""
    z = np.ascontiguousarray(z, dtype=np.complex128)
    w = np.ascontiguousarray(w, dtype=np.complex128)
    s_zeta = np.empty(z.shape[0], dtype=np.complex128)
    s_wp = np.empty(z.shape[0], dtype=np.complex128)
    winv = 1.0 / w
    for lo in range(0, z.shape[0], _CHUNK):
        hi = min(lo + _CHUNK, z.shape[0])
        q = z[lo:hi, None] * winv[None, :]
        d = z[lo:hi, None] - w[None, :]
        q5 = q * q
        q5 *= q5
        q5 *= q
        s_zeta[lo:hi] = np.sum(q5 * q / d, axis=1)
        s_wp[lo:hi] = np.sum(q5 * (6.0 - 5.0 * q) / (d * d), axis=1)
    return s_zeta, s_wp
