"""Backend selection for the lattice tail sums.

The compiled extension is preferred when it was built; otherwise the numpy
implementation is used. Both expose ``tail_sums(z, w)`` with identical
semantics, and ``tests/test_lattice_backends.py`` pins their agreement.
"""
from __future__ import annotations

import numpy as np

try:
    from . import _latsum as _backend

    COMPILED = True
except ImportError:  # pragma: no cover - depends on build environment
    from . import _latsum_py as _backend

    COMPILED = False

from . import _latsum_py


def backend_name() -> str:
    return "compiled" if COMPILED else "numpy"


def tail_sums(z, w) -> tuple[np.ndarray, np.ndarray]:
    """Corrected lattice sums (s_zeta, s_wp) of ``z`` against grid ``w``.

    Accepts any array-like ``z``; the result has the same shape.
    """
    z = np.asarray(z, dtype=np.complex128)
    shape = z.shape
    s_zeta, s_wp = _backend.tail_sums(
        np.ascontiguousarray(z.ravel()), np.ascontiguousarray(w, dtype=np.complex128)
    )
    return s_zeta.reshape(shape), s_wp.reshape(shape)


def tail_sums_numpy(z, w) -> tuple[np.ndarray, np.ndarray]:
    """Always use the numpy fallback (benchmark and cross-checks)."""
    z = np.asarray(z, dtype=np.complex128)
    shape = z.shape
    s_zeta, s_wp = _latsum_py.tail_sums(
        np.ascontiguousarray(z.ravel()), np.ascontiguousarray(w, dtype=np.complex128)
    )
    return s_zeta.reshape(shape), s_wp.reshape(shape)
