"""Numerical periods, Bergman kernels, and the Siegel-space bracket of curves.

Subpackage map:

* ``symplectic``: symplectic spaces, complex structures, duality maps.
* ``siegel``: Cartan decomposition and the bracket tensor in two pictures.
* ``periods``: hyperelliptic curves, period matrices, Riemann certificate.
* ``bergman``: Hodge product, reproducing elements, kernel evaluation.
* ``torelli``: point-supported cup products and the bracket/kernel identity.
* ``weierstrass`` / ``torus``: genus-one lattice functions, potentials and
  the exactness check for the connecting form.
* ``cli``: batch commands with JSON reports.
"""

from . import bergman, lattice_sums, periods, siegel, symplectic, torelli, torus, weierstrass
from .errors import CurveKernelError

__version__ = "0.1.0"

__all__ = [
    "CurveKernelError",
    "__version__",
    "bergman",
    "lattice_sums",
    "periods",
    "siegel",
    "symplectic",
    "torelli",
    "torus",
    "weierstrass",
]
