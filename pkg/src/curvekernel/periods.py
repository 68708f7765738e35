r"""Numerical periods of real hyperelliptic curves y^2 = f(x).

Supported input class: f with real coefficients, degree 2g+1 or 2g+2, and
all roots real and pairwise distinct. For sorted roots e_1 < ... < e_d the
branch cuts are [e_1, e_2], [e_3, e_4], ...; the homology convention is

* a_i encircles cut i = [e_{2i-1}, e_{2i}],
* b_i runs from cut i through the gaps to the last cut; only the gap
  segments contribute (the sheets glue across the cuts, so those pieces
  cancel between the outgoing and returning branch).

On segment m = [e_m, e_{m+1}] the branch of y is i^(d-m) sqrt|f| (times i
if the leading coefficient is negative): the square root is positive right
of the largest root and gains a factor i across each branch point, which
is the analytic continuation through the upper half-plane. Segment
integrals of x^(k-1)/y use Gauss-Chebyshev nodes, which absorb the
inverse-square-root endpoint singularities exactly; the remaining factor
is analytic on the closed segment so convergence is spectral.

None of this bookkeeping is trusted blindly: every computed period matrix
must pass the Riemann-relation certificate (Z symmetric, Im Z positive
definite) or ``compute_periods`` raises ``RiemannRelationError``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BranchPointProximityError,
    DegreeError,
    DimensionMismatchError,
    RiemannRelationError,
    RootConfigurationError,
    SingularSystemError,
)

#: Default |y| below which differential evaluation is refused.
BRANCH_EXCLUSION = 1e-6
#: Default Frobenius-norm tolerance on Z - Z^T.
TOL_RIEMANN = 1e-8


@dataclass(frozen=True, eq=False)
class HyperellipticCurve:
    """y^2 = f(x) with real squarefree f; coefficients are ascending in x."""

    f_coeffs: tuple[float, ...]
    roots: np.ndarray
    g: int

    @property
    def degree(self) -> int:
        return len(self.f_coeffs) - 1

    @property
    def leading(self) -> float:
        return self.f_coeffs[-1]

    def f(self, x):
        return np.polynomial.polynomial.polyval(x, np.asarray(self.f_coeffs))


def build_curve(f_coeffs, min_root_gap: float = 1e-8, imag_tol: float = 1e-9) -> HyperellipticCurve:
    coeffs = [float(c) for c in f_coeffs]
    while coeffs and coeffs[-1] == 0.0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg < 3:
        raise DegreeError(f"degree must be at least 3, got {deg}")
    roots = np.polynomial.polynomial.polyroots(coeffs)
    if np.abs(roots.imag).max() > imag_tol:
        raise RootConfigurationError("f has non-real roots; only real branch points are supported")
    roots = np.sort(roots.real)
    if np.diff(roots).min() <= min_root_gap:
        raise RootConfigurationError(
            f"f is not squarefree at working precision (min root gap <= {min_root_gap:g})"
        )
    g = (deg - 1) // 2
    return HyperellipticCurve(f_coeffs=tuple(coeffs), roots=roots, g=g)


@dataclass(frozen=True)
class CurvePoint:
    """A point (x, y) with the sheet recording the chosen branch of sqrt f."""

    x: complex
    sheet: int
    y: complex


def curve_point(curve: HyperellipticCurve, x, sheet: int = 1, exclusion: float = BRANCH_EXCLUSION) -> CurvePoint:
    if sheet not in (1, -1):
        raise DimensionMismatchError(f"sheet must be +1 or -1, got {sheet}")
    y = sheet * np.sqrt(complex(curve.f(complex(x))))
    if abs(y) <= exclusion:
        raise BranchPointProximityError(
            f"|y| = {abs(y):.3e} at x = {x}: too close to a branch point"
        )
    return CurvePoint(x=complex(x), sheet=sheet, y=complex(y))


@dataclass(frozen=True)
class TangentVector:
    """lam * d/dz at a curve point, z = x - x0 the affine chart coordinate."""

    base: CurvePoint
    lam: complex


def tangent(curve: HyperellipticCurve, x, sheet: int = 1, lam=1.0) -> TangentVector:
    return TangentVector(base=curve_point(curve, x, sheet), lam=complex(lam))


def raw_differential_eval(curve: HyperellipticCurve, k: int, u: TangentVector) -> complex:
    """Value of x^(k-1) dx / y on the tangent vector u."""
    if not 1 <= k <= curve.g:
        raise DimensionMismatchError(f"differential index must be in 1..{curve.g}, got {k}")
    return u.lam * u.base.x ** (k - 1) / u.base.y


def _chebyshev_nodes(order: int) -> tuple[np.ndarray, float]:
    j = np.arange(1, order + 1)
    return np.cos((2 * j - 1) * np.pi / (2 * order)), np.pi / order


def _segment_integrals(curve: HyperellipticCurve, order: int) -> np.ndarray:
    """J[m, k] = integral over segment m+1 of x^k / y dx, branch phases included."""
    e = curve.roots
    d = curve.degree
    g = curve.g
    nseg = d - 1
    t, weight = _chebyshev_nodes(order)
    out = np.empty((nseg, g), dtype=complex)
    lead_phase = 1.0 if curve.leading > 0 else 1j
    for m in range(1, nseg + 1):
        a, b = e[m - 1], e[m]
        c, r = 0.5 * (a + b), 0.5 * (b - a)
        x = c + r * t
        rest = np.full_like(x, abs(curve.leading))
        for l in range(d):
            if l not in (m - 1, m):
                rest *= np.abs(x - e[l])
        base = 1.0 / np.sqrt(rest)
        phase = lead_phase * 1j ** (d - m)
        for k in range(g):
            out[m - 1, k] = weight * np.sum(x**k * base) / phase
    return out


def compute_periods(
    curve: HyperellipticCurve, quad_order: int = 64, tol_riemann: float = TOL_RIEMANN
) -> "PeriodData":
    """Assemble the a/b period matrices of the basis x^(k-1) dx / y.

    The normalized period matrix Z = A^{-1} B must pass the Riemann
    certificate, which is what validates the cycle convention a posteriori.
    """
    if quad_order < 8:
        raise DimensionMismatchError(f"quad_order must be >= 8, got {quad_order}")
    g = curve.g
    segs = _segment_integrals(curve, quad_order)
    A = np.empty((g, g), dtype=complex)
    B = np.empty((g, g), dtype=complex)
    for i in range(1, g + 1):
        A[:, i - 1] = 2 * segs[2 * i - 2]
        B[:, i - 1] = 2 * segs[2 * i - 1 :: 2].sum(axis=0)  # gap segments only
    return _period_data(curve, A, B, quad_order, tol_riemann)


def _period_data(curve, A, B, quad_order, tol_riemann) -> "PeriodData":
    try:
        Z = np.linalg.solve(A, B)
        N = np.linalg.inv(A)
    except np.linalg.LinAlgError as err:
        raise SingularSystemError("a-period matrix is singular") from err
    residual = float(np.linalg.norm(Z - Z.T))
    min_eig = float(np.linalg.eigvalsh((Z - Z.conj().T) / 2j).min())
    if residual > tol_riemann or min_eig <= 0:
        raise RiemannRelationError(
            "Riemann relations violated "
            f"(||Z - Z^T|| = {residual:.3e}, min eig Im Z = {min_eig:.3e}); "
            "quadrature under-resolved or cycle convention not symplectic"
        )
    return PeriodData(
        curve=curve,
        A=A,
        B=B,
        Z=Z,
        N=N,
        quad_order=quad_order,
        riemann_residual=residual,
        min_eig_imZ=min_eig,
    )


@dataclass(frozen=True, eq=False)
class PeriodData:
    """Periods of a curve: raw matrices A, B, normalization N = A^{-1}, Z = N B."""

    curve: HyperellipticCurve
    A: np.ndarray
    B: np.ndarray
    Z: np.ndarray
    N: np.ndarray
    quad_order: int
    riemann_residual: float
    min_eig_imZ: float

    @property
    def g(self) -> int:
        return self.curve.g


def normalized_differential_eval(pd: PeriodData, i: int, u: TangentVector) -> complex:
    """Value of the i-th a-normalized differential on u."""
    if not 1 <= i <= pd.g:
        raise DimensionMismatchError(f"differential index must be in 1..{pd.g}, got {i}")
    raw = np.array([raw_differential_eval(pd.curve, k, u) for k in range(1, pd.g + 1)])
    return complex(pd.N[i - 1] @ raw)


def period_vector(pd: PeriodData, coeffs, conjugated: bool = False) -> np.ndarray:
    """Coordinates in (a* | b*) of a class given in the normalized basis.

    Unconjugated classes map to (coeffs | coeffs @ Z); conjugated ones to
    the entrywise conjugate.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.shape != (pd.g,):
        raise DimensionMismatchError(f"expected {pd.g} coefficients, got shape {coeffs.shape}")
    vec = np.concatenate([coeffs, coeffs @ pd.Z])
    return vec.conj() if conjugated else vec


def transform_cycles(pd: PeriodData, S, tol_riemann: float = TOL_RIEMANN) -> PeriodData:
    """Periods in a new homology basis (a'|b') = S (a|b), S integer symplectic.

    The transformed matrices are re-certified; a non-symplectic S surfaces
    as a ``RiemannRelationError``.
    """
    S = np.asarray(S)
    g = pd.g
    if S.shape != (2 * g, 2 * g):
        raise DimensionMismatchError(f"expected a {2 * g}x{2 * g} cycle matrix, got {S.shape}")
    periods = np.hstack([pd.A, pd.B]) @ S.T
    return _period_data(pd.curve, periods[:, :g], periods[:, g:], pd.quad_order, tol_riemann)
