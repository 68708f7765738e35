r"""Genus-one closed forms: elementary potentials, the meromorphic
bidifferential with double pole on the diagonal, the connecting 1-form,
and the numerical exactness check on the doubled torus.

With F(z) = -zeta(z) + c1 z + c2 conj(z) (single-valued by construction of
c1, c2), the potential centered at x for the unit tangent is F(z - x); it
is harmonic off the lattice with principal part -1/(z - x). Its derivative
components are

    d/dz F = p(z) + c1         (zeta' = -p),
    d/dzbar F = c2,

so the bidifferential value is lam_u lam_v (p(zp - zq) + c1) and the
antiholomorphic derivative is the constant that ties into the kernel form:
c2 = 2 pi * (kernel diagonal coefficient) = pi / area.

``theorem_b_check`` verifies, sample by sample, that the connecting form's
holomorphic derivative reproduces the bidifferential and its
antiholomorphic derivative reproduces -2 pi times the kernel; both
analytic derivatives are additionally cross-checked against central finite
differences of ``alpha_eval``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bergman import BergmanContext, bergman_eval, context_from_gram
from .errors import PoleError
from .periods import CurvePoint, TangentVector
from .weierstrass import LatticeContext, wp, wzeta


@dataclass(frozen=True, eq=False)
class EtaEvaluator:
    """Evaluators for the bidifferential and the connecting form on a lattice."""

    lattice: LatticeContext


def torus_tangent(z, lam=1.0) -> TangentVector:
    """Tangent vector lam * d/dz at a point of the torus chart."""
    return TangentVector(base=CurvePoint(x=complex(z), sheet=1, y=1.0), lam=complex(lam))


def torus_bergman_context(lat: LatticeContext) -> BergmanContext:
    """Bergman context of the torus: h(dz, dz) = 2 * area."""
    gram = np.array([[2.0 * lat.area]], dtype=complex)

    def eval_basis(u: TangentVector) -> np.ndarray:
        return np.array([u.lam], dtype=complex)

    return context_from_gram(gram, eval_basis)


def elementary_potential(lat: LatticeContext, z) -> complex:
    """F(z) = -zeta(z) + c1 z + c2 conj(z); lattice-periodic, pole -1/z at 0."""
    z = complex(z)
    return complex(-wzeta(lat, z) + lat.c1 * z + lat.c2 * np.conj(z))


def dbar_potential_check(lat: LatticeContext) -> tuple[complex, complex]:
    """(c2, 2 pi * kernel coefficient): equal when dbar F = 2 pi conj(k)."""
    ctx = torus_bergman_context(lat)
    u = torus_tangent(0.0, 1.0)
    kernel_diag = bergman_eval(ctx, u, u)  # = 1 / (2 area)
    return lat.c2, 2 * np.pi * complex(kernel_diag)


def eta_hat_eval(ev: EtaEvaluator, zp, zq, lam_u, lam_v) -> complex:
    """Bidifferential value lam_u lam_v (p(zp - zq) + c1); pole on the diagonal."""
    lat = ev.lattice
    try:
        p_val = wp(lat, complex(zp) - complex(zq))
    except PoleError as err:
        raise PoleError("bidifferential evaluated on the diagonal (mod lattice)") from err
    return complex(lam_u * lam_v * (p_val + lat.c1))


def alpha_eval(ev: EtaEvaluator, zp, zq, lam_u, lam_v) -> complex:
    """Connecting 1-form on the tangent (u, v): 2 f_v(zp) + f_u(zq).

    f_w is the elementary potential centered at the other point's base; the
    (0,1) tangent components do not enter (the form has type (1,0)).
    """
    lat = ev.lattice
    zp, zq = complex(zp), complex(zq)
    return complex(
        2 * lam_v * elementary_potential(lat, zp - zq) + lam_u * elementary_potential(lat, zq - zp)
    )


def _wirtinger(fn, z0: complex, h: float) -> tuple[complex, complex]:
    """(d/dz, d/dzbar) of a scalar function by central differences."""
    fr = (fn(z0 + h) - fn(z0 - h)) / (2 * h)
    fi = (fn(z0 + 1j * h) - fn(z0 - 1j * h)) / (2 * h)
    return (fr - 1j * fi) / 2, (fr + 1j * fi) / 2


@dataclass(frozen=True)
class TheoremBSample:
    zp: complex
    zq: complex
    lam_u: complex
    lam_v: complex
    residual_d: float
    residual_dbar: float
    residual_fd_d: float
    residual_fd_dbar: float


@dataclass(frozen=True)
class TheoremBReport:
    samples: tuple
    max_residual_d: float
    max_residual_dbar: float
    max_residual_fd: float
    tol_d: float
    tol_dbar: float
    tol_fd: float

    @property
    def passed(self) -> bool:
        return (
            self.max_residual_d <= self.tol_d
            and self.max_residual_dbar <= self.tol_dbar
            and self.max_residual_fd <= self.tol_fd
        )


def theorem_b_check(
    ev: EtaEvaluator,
    samples,
    fd_step: float = 1e-4,
    tol_d: float = 1e-8,
    tol_dbar: float = 1e-10,
    tol_fd: float = 1e-5,
) -> TheoremBReport:
    """Exactness of the connecting form against the bidifferential and kernel.

    ``samples`` is an iterable of (zp, zq, lam_u, lam_v) with zp != zq mod
    the lattice. Per sample:

    * holomorphic side: 2 dF_v(u) - dF_u(v) against the bidifferential;
    * antiholomorphic side: -dbarF_u(conj v) against -2 pi * kernel;
    * both analytic derivatives against central differences of
      ``alpha_eval`` (the form contracted with one frozen tangent slot).
    """
    lat = ev.lattice
    ctx = torus_bergman_context(lat)
    out = []
    for zp, zq, lam_u, lam_v in samples:
        zp, zq = complex(zp), complex(zq)
        lam_u, lam_v = complex(lam_u), complex(lam_v)
        eta_val = eta_hat_eval(ev, zp, zq, lam_u, lam_v)
        # analytic d-side: two independent p evaluations
        d_fv_u = lam_u * lam_v * (wp(lat, zp - zq) + lat.c1)
        d_fu_v = lam_u * lam_v * (wp(lat, zq - zp) + lat.c1)
        d_side = 2 * d_fv_u - d_fu_v
        residual_d = abs(d_side - eta_val)
        # analytic dbar-side against the kernel
        dbar_side = -lat.c2 * lam_u * np.conj(lam_v)
        u = torus_tangent(zp, lam_u)
        v = torus_tangent(zq, lam_v)
        kernel_side = -2 * np.pi * bergman_eval(ctx, u, v)
        residual_dbar = abs(dbar_side - kernel_side)
        # finite differences of the contracted form
        alpha_b = lambda x: alpha_eval(ev, x, zq, 0.0, lam_v)  # noqa: E731
        alpha_a = lambda y: alpha_eval(ev, zp, y, lam_u, 0.0)  # noqa: E731
        dz_b, _ = _wirtinger(alpha_b, zp, fd_step)
        dz_a, dzbar_a = _wirtinger(alpha_a, zq, fd_step)
        fd_d = lam_u * dz_b - lam_v * dz_a
        fd_dbar = -np.conj(lam_v) * dzbar_a
        residual_fd_d = abs(fd_d - d_side)
        residual_fd_dbar = abs(fd_dbar - dbar_side)
        out.append(
            TheoremBSample(
                zp=zp,
                zq=zq,
                lam_u=lam_u,
                lam_v=lam_v,
                residual_d=float(residual_d),
                residual_dbar=float(residual_dbar),
                residual_fd_d=float(residual_fd_d),
                residual_fd_dbar=float(residual_fd_dbar),
            )
        )
    return TheoremBReport(
        samples=tuple(out),
        max_residual_d=max(s.residual_d for s in out),
        max_residual_dbar=max(s.residual_dbar for s in out),
        max_residual_fd=max(max(s.residual_fd_d, s.residual_fd_dbar) for s in out),
        tol_d=tol_d,
        tol_dbar=tol_dbar,
        tol_fd=tol_fd,
    )


def random_samples(lat: LatticeContext, count: int, rng: np.random.Generator, min_sep: float = 0.3):
    """Sample (zp, zq, lam_u, lam_v) away from the diagonal and lattice translates."""
    out = []
    scale = min(abs(lat._r1), abs(lat._r2))
    while len(out) < count:
        a, b = rng.uniform(-0.5, 0.5, size=2)
        c, d = rng.uniform(-0.5, 0.5, size=2)
        zp = a * lat.omega1 + b * lat.omega2
        zq = c * lat.omega1 + d * lat.omega2
        diff = zp - zq
        coords = lat._coord @ np.array([diff.real, diff.imag])
        frac = coords - np.rint(coords)
        dist = abs(frac[0] * lat._r1 + frac[1] * lat._r2)
        if dist < min_sep * scale:
            continue
        lam_u = complex(*rng.uniform(-1, 1, size=2))
        lam_v = complex(*rng.uniform(-1, 1, size=2))
        if abs(lam_u) < 0.1 or abs(lam_v) < 0.1:
            continue
        out.append((zp, zq, lam_u, lam_v))
    return out
