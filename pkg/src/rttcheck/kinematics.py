"""Parameter space of the fundamental representation family.

A spectral point carries (hbar, x+, x-, gamma, U, sheet).  The pair (x+, x-)
is constrained by x+ + 1/x+ - x- - 1/x- = hbar; U^2 = x+/x-; gamma fixes the
relative boson/fermion normalization.  The crossing map inverts x+- and U,
transforms gamma, and bumps the integer sheet counter (its square returns to
the same x+- with gamma flipped).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field, replace

import numpy as np

__all__ = [
    "SpectralPoint",
    "AbcdParams",
    "CentralEigenvalues",
    "BranchTag",
    "KinematicsError",
    "point_from_xpm",
    "u_of",
    "xpm_from_u",
    "canonical_gamma",
    "abcd_of",
    "central_eigenvalues",
    "crossing_map",
    "auto_map",
    "branch_points",
    "sample_points",
]

CONSTRAINT_TOL = 1e-10


class KinematicsError(ValueError):
    pass


@dataclass(frozen=True)
class SpectralPoint:
    hbar: complex
    xp: complex
    xm: complex
    gamma: complex
    ub: complex  # eigenvalue of the braiding element U
    sheet: int = 0

    @property
    def u(self) -> complex:
        return u_of(self)

    def params(self):
        """(x+, x-, gamma, U) bundle, the arguments every R coefficient needs."""
        return self.xp, self.xm, self.gamma, self.ub


@dataclass(frozen=True)
class AbcdParams:
    a: complex
    b: complex
    c: complex
    d: complex


@dataclass(frozen=True)
class CentralEigenvalues:
    H: complex
    C: complex
    Cbar: complex
    U: complex


@dataclass(frozen=True)
class BranchTag:
    plus_branch: str = "outside"
    minus_branch: str = "outside"

    def __post_init__(self):
        for b in (self.plus_branch, self.minus_branch):
            if b not in ("inside", "outside"):
                raise KinematicsError(f"unknown branch {b!r}")


def _shortening_defect(hbar, xp, xm) -> complex:
    return xp + 1 / xp - xm - 1 / xm - hbar


def canonical_gamma(xp, xm) -> complex:
    """gamma = sqrt(sqrt(x+/x-) (x+ - x-)), principal branches."""
    return cmath.sqrt(cmath.sqrt(xp / xm) * (xp - xm))


def point_from_xpm(hbar, xp, xm, gamma=None, tol: float = CONSTRAINT_TOL) -> SpectralPoint:
    """Build a point from (x+, x-); U is the principal sqrt of x+/x-."""
    xp, xm = complex(xp), complex(xm)
    if xp == 0 or xm == 0:
        raise KinematicsError("x+- must be nonzero")
    defect = _shortening_defect(hbar, xp, xm)
    scale = max(1.0, abs(xp) + abs(xm))
    if abs(defect) > tol * scale:
        raise KinematicsError(
            f"shortening constraint violated: |defect| = {abs(defect):.3e}"
        )
    ub = cmath.sqrt(xp / xm)
    g = canonical_gamma(xp, xm) if gamma is None else complex(gamma)
    return SpectralPoint(complex(hbar), xp, xm, g, ub, sheet=0)


def u_of(point: SpectralPoint, tol: float = 1e-9) -> complex:
    """u = x+ + 1/x+ - hbar/2, cross-checked against the x- expression."""
    up = point.xp + 1 / point.xp - point.hbar / 2
    um = point.xm + 1 / point.xm + point.hbar / 2
    if abs(up - um) > tol * max(1.0, abs(up)):
        raise KinematicsError(f"u mismatch between branches: {up} vs {um}")
    return up


def branch_points(hbar) -> list[complex]:
    return [s1 * 2 + s2 * hbar / 2 for s1 in (1, -1) for s2 in (1, -1)]


def _quadratic_roots(w):
    """Roots of x^2 - w x + 1, as (outside, inside) by modulus."""
    disc = cmath.sqrt(w * w - 4)
    r1 = (w + disc) / 2
    r2 = (w - disc) / 2
    if abs(abs(r1) - abs(r2)) < 1e-12:
        # both roots unimodular: tie broken by nonnegative imaginary part
        out = r1 if r1.imag >= r2.imag else r2
        return out, 1 / out
    return (r1, r2) if abs(r1) > abs(r2) else (r2, r1)


def xpm_from_u(hbar, u, branch: BranchTag = BranchTag()) -> tuple[complex, complex]:
    """Solve x +- + 1/x +- = u +- hbar/2 on the requested branches."""
    out = []
    for sign, tag in ((1, branch.plus_branch), (-1, branch.minus_branch)):
        w = u + sign * hbar / 2
        if abs(w * w - 4) < 1e-12:
            raise KinematicsError(f"u at a quadratic branch point (w = {w})")
        big, small = _quadratic_roots(w)
        out.append(big if tag == "outside" else small)
    return out[0], out[1]


def abcd_of(point: SpectralPoint) -> AbcdParams:
    """Outer-automorphism parameters a, b, c, d with ad - bc = 1."""
    if point.hbar == 0:
        raise KinematicsError("a, b, c, d need hbar != 0")
    s = cmath.sqrt(1 / point.hbar)
    xp, xm, g = point.xp, point.xm, point.gamma
    a = s * g
    b = -s * (1 - xp / xm) / g
    c = s * g / xp
    d = s * (xp / g) * (1 - xm / xp)
    return AbcdParams(a, b, c, d)


def central_eigenvalues(point: SpectralPoint) -> CentralEigenvalues:
    xp, xm, hbar = point.xp, point.xm, point.hbar
    U = point.ub
    if hbar == 0:
        return CentralEigenvalues(H=0j, C=0j, Cbar=0j, U=U)
    H = (xp - xm - 1 / xp + 1 / xm) / hbar
    C = (xp / xm - 1) / hbar
    Cbar = (1 - xm / xp) / hbar
    return CentralEigenvalues(H=H, C=C, Cbar=Cbar, U=U)


def crossing_map(point: SpectralPoint) -> SpectralPoint:
    """x -> 1/x, U -> 1/U, gamma -> (U - 1/U)/gamma; sheet incremented."""
    U = point.ub
    return SpectralPoint(
        hbar=point.hbar,
        xp=1 / point.xp,
        xm=1 / point.xm,
        gamma=(U - 1 / U) / point.gamma,
        ub=1 / U,
        sheet=point.sheet + 1,
    )


def auto_map(point: SpectralPoint) -> SpectralPoint:
    """Like crossing but with gamma -> i gamma / x+ (R-matrix auto-symmetry)."""
    return SpectralPoint(
        hbar=point.hbar,
        xp=1 / point.xp,
        xm=1 / point.xm,
        gamma=1j * point.gamma / point.xp,
        ub=1 / point.ub,
        sheet=point.sheet,
    )


def sample_points(hbar, n, seed, exclusion: float = 1.2, box: float = 4.0,
                  rng=None) -> list[SpectralPoint]:
    """Seeded spectral points with u kept away from the branch points.

    u is drawn uniformly from a box in the complex plane and rejected while
    any |u - (+-2 +- hbar/2)| < exclusion; x+- sit on the outside branches
    with canonical gamma.
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    bps = branch_points(hbar)
    pts = []
    while len(pts) < n:
        u = complex(rng.uniform(-box, box), rng.uniform(-box, box))
        if any(abs(u - bp) < exclusion for bp in bps):
            continue
        xp, xm = xpm_from_u(hbar, u, BranchTag())
        pts.append(point_from_xpm(hbar, xp, xm))
    return pts
