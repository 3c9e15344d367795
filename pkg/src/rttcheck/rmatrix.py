"""The fundamental 16x16 R-matrix and its defining properties.

The operator is assembled as

    R = sum (-1)^{|B|+|C|} E^A_B (x) E^C_D  R^B_A^D_C(p1, p2)

from the closed-form coefficient list (normalized so that R^1_1^1_1 = 1).
The coefficient formulas are written generically in the parameter bundles
(x+, x-, gamma, U) of the two legs, so the same code produces complex
numbers, first-order jets, or truncated 1/u series.
"""

from __future__ import annotations

import numpy as np

from .graded import (SPACE22, GradedMatrix, basis_matrix, cross, op_cross,
                     graded_permutation, graded_tensor, leg_map, max_norm,
                     embed_two_site)
from .graded import identity as gident
from .kinematics import SpectralPoint, auto_map, crossing_map, u_of
from .report import Check, Report

__all__ = [
    "RMatrix", "PoleProximityError", "r_coefficients", "build_r",
    "ybe_residual", "unitarity_residual", "crossing_factor",
    "crossing_residual", "auto_symmetry_residual", "intertwine_residual",
    "rbar_build", "P16",
]

EVEN = (1, 2)
ODD = (3, 4)
_G4 = SPACE22.gradings

P16 = graded_permutation(SPACE22)


class PoleProximityError(ArithmeticError):
    """A coefficient denominator came too close to a pole locus."""


def _d(i, j):
    return 1.0 if i == j else 0.0


def r_coefficients(par1, par2, eps=None):
    """Nonzero components R^B_A^D_C as {(B, A, D, C): value}.

    par1, par2 are (x+, x-, gamma, U) bundles; entries may be numbers,
    jets or series.  eps is the antisymmetric 2-tensor (defaults to the
    pinned convention).
    """
    from .graded import EPS
    if eps is None:
        eps = EPS
    xp1, xm1, g1, u1 = par1
    xp2, xm2, g2, u2 = par2
    coeff = {}

    ratio_ee = ((xp1 - xp2) / (xm1 - xp2)) * (xm1 / xp1) * ((xp1 * xm2 - 1) / (xm1 * xm2 - 1))
    for a in EVEN:
        for b in EVEN:
            for c in EVEN:
                for d in EVEN:
                    v = _d(a, d) * _d(c, b) + (_d(a, b) * _d(c, d) - _d(a, d) * _d(c, b)) * ratio_ee
                    coeff[(a, b, c, d)] = v

    pref_oo = (u2 / u1) * ((xp1 - xm2) / (xm1 - xp2))
    ratio_oo = ((xp1 - xp2) / (xp1 - xm2)) * (xm2 / xp2) * ((xm1 * xp2 - 1) / (xm1 * xm2 - 1))
    for al in ODD:
        for be in ODD:
            for ga in ODD:
                for de in ODD:
                    v = pref_oo * (_d(al, de) * _d(ga, be)
                                   + (_d(al, be) * _d(ga, de) - _d(al, de) * _d(ga, be)) * ratio_oo)
                    coeff[(al, be, ga, de)] = v

    ext_eo = (g1 * g2 * u2 * (xm1 - xm2)) / ((1 - xp1 * xp2) * (xp2 - xm1))
    ext_oe = ((xp1 - xp2) * (xm1 - xp1) * (xm2 - xp2)) / (g1 * g2 * u1 * (xm1 * xm2 - 1) * (xp2 - xm1))
    for a in EVEN:
        for al in ODD:
            for b in EVEN:
                for be in ODD:
                    if eps[a - 1, b - 1] != 0 and eps[al - 1, be - 1] != 0:
                        coeff[(a, al, b, be)] = eps[a - 1, b - 1] * eps[al - 1, be - 1] * ext_eo
                        coeff[(al, a, be, b)] = eps[a - 1, b - 1] * eps[al - 1, be - 1] * ext_oe

    diag_bf = (1 / u1) * ((xp1 - xp2) / (xm1 - xp2))
    mix_bf = (u2 / u1) * ((xm2 - xp2) / (xp2 - xm1)) * (g1 / g2)
    mix_fb = ((xp1 - xm1) / (xp2 - xm1)) * (g2 / g1)
    diag_fb = u2 * ((xm1 - xm2) / (xm1 - xp2))
    for a in EVEN:
        for al in ODD:
            coeff[(a, a, al, al)] = diag_bf      # R^a_b^al_be, delta pattern
            coeff[(a, al, al, a)] = mix_bf       # R^a_be^al_b
            coeff[(al, a, a, al)] = mix_fb       # R^al_b^a_be
            coeff[(al, al, a, a)] = diag_fb      # R^al_be^a_b
    return coeff


def _pole_guard(p1: SpectralPoint, p2: SpectralPoint, threshold: float):
    dens = {
        "xm1 - xp2": p1.xm - p2.xp,
        "xm1 xm2 - 1": p1.xm * p2.xm - 1,
        "1 - xp1 xp2": 1 - p1.xp * p2.xp,
        "xp1 - xm2": p1.xp - p2.xm,
    }
    scale = max(1.0, abs(p1.xp), abs(p2.xp), abs(p1.xm), abs(p2.xm))
    for name, val in dens.items():
        if abs(val) < threshold * scale:
            raise PoleProximityError(f"denominator {name} = {val:.3e} below threshold")


class RMatrix:
    """R-matrix between two fundamental-representation points."""

    def __init__(self, p1: SpectralPoint, p2: SpectralPoint, op: GradedMatrix):
        self.p1 = p1
        self.p2 = p2
        self.op = op

    @property
    def entries(self) -> np.ndarray:
        return self.op.entries


def _assemble(coeff: dict) -> np.ndarray:
    out = np.zeros((16, 16), dtype=complex)
    for (B, A, D, C), v in coeff.items():
        if v == 0:
            continue
        sign = (-1.0) ** ((_G4[B - 1] + _G4[C - 1]) % 2)
        term = graded_tensor(basis_matrix(SPACE22, A, B), basis_matrix(SPACE22, C, D))
        out += sign * v * term.entries
    return out


def build_r(p1: SpectralPoint, p2: SpectralPoint, pole_threshold: float = 1e-8) -> RMatrix:
    """Assemble R(p1, p2); raises PoleProximityError near a pole locus."""
    _pole_guard(p1, p2, pole_threshold)
    coeff = r_coefficients(p1.params(), p2.params())
    op = GradedMatrix(SPACE22.tensor(SPACE22), _assemble(coeff))
    return RMatrix(p1, p2, op)


def ybe_residual(p1: SpectralPoint, p2: SpectralPoint, p3: SpectralPoint) -> float:
    """Max-norm defect of R12 R13 R23 = R23 R13 R12 on the 64-dim space."""
    r12 = build_r(p1, p2).op
    r13 = build_r(p1, p3).op
    r23 = build_r(p2, p3).op
    a12 = embed_two_site(r12, (1, 2), SPACE22)
    a13 = embed_two_site(r13, (1, 3), SPACE22)
    a23 = embed_two_site(r23, (2, 3), SPACE22)
    lhs = a12 @ a13 @ a23
    rhs = a23 @ a13 @ a12
    return max_norm(lhs - rhs)


def unitarity_residual(p1: SpectralPoint, p2: SpectralPoint) -> float:
    """R12(u1,u2) R21(u2,u1) = 1 with R21 = P R(p2,p1) P."""
    r12 = build_r(p1, p2).op
    r21 = P16 @ build_r(p2, p1).op @ P16
    prod = r12 @ r21
    return max_norm(prod - gident(SPACE22.tensor(SPACE22)))


def crossing_factor(p1: SpectralPoint, p2: SpectralPoint) -> complex:
    """F(u1,u2) = (x1+ - x2-)/(x1- - x2-) * (1/x1+ - x2+)/(1/x1- - x2+)."""
    num = (p1.xp - p2.xm) * (1 / p1.xp - p2.xp)
    den = (p1.xm - p2.xm) * (1 / p1.xm - p2.xp)
    if den == 0:
        raise PoleProximityError("crossing factor pole")
    return num / den


def crossing_residual(p1: SpectralPoint, p2: SpectralPoint) -> float:
    """Crossing on either leg undoes R up to the scalar crossing factor."""
    f = crossing_factor(p1, p2)
    r = build_r(p1, p2).op
    one = gident(SPACE22.tensor(SPACE22))
    rc1 = leg_map(build_r(crossing_map(p1), p2).op, cross, 1)
    res1 = max_norm(rc1 @ r - f * one)
    rc2 = leg_map(build_r(p1, crossing_map(p2)).op, cross, 2)
    res2 = max_norm(rc2 @ r - f * one)
    rcc = leg_map(leg_map(build_r(crossing_map(p1), crossing_map(p2)).op, cross, 1), cross, 2)
    res3 = max_norm(rcc - r)
    return max(res1, res2, res3)


def auto_symmetry_residual(p1: SpectralPoint, p2: SpectralPoint) -> float:
    """R is unchanged by the x -> 1/x map with gamma -> i gamma / x+."""
    r = build_r(p1, p2).entries
    ra = build_r(auto_map(p1), auto_map(p2)).entries
    return float(np.max(np.abs(r - ra)))


def intertwine_residual(p1: SpectralPoint, p2: SpectralPoint, label,
                        coproduct_builder) -> float:
    """Defect of Delta_op(X) R = R Delta(X) for one generator label."""
    cop = coproduct_builder(label, p1, p2)
    r = build_r(p1, p2).op
    return max_norm(cop.opposite @ r - r @ cop.op)


def rbar_build(p1: SpectralPoint, p2: SpectralPoint) -> Report:
    """Semi-opposite-inverse combinations of R against the F-ratio.

    Checks R^{-1, 1(x)C, -1, 1(x)opC} = (F(u1,u2)/F(u1,ubar2)) R and the
    barred variant R^{1(x)C, -1, 1(x)opC, -1} with the inverse ratio.
    """
    rep = Report("rbar")
    r = build_r(p1, p2).op
    p2bar = crossing_map(p2)
    ratio = crossing_factor(p1, p2) / crossing_factor(p1, p2bar)
    m = leg_map(r.inv(), cross, 2).inv()
    m = leg_map(m, op_cross, 2)
    rep.add(Check("semi-opposite inverse of R^{-1}",
                  max_norm(m - ratio * r)))
    m2 = leg_map(leg_map(r, cross, 2).inv(), op_cross, 2).inv()
    rep.add(Check("barred R", max_norm(m2 - (1 / ratio) * r)))
    return rep
