"""Coproducts, opposite coproducts and antipodes on tensor squares.

Level-zero coproducts are braided-primitive, Delta(J) = J (x) 1 + U^[J] (x) J.
The level-one supercharge coproduct is taken from its explicit closed form;
every other level-one coproduct is generated through the homomorphism
property Delta([X,Y}) = [Delta(X), Delta(Y)} from the superalgebra brackets.
The secret symmetries get their own tails, quadratic and cubic in level-zero
generators.

Coproducts are kept as formal sums of two-leg terms A (x) B.  Each term
stores the representation of both elements at both spectral points, so the
opposite coproduct (the graded flip, which exchanges which point represents
which leg) and the counit contraction are exact operations; the 16x16
operators are assembled on demand with Koszul-signed tensor products.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graded import EPS, SPACE22, GradedMatrix, graded_tensor
from .kinematics import SpectralPoint, central_eigenvalues, u_of
from .funrep import (EVEN_IDX, ODD_IDX, ID4, RepresentationTable,
                     build_level1, build_secret, build_higher_secret, weight)
from .report import Check, Report

__all__ = [
    "CoproductOperator", "QuadraticCombos", "coproduct", "coproduct_level0",
    "coproduct_level1", "coproduct_secret", "coproduct_higher_secret",
    "antipode_level0", "secret_antipode_tower", "counit_check",
    "quadratic_combos", "dressed_hats", "induced_a_hat",
]

_SP16 = SPACE22.tensor(SPACE22)


def _gt(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return graded_tensor(GradedMatrix(SPACE22, a), GradedMatrix(SPACE22, b)).entries


@dataclass(frozen=True)
class Term:
    """One tensor term A (x) B of a coproduct, represented at both points.

    eps is the counit value of the A-element; a1/a2 (b1/b2) are the matrices
    of A (B) at the two spectral points; pa/pb are the element parities.
    """

    eps: complex
    a1: np.ndarray
    a2: np.ndarray
    pa: int
    b1: np.ndarray
    b2: np.ndarray
    pb: int

    def flip(self) -> "Term":
        s = (-1.0) ** (self.pa * self.pb)
        return Term(0j, s * self.b1, s * self.b2, self.pb, self.a1, self.a2, self.pa)

    def mul(self, other: "Term") -> "Term":
        s = (-1.0) ** (self.pb * other.pa)
        return Term(self.eps * other.eps,
                    s * (self.a1 @ other.a1), s * (self.a2 @ other.a2),
                    (self.pa + other.pa) % 2,
                    self.b1 @ other.b1, self.b2 @ other.b2,
                    (self.pb + other.pb) % 2)


@dataclass
class CoproductOperator:
    label: object
    p1: SpectralPoint
    p2: SpectralPoint
    parity: int = 0
    terms: list = field(default_factory=list)

    def add(self, eps, a1, a2, pa, b1, b2, pb):
        self.terms.append(Term(complex(eps), np.asarray(a1, complex),
                               np.asarray(a2, complex), pa,
                               np.asarray(b1, complex), np.asarray(b2, complex), pb))

    def add_primitive_pair(self, eps, a_pair, pa, b_pair, pb):
        self.add(eps, a_pair[0], a_pair[1], pa, b_pair[0], b_pair[1], pb)

    @property
    def op(self) -> GradedMatrix:
        out = np.zeros((16, 16), complex)
        for t in self.terms:
            out += _gt(t.a1, t.b2)
        return GradedMatrix(_SP16, out)

    @property
    def opposite(self) -> GradedMatrix:
        out = np.zeros((16, 16), complex)
        for t in self.terms:
            f = t.flip()
            out += _gt(f.a1, f.b2)
        return GradedMatrix(_SP16, out)

    def counit_contract(self) -> np.ndarray:
        """(counit (x) id) applied to the term list, represented at p2."""
        out = np.zeros((4, 4), complex)
        for t in self.terms:
            out += t.eps * t.b2
        return out

    def mul(self, other: "CoproductOperator", label=None) -> "CoproductOperator":
        out = CoproductOperator(label or ("prod",), self.p1, self.p2,
                                (self.parity + other.parity) % 2)
        out.terms = [s.mul(t) for s in self.terms for t in other.terms]
        return out

    def bracket(self, other: "CoproductOperator", label=None) -> "CoproductOperator":
        """Graded commutator [self, other} via term products."""
        sgn = -1.0 if (self.parity and other.parity) else 1.0
        left = self.mul(other)
        right = other.mul(self)
        out = CoproductOperator(label or ("bracket",), self.p1, self.p2,
                                (self.parity + other.parity) % 2)
        out.terms = left.terms + [Term(-sgn * t.eps, -sgn * t.a1, -sgn * t.a2,
                                       t.pa, t.b1, t.b2, t.pb) for t in right.terms]
        return out

    def scaled(self, c, label=None) -> "CoproductOperator":
        out = CoproductOperator(label or self.label, self.p1, self.p2, self.parity)
        out.terms = [Term(c * t.eps, c * t.a1, c * t.a2, t.pa, t.b1, t.b2, t.pb)
                     for t in self.terms]
        return out

    def plus(self, other: "CoproductOperator", label=None) -> "CoproductOperator":
        out = CoproductOperator(label or self.label, self.p1, self.p2, self.parity)
        out.terms = self.terms + other.terms
        return out


def _parity(label) -> int:
    return 1 if label[0].rstrip("^") in ("Q", "Qb") else 0


class _Ctx:
    """Tables and central eigenvalues at the two points of a tensor square."""

    def __init__(self, p1, p2, t1=None, t2=None):
        self.p1, self.p2 = p1, p2
        self.t1 = t1 or build_level1(p1)
        self.t2 = t2 or build_level1(p2)
        self.U = (central_eigenvalues(p1).U, central_eigenvalues(p2).U)

    def pair(self, label):
        return self.t1.mat(label), self.t2.mat(label)

    def upow(self, w):
        return (self.U[0] ** w) * ID4, (self.U[1] ** w) * ID4


def coproduct_level0(label, p1, p2, t1=None, t2=None,
                     ctx: _Ctx | None = None) -> CoproductOperator:
    """Delta(J) = J (x) 1 + U^[J] (x) J; Delta(U) = U (x) U."""
    ctx = ctx or _Ctx(p1, p2, t1, t2)
    par = _parity(label)
    c = CoproductOperator(label, p1, p2, par)
    if label == ("U",):
        c.add_primitive_pair(1.0, ctx.pair(label), 0, ctx.pair(label), 0)
        return c
    one = (ID4, ID4)
    c.add_primitive_pair(0.0, ctx.pair(label), par, one, 0)
    c.add_primitive_pair(1.0, ctx.upow(weight(label)), 0, ctx.pair(label), par)
    return c


def _delta_qhat_display(al, a, ctx: _Ctx) -> CoproductOperator:
    """The explicit closed-form coproduct of the level-one supercharge."""
    hbar = ctx.p1.hbar
    c = CoproductOperator(("Q^", al, a), ctx.p1, ctx.p2, 1)
    one = (ID4, ID4)
    c.add_primitive_pair(0.0, ctx.pair(("Q^", al, a)), 1, one, 0)
    c.add_primitive_pair(1.0, ctx.upow(1), 0, ctx.pair(("Q^", al, a)), 1)
    h = hbar / 2
    U1, U2 = ctx.U

    def scaled(pair, s):
        return (s * pair[0], s * pair[1])

    def times_u(pair, w):
        return (pair[0] * (U1 ** w), pair[1] * (U2 ** w))

    for cc in EVEN_IDX:
        c.add_primitive_pair(0.0, scaled(ctx.pair(("Q", al, cc)), h), 1,
                             ctx.pair(("L", cc, a)), 0)
        c.add_primitive_pair(0.0, scaled(times_u(ctx.pair(("L", cc, a)), 1), -h), 0,
                             ctx.pair(("Q", al, cc)), 1)
    for ga in ODD_IDX:
        c.add_primitive_pair(0.0, scaled(ctx.pair(("Q", ga, a)), h), 1,
                             ctx.pair(("Lt", al, ga)), 0)
        c.add_primitive_pair(0.0, scaled(times_u(ctx.pair(("Lt", al, ga)), 1), -h), 0,
                             ctx.pair(("Q", ga, a)), 1)
    for b in EVEN_IDX:
        for be in ODD_IDX:
            e = EPS[al - 1, be - 1] * EPS[a - 1, b - 1]
            if e == 0:
                continue
            c.add_primitive_pair(0.0, scaled(ctx.pair(("Qb", b, be)), -h * e), 1,
                                 ctx.pair(("C",)), 0)
            c.add_primitive_pair(0.0, scaled(times_u(ctx.pair(("C",)), -1), h * e), 0,
                                 ctx.pair(("Qb", b, be)), 1)
    c.add_primitive_pair(0.0, scaled(ctx.pair(("Q", al, a)), h / 2), 1,
                         ctx.pair(("H",)), 0)
    c.add_primitive_pair(0.0, scaled(times_u(ctx.pair(("H",)), 1), -h / 2), 0,
                         ctx.pair(("Q", al, a)), 1)
    return c


def coproduct_level1(label, p1, p2, t1=None, t2=None,
                     ctx: _Ctx | None = None) -> CoproductOperator:
    """Level-one coproducts from Delta(Q^) and the homomorphism property.

    Qb^ is reached through [L^, Qb], L^/Lt^/H^ through {Q^, Qb} brackets and
    the Yangian central elements through supercharge anticommutators.
    """
    ctx = ctx or _Ctx(p1, p2, t1, t2)
    kind = label[0]
    if kind == "Q^":
        return _delta_qhat_display(label[1], label[2], ctx)

    def dq(al, a):
        return _delta_qhat_display(al, a, ctx)

    def d0(lab):
        return coproduct_level0(lab, p1, p2, ctx=ctx)

    if kind == "C^":
        # {Q^3_1, Q4_2} = eps_{12} eps^{34} C^
        br = dq(3, 1).bracket(d0(("Q", 4, 2)), label)
        return br.scaled(1 / (EPS[0, 1] * EPS[2, 3]), label)

    def dH():
        out = CoproductOperator(("H^",), ctx.p1, ctx.p2, 0)
        for al in ODD_IDX:
            for a in EVEN_IDX:
                out = out.plus(dq(al, a).bracket(d0(("Qb", a, al))).scaled(0.5),
                               ("H^",))
        return out

    if kind == "H^":
        return dH()

    if kind == "L^":
        a, b = label[1], label[2]
        out = CoproductOperator(label, ctx.p1, ctx.p2, 0)
        for al in ODD_IDX:
            out = out.plus(dq(al, b).bracket(d0(("Qb", a, al))).scaled(0.5), label)
        if a == b:
            out = out.plus(dH().scaled(-0.5), label)
        return out

    if kind == "Lt^":
        al, be = label[1], label[2]
        out = CoproductOperator(label, ctx.p1, ctx.p2, 0)
        for a in EVEN_IDX:
            out = out.plus(dq(al, a).bracket(d0(("Qb", a, be))).scaled(0.5), label)
        if al == be:
            out = out.plus(dH().scaled(-0.5), label)
        return out

    if kind == "Qb^":
        a, al = label[1], label[2]
        b = 2 if a == 1 else 1
        dl = coproduct_level1(("L^", a, b), p1, p2, ctx=ctx)
        return dl.bracket(d0(("Qb", b, al)), label)

    if kind == "Cb^":
        dqb = coproduct_level1(("Qb^", 1, 3), p1, p2, ctx=ctx)
        br = dqb.bracket(d0(("Qb", 2, 4)), label)
        return br.scaled(1 / (EPS[0, 1] * EPS[2, 3]), label)

    raise KeyError(f"not a level-one label: {label}")


@dataclass(frozen=True)
class QuadraticCombos:
    """Quadratic level-zero combinations feeding the higher secret coproduct."""

    L: dict
    Lt: dict
    Q: dict
    Qb: dict
    H: np.ndarray


def quadratic_combos(t: RepresentationTable) -> QuadraticCombos:
    L, Lt, Q, Qb = {}, {}, {}, {}
    for a in EVEN_IDX:
        for b in EVEN_IDX:
            m = t.mat(("H",)) @ t.mat(("L", a, b))
            for c in EVEN_IDX:
                m = m + t.mat(("L", c, b)) @ t.mat(("L", a, c))
            for ga in ODD_IDX:
                m = m + 0.5 * t.mat(("Q", ga, b)) @ t.mat(("Qb", a, ga))
                m = m - 0.5 * t.mat(("Qb", a, ga)) @ t.mat(("Q", ga, b))
            L[(a, b)] = m
    for al in ODD_IDX:
        for be in ODD_IDX:
            m = t.mat(("H",)) @ t.mat(("Lt", al, be))
            for ga in ODD_IDX:
                m = m + t.mat(("Lt", ga, be)) @ t.mat(("Lt", al, ga))
            for c in EVEN_IDX:
                m = m + 0.5 * t.mat(("Qb", c, be)) @ t.mat(("Q", al, c))
                m = m - 0.5 * t.mat(("Q", al, c)) @ t.mat(("Qb", c, be))
            Lt[(al, be)] = m
    for al in ODD_IDX:
        for a in EVEN_IDX:
            m = -1.5 * t.mat(("H",)) @ t.mat(("Q", al, a))
            for c in EVEN_IDX:
                m = m + t.mat(("Q", al, c)) @ t.mat(("L", c, a))
            for ga in ODD_IDX:
                m = m + t.mat(("Lt", al, ga)) @ t.mat(("Q", ga, a))
            Q[(al, a)] = m
    for a in EVEN_IDX:
        for al in ODD_IDX:
            m = -1.5 * t.mat(("H",)) @ t.mat(("Qb", a, al))
            for c in EVEN_IDX:
                m = m + t.mat(("L", a, c)) @ t.mat(("Qb", c, al))
            for ga in ODD_IDX:
                m = m + t.mat(("Qb", a, ga)) @ t.mat(("Lt", ga, al))
            Qb[(a, al)] = m
    h = np.zeros((4, 4), complex)
    for a in EVEN_IDX:
        for b in EVEN_IDX:
            h = h + t.mat(("L", a, b)) @ t.mat(("L", b, a))
    for al in ODD_IDX:
        for be in ODD_IDX:
            h = h - t.mat(("Lt", al, be)) @ t.mat(("Lt", be, al))
    for al in ODD_IDX:
        for a in EVEN_IDX:
            h = h + 1.5 * t.mat(("Q", al, a)) @ t.mat(("Qb", a, al))
            h = h - 1.5 * t.mat(("Qb", a, al)) @ t.mat(("Q", al, a))
    return QuadraticCombos(L=L, Lt=Lt, Q=Q, Qb=Qb, H=h)


def dressed_hats(t: RepresentationTable) -> tuple[dict, dict]:
    """Level-one supercharges dressed with the secret-symmetry tails."""
    U = central_eigenvalues(t.point).U
    qh, qbh = {}, {}
    for al in ODD_IDX:
        for a in EVEN_IDX:
            m = t.mat(("Q^", al, a)).copy()
            for b in EVEN_IDX:
                for be in ODD_IDX:
                    m = m - 0.5 * (1 + U**2) * EPS[a - 1, b - 1] * EPS[al - 1, be - 1] \
                        * t.mat(("Qb", b, be))
            qh[(al, a)] = m
    for a in EVEN_IDX:
        for al in ODD_IDX:
            m = t.mat(("Qb^", a, al)).copy()
            for b in EVEN_IDX:
                for be in ODD_IDX:
                    m = m - 0.5 * (1 + U**-2) * EPS[a - 1, b - 1] * EPS[al - 1, be - 1] \
                        * t.mat(("Q", be, b))
            qbh[(a, al)] = m
    return qh, qbh


def _hat_tables(ctx: _Ctx):
    """Tables extended with the Qb^ entries needed by the dressed hats."""
    for t in (ctx.t1, ctx.t2):
        if ("Qb^", 1, 3) not in t:
            u = u_of(t.point)
            for a in EVEN_IDX:
                for al in ODD_IDX:
                    t[("Qb^", a, al)] = u * t.mat(("Qb", a, al))
    return ctx.t1, ctx.t2


def coproduct_secret(p1, p2, a_hats=(0.0, 0.0), t1=None, t2=None,
                     ctx: _Ctx | None = None) -> CoproductOperator:
    """Delta(B) = B (x) 1 + 1 (x) B + (hbar/2)(Q U^-1 (x) Qb + Qb U (x) Q)."""
    ctx = ctx or _Ctx(p1, p2, t1, t2)
    hbar = ctx.p1.hbar
    U1, U2 = ctx.U
    c = CoproductOperator(("B",), p1, p2, 0)
    one = (ID4, ID4)
    bpair = (build_secret(ctx.p1, a_hats[0]), build_secret(ctx.p2, a_hats[1]))
    c.add_primitive_pair(0.0, bpair, 0, one, 0)
    c.add_primitive_pair(1.0, one, 0, bpair, 0)
    h = hbar / 2
    for al in ODD_IDX:
        for a in EVEN_IDX:
            qp = ctx.pair(("Q", al, a))
            qbp = ctx.pair(("Qb", a, al))
            c.add_primitive_pair(0.0, (h * qp[0] / U1, h * qp[1] / U2), 1, qbp, 1)
            c.add_primitive_pair(0.0, (h * qbp[0] * U1, h * qbp[1] * U2), 1, qp, 1)
    return c


def coproduct_higher_secret(p1, p2, aa_hats=(0.0, 0.0), t1=None, t2=None,
                            ctx: _Ctx | None = None) -> CoproductOperator:
    """Higher secret coproduct with dressed level-one and quadratic tails."""
    ctx = ctx or _Ctx(p1, p2, t1, t2)
    tt1, tt2 = _hat_tables(ctx)
    hbar = ctx.p1.hbar
    U1, U2 = ctx.U
    qh = (dressed_hats(tt1)[0], dressed_hats(tt2)[0])
    qbh = (dressed_hats(tt1)[1], dressed_hats(tt2)[1])
    k = (quadratic_combos(tt1), quadratic_combos(tt2))
    c = CoproductOperator(("BB",), p1, p2, 0)
    one = (ID4, ID4)
    bbpair = (build_higher_secret(ctx.p1, aa_hats[0]),
              build_higher_secret(ctx.p2, aa_hats[1]))
    c.add_primitive_pair(0.0, bbpair, 0, one, 0)
    c.add_primitive_pair(1.0, one, 0, bbpair, 0)
    h2 = hbar / 2
    h12 = hbar * hbar / 12
    for al in ODD_IDX:
        for a in EVEN_IDX:
            qp = ctx.pair(("Q", al, a))
            qbp = ctx.pair(("Qb", a, al))
            qhp = (qh[0][(al, a)], qh[1][(al, a)])
            qbhp = (qbh[0][(a, al)], qbh[1][(a, al)])
            kq = (k[0].Q[(al, a)], k[1].Q[(al, a)])
            kqb = (k[0].Qb[(a, al)], k[1].Qb[(a, al)])
            c.add_primitive_pair(0.0, (h2 * qhp[0] / U1, h2 * qhp[1] / U2), 1, qbp, 1)
            c.add_primitive_pair(0.0, (h2 * qp[0] / U1, h2 * qp[1] / U2), 1, qbhp, 1)
            c.add_primitive_pair(0.0, (h2 * qbhp[0] * U1, h2 * qbhp[1] * U2), 1, qp, 1)
            c.add_primitive_pair(0.0, (h2 * qbp[0] * U1, h2 * qbp[1] * U2), 1, qhp, 1)
            c.add_primitive_pair(0.0, (-h12 * kq[0] / U1, -h12 * kq[1] / U2), 1, qbp, 1)
            c.add_primitive_pair(0.0, (-h12 * qp[0] / U1, -h12 * qp[1] / U2), 1, kqb, 1)
            c.add_primitive_pair(0.0, (h12 * kqb[0] * U1, h12 * kqb[1] * U2), 1, qp, 1)
            c.add_primitive_pair(0.0, (h12 * qbp[0] * U1, h12 * qbp[1] * U2), 1, kq, 1)
    for a in EVEN_IDX:
        for b in EVEN_IDX:
            kl = (k[0].L[(a, b)], k[1].L[(a, b)])
            lp = ctx.pair(("L", a, b))
            lop = ctx.pair(("L", b, a))
            klo = (k[0].L[(b, a)], k[1].L[(b, a)])
            c.add_primitive_pair(0.0, (2 * h12 * kl[0], 2 * h12 * kl[1]), 0, lop, 0)
            c.add_primitive_pair(0.0, (2 * h12 * lp[0], 2 * h12 * lp[1]), 0, klo, 0)
    for al in ODD_IDX:
        for be in ODD_IDX:
            klt = (k[0].Lt[(al, be)], k[1].Lt[(al, be)])
            ltp = ctx.pair(("Lt", al, be))
            ltop = ctx.pair(("Lt", be, al))
            klto = (k[0].Lt[(be, al)], k[1].Lt[(be, al)])
            c.add_primitive_pair(0.0, (-2 * h12 * klt[0], -2 * h12 * klt[1]), 0, ltop, 0)
            c.add_primitive_pair(0.0, (-2 * h12 * ltp[0], -2 * h12 * ltp[1]), 0, klto, 0)
    hp = ctx.pair(("H",))
    kh = (k[0].H, k[1].H)
    c.add_primitive_pair(0.0, (h12 * kh[0], h12 * kh[1]), 0, hp, 0)
    c.add_primitive_pair(0.0, (h12 * hp[0], h12 * hp[1]), 0, kh, 0)
    return c


def coproduct(label, p1, p2, t1=None, t2=None, a_hats=(0.0, 0.0),
              aa_hats=(0.0, 0.0)) -> CoproductOperator:
    """Coproduct builder for any supported label."""
    kind = label[0]
    if kind == "B":
        return coproduct_secret(p1, p2, a_hats, t1, t2)
    if kind == "BB":
        return coproduct_higher_secret(p1, p2, aa_hats, t1, t2)
    if kind.endswith("^"):
        return coproduct_level1(label, p1, p2, t1, t2)
    return coproduct_level0(label, p1, p2, t1, t2)


def antipode_level0(label, table: RepresentationTable) -> np.ndarray:
    """Sigma(J) = -U^{-[J]} J; group-like U inverts."""
    if label == ("U",):
        return np.linalg.inv(table.mat(("U",)))
    U = central_eigenvalues(table.point).U
    return -(U ** (-weight(label))) * table.mat(label)


def induced_a_hat(point: SpectralPoint, n0: complex = 0.0, n1: complex = 0.0) -> complex:
    """Identity coefficient of the secret symmetry induced by normalization N."""
    H = central_eigenvalues(point).H
    u = u_of(point)
    hbar = point.hbar
    return -u * (H + 1) * (H + 3) / (4 * H) - hbar * H - (2 / hbar) * (n1 - n0**2 / 2)


def secret_antipode_tower(point: SpectralPoint, a_hat: complex = 0.0,
                          aa_hat: complex = 0.0) -> Report:
    """Antipode and double antipode of B and BB as 4x4 matrix identities."""
    rep = Report("antipode-tower")
    t = build_level1(point)
    U = central_eigenvalues(point).U
    hbar = point.hbar
    H = t.mat(("H",))
    Hhat = t.mat(("H^",))
    B = build_secret(point, a_hat)
    BB = build_higher_secret(point, aa_hat)

    sig_b = -B + hbar * H
    sig2_b = -sig_b + hbar * (-H)
    rep.add(Check("Sigma^2(B) = B - 2 hbar H",
                  float(np.max(np.abs(sig2_b - (B - 2 * hbar * H))))))

    # quadratic tail of Sigma(BB)
    w = np.zeros((4, 4), complex)
    for a in EVEN_IDX:
        for b in EVEN_IDX:
            w = w - (1 / 3) * t.mat(("L", b, a)) @ t.mat(("L", a, b))
    for al in ODD_IDX:
        for be in ODD_IDX:
            w = w + (1 / 3) * t.mat(("Lt", be, al)) @ t.mat(("Lt", al, be))
    for al in ODD_IDX:
        for a in EVEN_IDX:
            w = w - 0.25 * t.mat(("Q", al, a)) @ t.mat(("Qb", a, al))
            w = w + 0.25 * t.mat(("Qb", a, al)) @ t.mat(("Q", al, a))
    sig_bb = -BB + 2 * hbar * Hhat - 2 * (U**2 - U**-2) * ID4 + hbar**2 * w

    # Sigma(W): antipode is an anti-homomorphism, Sigma(XY) = +-Sigma(Y)Sigma(X)
    sig_w = np.zeros((4, 4), complex)
    for a in EVEN_IDX:
        for b in EVEN_IDX:
            sig_w = sig_w - (1 / 3) * t.mat(("L", a, b)) @ t.mat(("L", b, a))
    for al in ODD_IDX:
        for be in ODD_IDX:
            sig_w = sig_w + (1 / 3) * t.mat(("Lt", al, be)) @ t.mat(("Lt", be, al))
    for al in ODD_IDX:
        for a in EVEN_IDX:
            sig_w = sig_w + 0.25 * t.mat(("Qb", a, al)) @ t.mat(("Q", al, a))
            sig_w = sig_w - 0.25 * t.mat(("Q", al, a)) @ t.mat(("Qb", a, al))
    rep.add(Check("Sigma(W) = W", float(np.max(np.abs(sig_w - w)))))

    sig2_bb = -sig_bb + 2 * hbar * (-Hhat) - 2 * (U**-2 - U**2) * ID4 + hbar**2 * sig_w
    target = BB - 4 * hbar * Hhat + 4 * (U**2 - U**-2) * ID4
    rep.add(Check("Sigma^2(BB) = BB - 4 hbar H^ + 4(U^2 - U^-2)",
                  float(np.max(np.abs(sig2_bb - target)))))
    return rep


def counit_check(label, point: SpectralPoint, point2: SpectralPoint | None = None) -> Report:
    """Hopf counit axiom (eps (x) 1) Delta(X) = X at representation level."""
    rep = Report("counit")
    p2 = point2 or point
    cop = coproduct(label, point, p2)
    if label[0] == "B":
        target = build_secret(p2, 0.0)
    elif label[0] == "BB":
        target = build_higher_secret(p2, 0.0)
    else:
        target = build_level1(p2).mat(label)
    got = cop.counit_contract()
    rep.add(Check(f"(eps x 1) Delta {label}", float(np.max(np.abs(got - target)))))
    return rep
