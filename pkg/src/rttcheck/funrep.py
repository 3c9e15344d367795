"""Four-dimensional fundamental representation of the extended superalgebra.

Generators on the 2|2 space: two sl(2)'s L^a_b, Lt^al_be (traceless), the
supercharges Q^al_a, Qb^a_al dressed by the outer-automorphism parameters
a, b, c, d, the central eigenvalues H, C, Cb, U, the trace eigenvalue A and
the level-one symmetries B (secret) and BB (higher secret), which act as
(u^k / 2H) times the parity matrix plus a free multiple of the identity.

Labels are tuples: ("L", a, b), ("Lt", al, be), ("Q", al, a), ("Qb", a, al),
("H",), ("C",), ("Cb",), ("U",), ("A",) and the hatted level-one versions
("L^", a, b) etc. obtained by multiplying with the evaluation parameter u.
"""

from __future__ import annotations

import numpy as np

from .graded import EPS, SPACE22, GradedMatrix, basis_matrix, graded_commutator, cross
from .kinematics import (SpectralPoint, abcd_of, central_eigenvalues,
                         crossing_map, u_of)
from .report import Check, Report

__all__ = [
    "RepresentationTable",
    "EVEN_IDX", "ODD_IDX",
    "build_level0", "build_level1", "build_secret", "build_higher_secret",
    "level0_labels", "level1_labels", "weight",
    "verify_defining_relations", "verify_secret_relations", "crossing_rep_check",
    "gamma_conjugated", "PARITY4", "ID4",
]

EVEN_IDX = (1, 2)
ODD_IDX = (3, 4)

ID4 = np.eye(4, dtype=complex)
# sum_A E^A_A: the parity matrix diag(1,1,-1,-1)
PARITY4 = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)


def _E(a, b) -> np.ndarray:
    return basis_matrix(SPACE22, a, b).entries


class RepresentationTable(dict):
    """label -> 4x4 ndarray, plus the spectral point it was built at."""

    def __init__(self, point: SpectralPoint):
        super().__init__()
        self.point = point

    def mat(self, label) -> np.ndarray:
        key = (label,) if isinstance(label, str) else tuple(label)
        if key[0] == "L" and key[1] == key[2] == 2:
            return -self[("L", 1, 1)]
        if key[0] == "Lt" and key[1] == key[2] == 4:
            return -self[("Lt", 3, 3)]
        if key[0] == "L^" and key[1] == key[2] == 2:
            return -self[("L^", 1, 1)]
        if key[0] == "Lt^" and key[1] == key[2] == 4:
            return -self[("Lt^", 3, 3)]
        return self[key]

    def graded(self, label) -> GradedMatrix:
        return GradedMatrix(SPACE22, self.mat(label))


def level0_labels(include_central: bool = True) -> list[tuple]:
    labels = [("L", 1, 1), ("L", 1, 2), ("L", 2, 1),
              ("Lt", 3, 3), ("Lt", 3, 4), ("Lt", 4, 3)]
    labels += [("Q", al, a) for al in ODD_IDX for a in EVEN_IDX]
    labels += [("Qb", a, al) for a in EVEN_IDX for al in ODD_IDX]
    if include_central:
        labels += [("H",), ("C",), ("Cb",), ("U",)]
    return labels


def level1_labels(include_central: bool = True) -> list[tuple]:
    hats = []
    for lab in level0_labels(include_central=False):
        hats.append((lab[0] + "^",) + lab[1:])
    hats.append(("H^",))
    if include_central:
        hats += [("C^",), ("Cb^",)]
    return hats


def weight(label) -> int:
    """Braiding weight [J]: 0 for even generators, +-1 for Q/Qb, +-2 for C/Cb."""
    kind = label[0].rstrip("^")
    return {"L": 0, "Lt": 0, "H": 0, "A": 0, "B": 0, "BB": 0,
            "Q": 1, "Qb": -1, "C": 2, "Cb": -2, "U": 0}[kind]


def build_level0(point: SpectralPoint) -> RepresentationTable:
    """Level-zero generator matrices at the given spectral point."""
    ab = abcd_of(point)
    a, b, c, d = ab.a, ab.b, ab.c, ab.d
    ce = central_eigenvalues(point)
    t = RepresentationTable(point)

    t[("L", 1, 1)] = 0.5 * (_E(1, 1) - _E(2, 2))
    t[("L", 1, 2)] = _E(1, 2)
    t[("L", 2, 1)] = _E(2, 1)
    t[("Lt", 3, 3)] = -0.5 * (_E(3, 3) - _E(4, 4))
    t[("Lt", 3, 4)] = -_E(3, 4)
    t[("Lt", 4, 3)] = -_E(4, 3)

    for al in ODD_IDX:
        for aa in EVEN_IDX:
            q = a * _E(al, aa)
            for bb in EVEN_IDX:
                for be in ODD_IDX:
                    q = q - b * EPS[aa - 1, bb - 1] * EPS[al - 1, be - 1] * _E(bb, be)
            t[("Q", al, aa)] = q
    for aa in EVEN_IDX:
        for al in ODD_IDX:
            q = -d * _E(aa, al)
            for bb in EVEN_IDX:
                for be in ODD_IDX:
                    q = q + c * EPS[aa - 1, bb - 1] * EPS[al - 1, be - 1] * _E(be, bb)
            t[("Qb", aa, al)] = q

    t[("H",)] = (a * d + b * c) * ID4
    t[("C",)] = (a * b) * ID4
    t[("Cb",)] = (c * d) * ID4
    t[("U",)] = ce.U * ID4
    # trace eigenvalue, fixed by the N = 1 normalization of the T-matrix
    t[("A",)] = ((point.xm - point.xp) / point.hbar - 0.5) * ID4
    return t


def build_level1(point: SpectralPoint) -> RepresentationTable:
    """Evaluation representation: each hatted generator is u times level zero."""
    t = build_level0(point)
    u = u_of(point)
    for lab in level0_labels(include_central=False) + [("H",)]:
        t[(lab[0] + "^",) + lab[1:]] = u * t.mat(lab)
    ce = central_eigenvalues(point)
    t[("C^",)] = 0.5 * (1 + ce.U**2) * ce.H * ID4
    t[("Cb^",)] = 0.5 * (1 + ce.U**-2) * ce.H * ID4
    return t


def build_secret(point: SpectralPoint, a_hat: complex = 0.0) -> np.ndarray:
    """B = (u / 2H) sum_A E^A_A + a_hat * identity."""
    H = central_eigenvalues(point).H
    if abs(H) < 1e-13:
        raise ValueError("secret symmetry is singular at H = 0")
    return (u_of(point) / (2 * H)) * PARITY4 + a_hat * ID4


def build_higher_secret(point: SpectralPoint, aa_hat: complex = 0.0) -> np.ndarray:
    """BB = (u^2 / 2(ad+bc)) sum_A E^A_A + aa_hat * identity."""
    ab = abcd_of(point)
    h = ab.a * ab.d + ab.b * ab.c
    if abs(h) < 1e-13:
        raise ValueError("higher secret symmetry is singular at ad + bc = 0")
    return (u_of(point) ** 2 / (2 * h)) * PARITY4 + aa_hat * ID4


def gamma_conjugated(mat: np.ndarray, gamma_old, gamma_new) -> np.ndarray:
    """Similarity transform diag(1,1,c,c) relating tables at different gamma."""
    c = gamma_new / gamma_old
    dmat = np.diag([1.0, 1.0, c, c]).astype(complex)
    return dmat @ mat @ np.linalg.inv(dmat)


def _gm(m: np.ndarray) -> GradedMatrix:
    return GradedMatrix(SPACE22, m)


def _gcomm(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return graded_commutator(_gm(x), _gm(y)).entries


def verify_defining_relations(table: RepresentationTable) -> Report:
    """All brackets of the extended superalgebra as 4x4 identities.

    The central values C, Cb on the right-hand sides are taken from the
    braiding eigenvalue, C = (U^2-1)/hbar and Cb = (1-U^-2)/hbar, so that a
    perturbed U visibly breaks the closure (negative control).
    """
    rep = Report("algebra")
    hbar = table.point.hbar
    U = table.mat(("U",))[0, 0]
    Cval = (U**2 - 1) / hbar
    Cbval = (1 - U**-2) / hbar
    L = lambda a, b: table.mat(("L", a, b))
    Lt = lambda a, b: table.mat(("Lt", a, b))
    Q = lambda al, a: table.mat(("Q", al, a))
    Qb = lambda a, al: table.mat(("Qb", a, al))
    H = table.mat(("H",))
    d = lambda i, j: 1.0 if i == j else 0.0

    def add(name, lhs, rhs):
        rep.add(Check(name, float(np.max(np.abs(lhs - rhs)))))

    for a in EVEN_IDX:
        for b in EVEN_IDX:
            for c in EVEN_IDX:
                for e in EVEN_IDX:
                    add(f"[L{a}{b},L{c}{e}]", _gcomm(L(a, b), L(c, e)),
                        d(c, b) * L(a, e) - d(a, e) * L(c, b))
    for al in ODD_IDX:
        for be in ODD_IDX:
            for ga in ODD_IDX:
                for de in ODD_IDX:
                    add(f"[Lt{al}{be},Lt{ga}{de}]", _gcomm(Lt(al, be), Lt(ga, de)),
                        d(ga, be) * Lt(al, de) - d(al, de) * Lt(ga, be))
    for a in EVEN_IDX:
        for b in EVEN_IDX:
            for ga in ODD_IDX:
                for c in EVEN_IDX:
                    add(f"[L{a}{b},Q{ga}{c}]", _gcomm(L(a, b), Q(ga, c)),
                        -d(a, c) * Q(ga, b) + 0.5 * d(a, b) * Q(ga, c))
                for c in EVEN_IDX:
                    add(f"[L{a}{b},Qb{c}{ga}]", _gcomm(L(a, b), Qb(c, ga)),
                        d(c, b) * Qb(a, ga) - 0.5 * d(a, b) * Qb(c, ga))
    for al in ODD_IDX:
        for be in ODD_IDX:
            for ga in ODD_IDX:
                for a in EVEN_IDX:
                    add(f"[Lt{al}{be},Q{ga}{a}]", _gcomm(Lt(al, be), Q(ga, a)),
                        d(ga, be) * Q(al, a) - 0.5 * d(al, be) * Q(ga, a))
                    add(f"[Lt{al}{be},Qb{a}{ga}]", _gcomm(Lt(al, be), Qb(a, ga)),
                        -d(al, ga) * Qb(a, be) + 0.5 * d(al, be) * Qb(a, ga))
    for al in ODD_IDX:
        for a in EVEN_IDX:
            for be in ODD_IDX:
                for b in EVEN_IDX:
                    add(f"{{Q{al}{a},Q{be}{b}}}", _gcomm(Q(al, a), Q(be, b)),
                        EPS[a - 1, b - 1] * EPS[al - 1, be - 1] * Cval * ID4)
                    add(f"{{Qb{a}{al},Qb{b}{be}}}", _gcomm(Qb(a, al), Qb(b, be)),
                        EPS[a - 1, b - 1] * EPS[al - 1, be - 1] * Cbval * ID4)
                    add(f"{{Q{al}{a},Qb{b}{be}}}", _gcomm(Q(al, a), Qb(b, be)),
                        d(a, b) * Lt(al, be) + d(al, be) * L(b, a)
                        + 0.5 * d(al, be) * d(a, b) * H)
    # central elements commute with everything, and the table values agree
    # with the braiding formulas
    add("C-via-U", table.mat(("C",)), Cval * ID4)
    add("Cb-via-U", table.mat(("Cb",)), Cbval * ID4)
    for lab in level0_labels(include_central=False):
        add(f"[H,{lab[0]}]", _gcomm(H, table.mat(lab)), 0 * ID4)
    return rep


def verify_secret_relations(table: RepresentationTable, bhat: np.ndarray,
                            bbhat: np.ndarray | None = None) -> Report:
    """Commutators of the secret symmetry with the level-zero generators."""
    rep = Report("secret")
    point = table.point
    u = u_of(point)
    U = central_eigenvalues(point).U

    def add(name, lhs, rhs):
        rep.add(Check(name, float(np.max(np.abs(lhs - rhs)))))

    for al in ODD_IDX:
        for a in EVEN_IDX:
            qhat = u * table.mat(("Q", al, a))
            rhs = -qhat
            for b in EVEN_IDX:
                for be in ODD_IDX:
                    rhs = rhs + (1 + U**2) * EPS[a - 1, b - 1] * EPS[al - 1, be - 1] \
                        * table.mat(("Qb", b, be))
            add(f"[B,Q{al}{a}]", bhat @ table.mat(("Q", al, a))
                - table.mat(("Q", al, a)) @ bhat, rhs)
    for a in EVEN_IDX:
        for al in ODD_IDX:
            qbhat = u * table.mat(("Qb", a, al))
            rhs = qbhat
            for b in EVEN_IDX:
                for be in ODD_IDX:
                    rhs = rhs - (1 + U**-2) * EPS[a - 1, b - 1] * EPS[al - 1, be - 1] \
                        * table.mat(("Q", be, b))
            add(f"[B,Qb{a}{al}]", bhat @ table.mat(("Qb", a, al))
                - table.mat(("Qb", a, al)) @ bhat, rhs)
    for lab in [("L", 1, 2), ("L", 2, 1), ("L", 1, 1), ("Lt", 3, 4), ("Lt", 4, 3),
                ("Lt", 3, 3), ("H",), ("C",), ("Cb",), ("U",)]:
        add(f"[B,{lab[0]}{''.join(map(str, lab[1:]))}]",
            bhat @ table.mat(lab) - table.mat(lab) @ bhat, 0 * ID4)
    if bbhat is not None:
        # the higher secret symmetry is u B up to an identity shift
        u_b = u * bhat
        diff = bbhat - u_b
        off = diff - np.trace(diff) / 4 * ID4
        rep.add(Check("BB-vs-uB-identity-shift", float(np.max(np.abs(off)))))
    return rep


def crossing_rep_check(point: SpectralPoint, a_hat: complex = 0.7 + 0.1j) -> Report:
    """Antipode-vs-crossed-representation identity for every level-0 label.

    rho_ubar(antipode(X)) crossed equals rho_u(X), with antipode(J) =
    -U^{-[J]} J; for the secret symmetry the identity fixes the parameter of
    the crossed representation to a_hat' = -a_hat - hbar * H.
    """
    rep = Report("crossing-rep")
    table = build_level0(point)
    pbar = crossing_map(point)
    tbar = build_level0(pbar)
    Ubar = central_eigenvalues(pbar).U
    for lab in level0_labels():
        if lab == ("U",):
            sigma = np.linalg.inv(tbar.mat(lab))  # group-like: antipode is the inverse
        else:
            sigma = -(Ubar ** (-weight(lab))) * tbar.mat(lab)
        lhs = cross(_gm(sigma)).entries
        rhs = table.mat(lab)
        rep.add(Check(f"cross-rep {lab[0]}{''.join(map(str, lab[1:]))}",
                      float(np.max(np.abs(lhs - rhs)))))
    # secret symmetry with the shifted identity parameter
    H = central_eigenvalues(point).H
    hbar = point.hbar
    a_hat_crossed = -a_hat - hbar * H
    sig_b = -build_secret(pbar, a_hat_crossed) + hbar * tbar.mat(("H",))
    lhs = cross(_gm(sig_b)).entries
    rep.add(Check("cross-rep B", float(np.max(np.abs(lhs - build_secret(point, a_hat))))))
    return rep
