"""Z2-graded dense linear algebra on C^{m|n} and its tensor powers.

Basis conventions: the space C^{m|n} is spanned by m even and n odd basis
vectors; basis index A has grading |A| = 0 for A <= m and 1 for A > m.
The basis supermatrix E^A_B is zero except for (-1)^{|B|} in row A, column B,
so that E^A_B E^C_D = (-1)^{|B|} delta^C_B E^A_D.

The graded tensor product of operators obeys
(A (x) B)(C (x) D) = (-1)^{|B||C|} AC (x) BD; entrywise this is
(X (x) Y)[(i,j),(k,l)] = X[i,k] Y[j,l] (-1)^{(|j|+|l|)|k|}, which silently
decomposes a parity-mixed Y into its homogeneous parts.

All indices in this module are 1-based in the docstrings (matching the
usual supermatrix notation) but 0-based in code.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "GradedSpace",
    "GradedMatrix",
    "SPACE22",
    "EPS",
    "CONJ",
    "basis_matrix",
    "graded_tensor",
    "graded_permutation",
    "supertrace",
    "supertrace_leg",
    "supertranspose",
    "cross",
    "op_cross",
    "graded_commutator",
    "leg_map",
    "embed_two_site",
    "max_norm",
]


@dataclass(frozen=True)
class GradedSpace:
    """A Z2-graded vector space, possibly a tensor product of factors."""

    even_dim: int
    odd_dim: int
    factors: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.even_dim + self.odd_dim < 1:
            raise ValueError("total dimension must be at least 1")

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    @property
    def gradings(self) -> np.ndarray:
        """Grading (0/1) of each basis index."""
        if self.factors:
            g = self.factors[0].gradings
            for f in self.factors[1:]:
                g = (g[:, None] + f.gradings[None, :]).ravel() % 2
            return g
        return np.array([0] * self.even_dim + [1] * self.odd_dim, dtype=int)

    def tensor(self, other: "GradedSpace") -> "GradedSpace":
        facs = (self.factors or (self,)) + (other.factors or (other,))
        g = (self.gradings[:, None] + other.gradings[None, :]).ravel() % 2
        return GradedSpace(int(np.sum(g == 0)), int(np.sum(g == 1)), facs)


SPACE22 = GradedSpace(2, 2)

# Antisymmetric 2-tensor on each grading block of the 2|2 space, zero across
# blocks.  Sign convention pinned to eps_{12} = eps_{34} = +1 (raised and
# lowered components numerically equal); validated a posteriori by closure of
# the extended superalgebra brackets in funrep.
EPS = np.zeros((4, 4))
EPS[0, 1], EPS[1, 0] = 1.0, -1.0
EPS[2, 3], EPS[3, 2] = 1.0, -1.0

# Charge conjugation matrix: C E^A = -eps^{AB} E^B, i.e. C[B,A] = -eps^{AB}.
CONJ = -EPS.T.copy()


def _gradings(space) -> np.ndarray:
    if isinstance(space, GradedSpace):
        return space.gradings
    return np.asarray(space, dtype=int)


def _parity_of(entries: np.ndarray, g: np.ndarray, tol: float = 0.0) -> str:
    nz = np.abs(entries) > tol
    if not nz.any():
        return "even"
    par = (g[:, None] + g[None, :]) % 2
    has_even = bool(nz[par == 0].any())
    has_odd = bool(nz[par == 1].any())
    if has_even and has_odd:
        return "mixed"
    return "odd" if has_odd else "even"


@dataclass(frozen=True)
class GradedMatrix:
    """Dense complex endomorphism of a graded space, with parity metadata."""

    space: GradedSpace
    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.shape != (self.space.dim, self.space.dim):
            raise ValueError(
                f"entries shape {m.shape} does not match dim {self.space.dim}"
            )
        object.__setattr__(self, "entries", m)

    @property
    def parity(self) -> str:
        return _parity_of(self.entries, self.space.gradings)

    @property
    def gradings(self) -> np.ndarray:
        return self.space.gradings

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        return GradedMatrix(self.space, self.entries @ other.entries)

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        return GradedMatrix(self.space, self.entries + other.entries)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        return GradedMatrix(self.space, self.entries - other.entries)

    def __mul__(self, c: complex) -> "GradedMatrix":
        return GradedMatrix(self.space, self.entries * c)

    __rmul__ = __mul__

    def __neg__(self) -> "GradedMatrix":
        return GradedMatrix(self.space, -self.entries)

    def inv(self) -> "GradedMatrix":
        return GradedMatrix(self.space, np.linalg.inv(self.entries))


def identity(space: GradedSpace) -> GradedMatrix:
    return GradedMatrix(space, np.eye(space.dim, dtype=complex))


def basis_matrix(space: GradedSpace, A: int, B: int) -> GradedMatrix:
    """E^A_B: single entry (-1)^{|B|} at row A, column B (1-based A, B)."""
    d = space.dim
    if not (1 <= A <= d and 1 <= B <= d):
        raise IndexError(f"basis indices ({A},{B}) out of range 1..{d}")
    g = space.gradings
    m = np.zeros((d, d), dtype=complex)
    m[A - 1, B - 1] = (-1.0) ** g[B - 1]
    return GradedMatrix(space, m)


def _tensor_entries(x: np.ndarray, gx: np.ndarray, y: np.ndarray, gy: np.ndarray) -> np.ndarray:
    """Kronecker product dressed with the Koszul sign (-1)^{(|j|+|l|)|k|}."""
    ypar = (gy[:, None] + gy[None, :]) % 2
    sign = (-1.0) ** (ypar[None, :, :] * gx[:, None, None])  # [k, j, l]
    out = np.einsum("ik,jl,kjl->ijkl", x, y, sign)
    dx, dy = x.shape[0], y.shape[0]
    return out.reshape(dx * dy, dx * dy)


def graded_tensor(x: GradedMatrix, y: GradedMatrix) -> GradedMatrix:
    """Graded operator tensor product x (x) y."""
    ent = _tensor_entries(x.entries, x.gradings, y.entries, y.gradings)
    return GradedMatrix(x.space.tensor(y.space), ent)


def graded_permutation(space: GradedSpace) -> GradedMatrix:
    """P with P(v^A (x) v^B) = (-1)^{|A||B|} v^B (x) v^A on space (x) space."""
    d = space.dim
    g = space.gradings
    p = np.zeros((d * d, d * d), dtype=complex)
    for a in range(d):
        for b in range(d):
            p[b * d + a, a * d + b] = (-1.0) ** (g[a] * g[b])
    return GradedMatrix(space.tensor(space), p)


def supertrace(x: GradedMatrix) -> complex:
    """str X = sum_A (-1)^{|A|} X[A,A]."""
    ent = x.entries
    if ent.shape[0] != ent.shape[1]:
        raise ValueError("supertrace needs a square matrix")
    g = x.gradings
    return complex(np.sum((-1.0) ** g * np.diag(ent)))


def supertranspose(x: GradedMatrix) -> GradedMatrix:
    """Supertranspose; period four, with (X^ST)^ST = (-1)^{|X|} X.

    Entrywise X^ST[r,c] = (-1)^{|r||c|+|c|} X[c,r].  The anti-homomorphism
    property (XY)^ST = (-1)^{|X||Y|} Y^ST X^ST holds per homogeneous part.
    """
    if x.parity == "mixed":
        raise ValueError("supertranspose requires definite parity")
    g = x.gradings
    sign = (-1.0) ** ((g[:, None] * g[None, :] + g[None, :]) % 2)
    return GradedMatrix(x.space, sign * x.entries.T)


def cross(x: GradedMatrix) -> GradedMatrix:
    """Crossing operation X^C = C^{-1} X^ST C on the 2|2 space."""
    st = supertranspose(x).entries
    return GradedMatrix(x.space, np.linalg.inv(CONJ) @ st @ CONJ)


def op_cross(x: GradedMatrix) -> GradedMatrix:
    """Opposite crossing X^{C,C,C}; inverse of the crossing operation."""
    return cross(cross(cross(x)))


def graded_commutator(x: GradedMatrix, y: GradedMatrix) -> GradedMatrix:
    """[X, Y} = XY - (-1)^{|X||Y|} YX for definite-parity X, Y."""
    px, py = x.parity, y.parity
    if "mixed" in (px, py):
        raise ValueError("graded commutator requires definite parities")
    s = -1.0 if (px == "odd" and py == "odd") else 1.0
    return GradedMatrix(x.space, x.entries @ y.entries - s * y.entries @ x.entries)


# ---------------------------------------------------------------------------
# Leg-wise operations on two-site operators M in End(V1 (x) V2).
#
# Decomposition: M = sum m[i,k,j,l] unit_{ik} (x) unit_{jl} with
# m[i,k,j,l] = M[(i,j),(k,l)] (-1)^{(|j|+|l|)|k|}; leg maps act on the plain
# components and the Koszul signs are restored on reassembly.
# ---------------------------------------------------------------------------


def _koszul_sign(g1: np.ndarray, g2: np.ndarray) -> np.ndarray:
    """sign[j,k,l] = (-1)^{(|j|+|l|) |k|} for second-leg entry (j,l), first-leg column k."""
    ypar = (g2[:, None] + g2[None, :]) % 2
    return (-1.0) ** (ypar[:, None, :] * g1[None, :, None])


def _plain_components(m: np.ndarray, g1: np.ndarray, g2: np.ndarray) -> np.ndarray:
    """comp[i,j,k,l] with M = sum comp[i,j,k,l] unit_{ik} (x) unit_{jl}."""
    d1, d2 = g1.size, g2.size
    t = m.reshape(d1, d2, d1, d2)
    return t * _koszul_sign(g1, g2)[None, :, :, :]


def _assemble(comp: np.ndarray, g1: np.ndarray, g2: np.ndarray) -> np.ndarray:
    d1, d2 = g1.size, g2.size
    t = comp * _koszul_sign(g1, g2)[None, :, :, :]
    return t.reshape(d1 * d2, d1 * d2)


def leg_map(x: GradedMatrix, f, leg: int) -> GradedMatrix:
    """Apply the linear map f (on single-site GradedMatrix) to one leg.

    f must preserve the factor space.  Works on operators whose space is a
    two-fold tensor product of 2|2 factors (16x16 here).
    """
    facs = x.space.factors
    if len(facs) != 2:
        raise ValueError("leg_map expects a two-factor operator")
    g1, g2 = facs[0].gradings, facs[1].gradings
    comp = _plain_components(x.entries, g1, g2)
    d = facs[leg - 1].dim
    fmat = np.zeros((d, d, d, d), dtype=complex)  # f(unit_{ik}) = fmat[:, :, i, k]
    for i in range(d):
        for k in range(d):
            unit = np.zeros((d, d), dtype=complex)
            unit[i, k] = 1.0
            fmat[:, :, i, k] = f(GradedMatrix(facs[leg - 1], unit)).entries
    if leg == 1:
        out = np.einsum("pqik,ijkl->pjql", fmat, comp)
    else:
        out = np.einsum("pqjl,ijkl->ipkq", fmat, comp)
    return GradedMatrix(x.space, _assemble(out, g1, g2))


def supertrace_leg(x: GradedMatrix, leg: int) -> GradedMatrix:
    """Partial supertrace over one leg of a two-site operator."""
    facs = x.space.factors
    if len(facs) != 2:
        raise ValueError("supertrace_leg expects a two-factor operator")
    g1, g2 = facs[0].gradings, facs[1].gradings
    comp = _plain_components(x.entries, g1, g2)
    if leg == 1:
        ent = np.einsum("i,ijil->jl", (-1.0) ** g1, comp)
        return GradedMatrix(facs[1], ent)
    ent = np.einsum("j,ijkj->ik", (-1.0) ** g2, comp)
    return GradedMatrix(facs[0], ent)


def embed_two_site(x: GradedMatrix, pos: tuple[int, int], space: GradedSpace) -> GradedMatrix:
    """Embed a two-site operator into three tensor factors of `space`.

    pos is a pair from {(1,2),(2,3),(1,3)}; identity padding on the free
    factor, with all Koszul signs handled by conjugation with the graded
    permutation for the (1,3) case.
    """
    one = identity(space)
    if pos == (1, 2):
        return graded_tensor(x, one)
    if pos == (2, 3):
        return graded_tensor(one, x)
    if pos == (1, 3):
        p23 = graded_tensor(one, graded_permutation(space))
        return p23 @ graded_tensor(x, one) @ p23
    raise ValueError(f"unsupported position pair {pos}")


def max_norm(x) -> float:
    ent = x.entries if isinstance(x, GradedMatrix) else np.asarray(x)
    return float(np.max(np.abs(ent))) if ent.size else 0.0
