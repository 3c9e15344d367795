"""Truncated series in t = 1/u, with scalar or matrix coefficients.

A ScalarSeries stores coefficients c_k for k = val .. tmax representing
sum_k c_k t^k; val may be negative (x+-(u) starts at t^{-1}).  All arithmetic
truncates at tmax, which is threaded through every operation, so a product of
two series keeps only the orders that are actually trustworthy.

Jet is the order-one analogue around a finite point: (value, d/du value).
The R-matrix coefficient formulas are written generically, so they accept
plain numbers, Jet, or ScalarSeries arguments alike.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

__all__ = ["ScalarSeries", "MatrixSeries", "Jet", "param_series", "crossed_param_series"]


def _as_series(x, tmax):
    if isinstance(x, ScalarSeries):
        return x
    return ScalarSeries(0, np.array([complex(x)]), tmax)


class ScalarSeries:
    """sum_{k=val}^{tmax} c[k-val] t^k with t = 1/u."""

    __slots__ = ("val", "c", "tmax")

    def __init__(self, val: int, coeffs, tmax: int):
        c = np.asarray(coeffs, dtype=complex)
        # trim exact leading zeros so valuations stay meaningful
        nz = np.nonzero(c)[0]
        if nz.size == 0:
            val, c = 0, np.zeros(1, dtype=complex)
        else:
            c = c[nz[0]:]
            val += int(nz[0])
        keep = tmax - val + 1
        self.val = val
        self.c = c[:max(keep, 0)] if keep >= 1 else np.zeros(0, dtype=complex)
        self.tmax = tmax

    @classmethod
    def variable(cls, tmax: int) -> "ScalarSeries":
        """The series u = t^{-1}."""
        return cls(-1, [1.0], tmax)

    @classmethod
    def const(cls, x, tmax: int) -> "ScalarSeries":
        return cls(0, [complex(x)], tmax)

    def coeff(self, k: int) -> complex:
        """Coefficient of t^k (equivalently of u^{-k})."""
        if k > self.tmax:
            raise IndexError(f"order t^{k} beyond truncation {self.tmax}")
        i = k - self.val
        return complex(self.c[i]) if 0 <= i < self.c.size else 0j

    def __add__(self, other):
        other = _as_series(other, self.tmax)
        tmax = min(self.tmax, other.tmax)
        val = min(self.val, other.val)
        n = tmax - val + 1
        out = np.zeros(n, dtype=complex)
        for s in (self, other):
            i0 = s.val - val
            m = min(s.c.size, n - i0)
            if m > 0:
                out[i0:i0 + m] += s.c[:m]
        return ScalarSeries(val, out, tmax)

    __radd__ = __add__

    def __neg__(self):
        return ScalarSeries(self.val, -self.c, self.tmax)

    def __sub__(self, other):
        return self + (-_as_series(other, self.tmax))

    def __rsub__(self, other):
        return _as_series(other, self.tmax) + (-self)

    def __mul__(self, other):
        other = _as_series(other, self.tmax)
        tmax = min(self.tmax, other.tmax)
        val = self.val + other.val
        n = min(self.c.size + other.c.size - 1, tmax - val + 1)
        if n < 1:
            return ScalarSeries(0, [0.0], tmax)
        out = np.convolve(self.c, other.c)[:n]
        return ScalarSeries(val, out, tmax)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.c.size == 0 or self.c[0] == 0:
            raise ZeroDivisionError("series reciprocal needs a nonzero leading coefficient")
        tmax = self.tmax if self.val <= 0 else self.tmax - 2 * self.val
        n = tmax + self.val + 1  # result covers orders -val .. tmax
        if n < 1:
            return ScalarSeries(0, [0.0], tmax)
        a = self.c
        b = np.zeros(n, dtype=complex)
        b[0] = 1 / a[0]
        for k in range(1, n):
            s = 0j
            for j in range(1, min(k, a.size - 1) + 1):
                s += a[j] * b[k - j]
            b[k] = -s / a[0]
        return ScalarSeries(-self.val, b, tmax)

    def __truediv__(self, other):
        return self * _as_series(other, self.tmax).reciprocal()

    def __rtruediv__(self, other):
        return _as_series(other, self.tmax) * self.reciprocal()

    def sqrt(self):
        """Principal square root; valuation must be even."""
        if self.val % 2:
            raise ValueError("series sqrt needs even valuation")
        if self.c.size == 0 or self.c[0] == 0:
            raise ZeroDivisionError("series sqrt needs a nonzero leading coefficient")
        n = self.c.size
        b = np.zeros(n, dtype=complex)
        b[0] = cmath.sqrt(self.c[0])
        for k in range(1, n):
            s = sum(b[j] * b[k - j] for j in range(1, k))
            b[k] = (self.c[k] - s) / (2 * b[0])
        return ScalarSeries(self.val // 2, b, self.tmax - self.val // 2)

    def log(self):
        """log of the series; requires valuation 0 (log of leading constant)."""
        if self.val != 0:
            raise ValueError("series log needs valuation 0")
        a0 = self.c[0]
        rest = self * (1 / a0) - 1
        out = ScalarSeries.const(cmath.log(a0), self.tmax)
        term = ScalarSeries.const(1.0, self.tmax)
        for k in range(1, self.tmax + 1):
            term = term * rest
            out = out + term * ((-1.0) ** (k + 1) / k)
        return out

    def du(self):
        """Derivative d/du = -t^2 d/dt."""
        ks = np.arange(self.val, self.val + self.c.size)
        return ScalarSeries(self.val + 1, -ks * self.c, self.tmax)

    def __call__(self, u: complex) -> complex:
        t = 1 / u
        ks = np.arange(self.val, self.val + self.c.size)
        return complex(np.sum(self.c * t ** ks))

    def __repr__(self):
        terms = [f"({z:.4g})t^{k}" for k, z in zip(range(self.val, self.val + self.c.size), self.c) if z != 0]
        return " + ".join(terms) or "0"


class MatrixSeries:
    """Series with square-matrix coefficients; same truncation rules."""

    __slots__ = ("val", "c", "tmax", "dim")

    def __init__(self, val: int, coeffs, tmax: int):
        c = np.asarray(coeffs, dtype=complex)
        if c.ndim != 3:
            raise ValueError("coeffs must be a stack of square matrices")
        self.dim = c.shape[1]
        keep = tmax - val + 1
        self.val = val
        self.c = c[:max(keep, 0)]
        self.tmax = tmax

    @classmethod
    def from_scalar(cls, s: ScalarSeries, mat: np.ndarray) -> "MatrixSeries":
        return cls(s.val, s.c[:, None, None] * mat[None, :, :], s.tmax)

    def coeff(self, k: int) -> np.ndarray:
        if k > self.tmax:
            raise IndexError(f"order t^{k} beyond truncation {self.tmax}")
        i = k - self.val
        if 0 <= i < self.c.shape[0]:
            return self.c[i].copy()
        return np.zeros((self.dim, self.dim), dtype=complex)

    def _aligned(self, other):
        tmax = min(self.tmax, other.tmax)
        val = min(self.val, other.val)
        n = tmax - val + 1
        a = np.zeros((n, self.dim, self.dim), dtype=complex)
        b = np.zeros((n, self.dim, self.dim), dtype=complex)
        for src, dst in ((self, a), (other, b)):
            i0 = src.val - val
            m = min(src.c.shape[0], n - i0)
            if m > 0:
                dst[i0:i0 + m] = src.c[:m]
        return val, tmax, a, b

    def __add__(self, other):
        val, tmax, a, b = self._aligned(other)
        return MatrixSeries(val, a + b, tmax)

    def __sub__(self, other):
        val, tmax, a, b = self._aligned(other)
        return MatrixSeries(val, a - b, tmax)

    def __neg__(self):
        return MatrixSeries(self.val, -self.c, self.tmax)

    def __matmul__(self, other):
        tmax = min(self.tmax, other.tmax)
        val = self.val + other.val
        n = tmax - val + 1
        if n < 1:
            return MatrixSeries(0, np.zeros((1, self.dim, self.dim)), tmax)
        out = np.zeros((n, self.dim, self.dim), dtype=complex)
        for i, ai in enumerate(self.c):
            for j, bj in enumerate(other.c):
                if i + j < n:
                    out[i + j] += ai @ bj
        return MatrixSeries(val, out, tmax)

    def scale(self, s) -> "MatrixSeries":
        if isinstance(s, ScalarSeries):
            tmax = min(self.tmax, s.tmax)
            val = self.val + s.val
            n = tmax - val + 1
            out = np.zeros((n, self.dim, self.dim), dtype=complex)
            for i, ci in enumerate(s.c):
                for j, mj in enumerate(self.c):
                    if i + j < n:
                        out[i + j] += ci * mj
            return MatrixSeries(val, out, tmax)
        return MatrixSeries(self.val, self.c * s, self.tmax)

    def inv(self) -> "MatrixSeries":
        """Series inverse; leading coefficient must be invertible."""
        a0inv = np.linalg.inv(self.c[0])
        n = self.tmax - (-self.val) + 1
        if n < 1:
            raise ValueError("truncation too tight for series inverse")
        b = np.zeros((n, self.dim, self.dim), dtype=complex)
        b[0] = a0inv
        for k in range(1, n):
            s = np.zeros((self.dim, self.dim), dtype=complex)
            for j in range(1, min(k, self.c.shape[0] - 1) + 1):
                s += self.c[j] @ b[k - j]
            b[k] = -a0inv @ s
        return MatrixSeries(-self.val, b, self.tmax)

    def du(self) -> "MatrixSeries":
        ks = np.arange(self.val, self.val + self.c.shape[0])
        return MatrixSeries(self.val + 1, -ks[:, None, None] * self.c, self.tmax)

    def map_coeffs(self, f) -> "MatrixSeries":
        return MatrixSeries(self.val, np.stack([f(m) for m in self.c]), self.tmax)

    def __call__(self, u: complex) -> np.ndarray:
        t = 1 / u
        ks = np.arange(self.val, self.val + self.c.shape[0])
        return np.einsum("k,kij->ij", t ** ks, self.c)


@dataclass(frozen=True)
class Jet:
    """First-order Taylor data (value, d/du) for pointwise derivatives."""

    f: complex
    d: complex = 0.0

    def _lift(self, x):
        return x if isinstance(x, Jet) else Jet(complex(x), 0.0)

    def __add__(self, o):
        o = self._lift(o)
        return Jet(self.f + o.f, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.f, -self.d)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) + (-self)

    def __mul__(self, o):
        o = self._lift(o)
        return Jet(self.f * o.f, self.f * o.d + self.d * o.f)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        return Jet(self.f / o.f, (self.d * o.f - self.f * o.d) / (o.f * o.f))

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def sqrt(self):
        r = cmath.sqrt(self.f)
        return Jet(r, self.d / (2 * r))


def param_series(hbar, order: int):
    """Series in 1/u of (x+, x-, gamma, U) on the large-u (outside) branch.

    Returns a 4-tuple of ScalarSeries truncated at t^order.  x+- solve
    x + 1/x = u +- hbar/2 with x ~ u; U and gamma are principal square roots.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    u = ScalarSeries.variable(order)
    xs = []
    for sgn in (1, -1):
        w = u + sgn * hbar / 2
        # x = w (1 + sqrt(1 - 4/w^2)) / 2
        root = (1 - 4 / (w * w)).sqrt()
        xs.append(w * (1 + root) * 0.5)
    xp, xm = xs
    ub = (xp / xm).sqrt()
    gamma = (ub * (xp - xm)).sqrt()
    return xp, xm, gamma, ub


def crossed_param_series(hbar, order: int):
    """Parameter series on the crossed sheet: x -> 1/x, U -> 1/U, braided gamma."""
    xp, xm, gamma, ub = param_series(hbar, order)
    return 1 / xp, 1 / xm, (ub - 1 / ub) / gamma, 1 / ub
