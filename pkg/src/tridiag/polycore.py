"""Exact integer arithmetic substrate: dense integer polynomials, Gaussian
integers, square integer matrices, binomials, and a fraction-free determinant.

Polynomials are stored dense, low-to-high: coeffs[k] is the coefficient of
x^k. The zero polynomial stores an empty tuple. All values are immutable and
all operations are pure functions, so everything here is safe to share across
threads.
"""

from __future__ import annotations

import math
from typing import Sequence


class IntPoly:
    """Dense univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        """Coefficient of x^k (0 when k is out of range)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"


class GaussianInt:
    """Exact Gaussian integer a + b*i with big-integer parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        object.__setattr__(self, "re", int(re))
        object.__setattr__(self, "im", int(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianInt is immutable")

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __eq__(self, other):
        return (
            isinstance(other, GaussianInt)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"


class IntMatrix:
    """Square matrix of arbitrary-precision integers."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rs = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rs)
        for row in rs:
            if len(row) != n:
                raise ValueError("matrix must be square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]!r})"


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    """Coefficientwise sum, normalized."""
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return IntPoly(out)


def poly_neg(p: IntPoly) -> IntPoly:
    """Negate every coefficient."""
    return IntPoly([-c for c in p.coeffs])


def poly_shift_mul(p: IntPoly) -> IntPoly:
    """Multiply by x: shift every coefficient index up by one."""
    if p.is_zero():
        return p
    return IntPoly((0,) + p.coeffs)


def poly_derivative(p: IntPoly) -> IntPoly:
    """Formal derivative."""
    return IntPoly([k * c for k, c in enumerate(p.coeffs)][1:])


def poly_eval_int(p: IntPoly, t: int) -> int:
    """Exact Horner evaluation at an integer point."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_eval_gaussian(p: IntPoly, z: GaussianInt) -> GaussianInt:
    """Exact Horner evaluation at a Gaussian integer."""
    acc = GaussianInt(0, 0)
    for c in reversed(p.coeffs):
        acc = acc * z + GaussianInt(c, 0)
    return acc


def binomial(n: int, r: int) -> int:
    """C(n, r), with 0 for r < 0 or r > n so summations need no edge guards."""
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def build_An_minus_tI(n: int, t: int) -> IntMatrix:
    """The n-by-n matrix with -t on the diagonal and 1 on the off-diagonals."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = -t
        if i > 0:
            row[i - 1] = 1
        if i + 1 < n:
            row[i + 1] = 1
        rows.append(row)
    return IntMatrix(rows)


def bareiss_det(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every division performed is exact, so the computation stays in the
    integers. Zero pivots are handled by row swap with a sign flip; a fully
    zero pivot column means the determinant is zero.
    """
    n = M.n
    if n == 0:
        return 1
    a = [list(row) for row in M.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]
