"""Characteristic polynomials of the 0/1 tridiagonal family, built three ways.

The degree-n polynomial p_n satisfies p_n = -x*p_{n-1} - p_{n-2} with
p_1 = -x and p_2 = x^2 - 1. Its coefficient of x^(n-2i) is
(-1)^(n+i) * C(n-i, i), which ties each coefficient column to a diagonal of
Pascal's triangle. A determinant-plus-interpolation oracle provides a third,
independent construction for cross-validation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .polycore import (
    IntPoly,
    bareiss_det,
    binomial,
    build_An_minus_tI,
    poly_add,
    poly_neg,
    poly_shift_mul,
)


class Method(enum.Enum):
    RECURRENCE = "recurrence"
    CLOSED_FORM = "closed_form"
    DET_ORACLE = "det_oracle"


class InternalConsistencyError(Exception):
    """The determinant oracle produced a non-integer coefficient."""


@dataclass(frozen=True)
class CharPolyRecord:
    n: int
    poly: IntPoly
    method: Method

    def __post_init__(self):
        n, p = self.n, self.poly
        if p.degree() != n:
            raise ValueError(f"degree {p.degree()} != n = {n}")
        if p.coefficient(n) != (-1) ** n:
            raise ValueError(f"leading coefficient must be (-1)^{n}")
        if n % 2 == 0:
            if p.coefficient(0) != (-1) ** (n // 2):
                raise ValueError("even-index constant term must be (-1)^(n/2)")
        elif p.coefficient(0) != 0:
            raise ValueError("odd-index constant term must be 0")


def charpoly_family(n: int) -> list[IntPoly]:
    """All of p_1 .. p_n from the three-term recurrence, in one pass."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = [IntPoly([0, -1])]
    if n >= 2:
        out.append(IntPoly([-1, 0, 1]))
    for _ in range(3, n + 1):
        out.append(poly_add(poly_neg(poly_shift_mul(out[-1])), poly_neg(out[-2])))
    return out


def charpoly_recurrence(n: int) -> CharPolyRecord:
    """p_n by iterating the three-term recurrence from p_1, p_2."""
    return CharPolyRecord(n, charpoly_family(n)[-1], Method.RECURRENCE)


def closed_form_coefficient(m: int, i: int) -> int:
    """The coefficient of x^(m-2i): (-1)^(m+i) * C(m-i, i)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not 0 <= i <= m // 2:
        raise ValueError(f"i must be in 0..{m // 2}, got {i}")
    return (-1) ** (m + i) * binomial(m - i, i)


def charpoly_closed_form(n: int) -> CharPolyRecord:
    """p_n assembled directly from its closed-form coefficients."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coeffs = [0] * (n + 1)
    for i in range(n // 2 + 1):
        coeffs[n - 2 * i] = closed_form_coefficient(n, i)
    return CharPolyRecord(n, IntPoly(coeffs), Method.CLOSED_FORM)


def _interpolation_nodes(count: int) -> list[int]:
    # integers nearest zero: 0, 1, -1, 2, -2, ... keeps Bareiss entries small
    nodes = [0]
    k = 1
    while len(nodes) < count:
        nodes.append(k)
        if len(nodes) < count:
            nodes.append(-k)
        k += 1
    return nodes


def charpoly_det_oracle(n: int, sample_count: int | None = None) -> CharPolyRecord:
    """p_n reconstructed from exact determinant samples.

    Evaluates det(A_n - t*I) by fraction-free elimination at integer nodes and
    recovers the unique degree-<=n polynomial by exact Lagrange interpolation
    over the rationals. Every denominator must cancel; a non-integer
    coefficient signals an arithmetic bug, not bad input.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if sample_count is None:
        sample_count = n + 1
    if sample_count < n + 1:
        raise ValueError(f"need at least {n + 1} samples, got {sample_count}")
    nodes = _interpolation_nodes(sample_count)
    values = [bareiss_det(build_An_minus_tI(n, t)) for t in nodes]

    # Lagrange basis, accumulated coefficientwise over Fraction
    acc = [Fraction(0)] * (sample_count + 1)
    for j, (tj, vj) in enumerate(zip(nodes, values)):
        basis = [Fraction(1)]
        denom = 1
        for k, tk in enumerate(nodes):
            if k == j:
                continue
            # basis *= (x - tk)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d + 1] += c
                nxt[d] -= c * tk
            basis = nxt
            denom *= tj - tk
        scale = Fraction(vj, denom)
        for d, c in enumerate(basis):
            acc[d] += c * scale
    coeffs = []
    for d, c in enumerate(acc):
        if c.denominator != 1:
            raise InternalConsistencyError(
                f"non-integer coefficient {c} at degree {d} for n={n}"
            )
        coeffs.append(c.numerator)
    return CharPolyRecord(n, IntPoly(coeffs), Method.DET_ORACLE)


def pascal_diagonal(d: int, count: int) -> list[int]:
    """First `count` entries of the d-th diagonal of Pascal's triangle.

    Entry j is C(d-1+j, d-1); these are the absolute values of the d-th
    coefficient column of the polynomial table.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return [binomial(d - 1 + j, d - 1) for j in range(count)]
