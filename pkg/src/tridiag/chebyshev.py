"""Chebyshev polynomials of the second kind and their monic normalization.

U_n follows U_n = 2x*U_{n-1} - U_{n-2} from U_0 = 1, U_1 = 2x; the normalized
S_n follows S_n = x*S_{n-1} - S_{n-2} from S_0 = 1, S_1 = x. Two substitution
operators (x -> -x and x -> x/2) connect both families to the tridiagonal
characteristic polynomials: reflect(S_n) equals p_n, and halve_variable(U_n)
equals S_n, exactly at the coefficient level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polycore import IntPoly, poly_add, poly_neg, poly_shift_mul


class IntegralityViolation(Exception):
    """x -> x/2 produced a non-integer coefficient."""


def chebyshev_U(n: int) -> IntPoly:
    """Second-kind Chebyshev polynomial, exact integer coefficients."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    prev = IntPoly([1])
    if n == 0:
        return prev
    cur = IntPoly([0, 2])
    for _ in range(2, n + 1):
        doubled = poly_shift_mul(cur)
        prev, cur = cur, poly_add(poly_add(doubled, doubled), poly_neg(prev))
    return cur


def chebyshev_S(n: int) -> IntPoly:
    """Monic normalization of the second-kind Chebyshev polynomial."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    prev = IntPoly([1])
    if n == 0:
        return prev
    cur = IntPoly([0, 1])
    for _ in range(2, n + 1):
        prev, cur = cur, poly_add(poly_shift_mul(cur), poly_neg(prev))
    return cur


@dataclass(frozen=True)
class ChebyshevPair:
    n: int
    U: IntPoly
    S: IntPoly

    def __post_init__(self):
        if self.U.degree() != self.n or self.S.degree() != self.n:
            raise ValueError("degree mismatch")
        if self.U.coefficient(self.n) != 2**self.n:
            raise ValueError("U must have leading coefficient 2^n")
        if self.S.coefficient(self.n) != 1:
            raise ValueError("S must be monic")


def chebyshev_pair(n: int) -> ChebyshevPair:
    return ChebyshevPair(n, chebyshev_U(n), chebyshev_S(n))


def reflect(p: IntPoly) -> IntPoly:
    """Substitute x -> -x: negate every odd-index coefficient."""
    return IntPoly([-c if k % 2 else c for k, c in enumerate(p.coeffs)])


def halve_variable(p: IntPoly) -> IntPoly:
    """Substitute x -> x/2: divide the coefficient of x^k by 2^k.

    Defined only when every division is exact (true for every U_n).
    """
    out = []
    for k, c in enumerate(p.coeffs):
        q, r = divmod(c, 1 << k)
        if r:
            raise IntegralityViolation(
                f"coefficient {c} of x^{k} is not divisible by 2^{k}"
            )
        out.append(q)
    return IntPoly(out)
