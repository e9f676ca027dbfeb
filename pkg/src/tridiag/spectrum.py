"""Closed-form spectra of the tridiagonal family and exact containment.

Eigenvalue s of the n-by-n matrix is 2*cos(pi*s/(n+1)). Each eigenvalue
carries its exact angle s/(n+1) as a rational alongside the floating value,
so spectrum containment between family members is decided by integer
arithmetic alone; floating comparisons appear only in the exploratory
brute-force search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class EigenvalueSet:
    """Spectrum of the n-by-n family member.

    angles[k] is the exact rational (k+1)/(n+1); values[k] is the float
    2*cos(pi*angles[k]). Values are strictly decreasing and exactly
    antisymmetric: values[k] == -values[n-1-k].
    """

    n: int
    angles: tuple[Fraction, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != self.n or len(self.angles) != self.n:
            raise ValueError("need exactly n eigenvalues")
        for v in self.values:
            if not -2.0 < v < 2.0:
                raise ValueError(f"eigenvalue {v} outside (-2, 2)")
        for a, b in zip(self.values, self.values[1:]):
            if not a > b:
                raise ValueError("eigenvalues must be strictly decreasing")


@dataclass(frozen=True)
class ContainmentCertificate:
    """Index map witnessing that one spectrum sits inside another.

    With n = m + (m+1)*k, source index r maps to target index r*(k+1); the
    angle identity r/(m+1) == r*(k+1)/(n+1) is checked exactly on
    construction, so certified pairs agree as mathematical reals, not merely
    to floating tolerance.
    """

    m: int
    n: int
    k: int
    index_map: dict[int, int]

    def __post_init__(self):
        m, n, k = self.m, self.n, self.k
        if not (1 <= m < n):
            raise ValueError("need 1 <= m < n")
        if n - m != (m + 1) * k or k < 1:
            raise ValueError("k must satisfy n - m = (m+1)*k")
        seen = set()
        for r in range(1, m + 1):
            s = self.index_map.get(r)
            if s is None:
                raise ValueError(f"index map misses r={r}")
            if not 1 <= s <= n:
                raise ValueError(f"target index {s} outside 1..{n}")
            if s in seen:
                raise ValueError("index map is not injective")
            seen.add(s)
            if Fraction(r, m + 1) != Fraction(s, n + 1):
                raise ValueError(f"angle mismatch at r={r}: {r}/{m+1} != {s}/{n+1}")


class NotSufficient(Exception):
    """The arithmetic containment condition n = m mod (m+1) does not hold."""

    def __init__(self, m: int, n: int, remainder: int):
        self.m = m
        self.n = n
        self.remainder = remainder
        super().__init__(
            f"containment condition not met for (m={m}, n={n}): "
            f"(n - m) mod (m + 1) = {remainder}"
        )


def eigenvalues_closed_form(n: int) -> EigenvalueSet:
    """All n eigenvalues, descending, with exact angles."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    # build the positive half then mirror, so antisymmetry is exact in floats
    half = [2.0 * math.cos(math.pi * s / (n + 1)) for s in range(1, n // 2 + 1)]
    mid = [0.0] if n % 2 == 1 else []
    values = tuple(half + mid + [-v for v in reversed(half)])
    angles = tuple(Fraction(s, n + 1) for s in range(1, n + 1))
    return EigenvalueSet(n, angles, values)


def spectral_radius(n: int) -> float:
    """Largest absolute eigenvalue: 2*cos(pi/(n+1)), always below 2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 0.0
    return 2.0 * math.cos(math.pi / (n + 1))


def golub_interval(n: int, k: int) -> tuple[float, float]:
    """Row interval [-sigma_k, sigma_k] guaranteed to contain an eigenvalue.

    sigma is 1 for the first and last row and sqrt(2) in between (the row
    off-diagonal norms of the family member).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    sigma = 1.0 if k == 1 or k == n else math.sqrt(2.0)
    return (-sigma, sigma)


def containment_sufficient(m: int, n: int) -> bool:
    """True iff m < n and n = m (mod m+1), which forces spectrum containment."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    return m < n and (n - m) % (m + 1) == 0


def containment_certificate(m: int, n: int) -> ContainmentCertificate:
    """Exact certificate for spectrum containment, or NotSufficient."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    if not containment_sufficient(m, n):
        raise NotSufficient(m, n, (n - m) % (m + 1) if n > m else -1)
    k = (n - m) // (m + 1)
    index_map = {r: r * (k + 1) for r in range(1, m + 1)}
    return ContainmentCertificate(m, n, k, index_map)


def containment_search(m: int, n_max: int, tol: float = 1e-12) -> list[int]:
    """Brute-force scan for n with every eigenvalue of member m in member n.

    Floating comparison against `tol`; probes beyond the certified arithmetic
    progression, whose members it must always include.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if m < 1:
        raise ValueError("m must be >= 1")
    source = eigenvalues_closed_form(m).values
    hits = []
    for n in range(m + 1, n_max + 1):
        target = eigenvalues_closed_form(n).values
        # both descending: one merge pass per candidate
        j = 0
        ok = True
        for v in source:
            while j < n and target[j] > v + tol:
                j += 1
            if j == n or abs(target[j] - v) > tol:
                ok = False
                break
        if ok:
            hits.append(n)
    return hits
