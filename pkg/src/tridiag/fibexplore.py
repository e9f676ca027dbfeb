"""Fibonacci-shifted root sets: exact unit checks, high-precision roots,
conic fitting, a perturbation counterexample, and conjecture scans.

Shifting the degree-n characteristic polynomial by the (n+1)-th Fibonacci
number produces a polynomial whose complex roots cluster along a flattened
oval. This module verifies the exact identity p_{4k}(i) = F_{4k+1} in
Gaussian-integer arithmetic, finds the shifted roots at configurable
precision, fits a conic to them, and collects per-n statistics (real-root
counts, imaginary-part bounds, extremal real roots) plus the critical points
of p_n itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2
import numpy as np
from gmpy2 import mpc, mpfr

from . import _roots
from ._roots import GUARD_BITS, NonConvergence
from .charpoly import charpoly_closed_form
from .polycore import GaussianInt, IntPoly, poly_derivative, poly_eval_gaussian

__all__ = [
    "BigFib",
    "DegenerateConfiguration",
    "ELLIPSE_TOL",
    "EllipseFit",
    "NonConvergence",
    "RootSet",
    "ScanRow",
    "conjecture_scan",
    "ellipse_fit",
    "fib_shift_poly",
    "fibonacci",
    "find_roots",
    "gaussian_unit_check",
    "local_extrema",
    "perturbed_f29",
]

DEFAULT_PRECISION_BITS = 256
ELLIPSE_TOL = 1e-6


class DegenerateConfiguration(Exception):
    """The conic normal system is singular (e.g. collinear points)."""


@dataclass(frozen=True)
class BigFib:
    index: int
    value: int


def fibonacci(n: int) -> BigFib:
    """Exact n-th Fibonacci number (F_0 = 0, F_1 = 1) by iteration."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return BigFib(n, a)


def gaussian_unit_check(k: int) -> bool:
    """Exact test that p_{4k} evaluated at i equals F_{4k+1}."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    value = poly_eval_gaussian(charpoly_closed_form(4 * k).poly, GaussianInt(0, 1))
    expected = fibonacci(4 * k + 1).value
    return value.im == 0 and value.re == expected


def fib_shift_poly(n: int) -> IntPoly:
    """The degree-n characteristic polynomial with F_{n+1} subtracted."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coeffs = list(charpoly_closed_form(n).poly.coeffs)
    coeffs[0] -= fibonacci(n + 1).value
    return IntPoly(coeffs)


def perturbed_f29() -> IntPoly:
    """fib_shift_poly(29) with its x^25 coefficient changed from -351 to -350.

    A single-coefficient nudge that visibly destroys the oval root pattern.
    """
    coeffs = list(fib_shift_poly(29).coeffs)
    assert coeffs[25] == -351
    coeffs[25] = -350
    return IntPoly(coeffs)


@dataclass(frozen=True)
class RootSet:
    """All complex roots of a degree-n integer polynomial at fixed precision.

    Roots are gmpy2 complex numbers carrying `precision_bits` of mantissa,
    sorted by (real, imaginary) part; residuals[k] is |p(roots[k])| evaluated
    with guard bits. Construction verifies the root count, that conjugates
    pair up to 2^(-precision_bits/2) relative distance, and that every
    residual is below 2^(-precision_bits/4) times the largest coefficient.
    """

    n: int
    precision_bits: int
    roots: tuple
    residuals: tuple
    max_coefficient: int

    def __post_init__(self):
        if len(self.roots) != self.n or len(self.residuals) != self.n:
            raise ValueError(f"expected {self.n} roots")
        # gmpy2 rounds every operation to the active context, so all checks
        # run under an explicit high-precision context
        ctx = gmpy2.context(
            precision=self.precision_bits + GUARD_BITS, allow_complex=True
        )
        with ctx:
            bound = mpfr(2) ** (-self.precision_bits // 4) * self.max_coefficient
            for r in self.residuals:
                if not r < bound:
                    raise NonConvergence(
                        f"residual {r} exceeds certification bound {bound}",
                        residuals=list(self.residuals),
                    )
            pair_tol = mpfr(2) ** (-self.precision_bits // 2)
            for z in self.roots:
                scale = max(abs(z), mpfr(1))
                target_re, target_im = z.real, -z.imag
                best = min(
                    abs(w.real - target_re) + abs(w.imag - target_im)
                    for w in self.roots
                )
                if not best <= pair_tol * scale:
                    raise NonConvergence(
                        f"conjugate of {z} missing (nearest at distance {best})"
                    )

    def real_classified(self) -> list[int]:
        """Indices of roots whose imaginary part is below the class threshold."""
        ctx = gmpy2.context(precision=self.precision_bits, allow_complex=True)
        with ctx:
            thr = real_threshold(self.precision_bits)
            return [k for k, z in enumerate(self.roots) if abs(z.imag) < thr]


def real_threshold(precision_bits: int) -> mpfr:
    """|Im| below 2^(-bits/4) counts as real: halfway, in exponent, between
    working precision and unity, so residual noise never flips the call."""
    return mpfr(2) ** (-precision_bits // 4)


def find_roots(p: IntPoly, precision_bits: int = DEFAULT_PRECISION_BITS) -> RootSet:
    """All complex roots of p by simultaneous iteration at extended precision.

    Raises NonConvergence (with per-root residuals) if the sweep cap is
    exhausted, and ValueError for degree < 1 or precision below 53 bits.
    """
    if p.degree() < 1:
        raise ValueError("polynomial must have degree >= 1")
    roots, residuals = _roots.all_roots(list(p.coeffs), precision_bits)
    return RootSet(
        n=p.degree(),
        precision_bits=precision_bits,
        roots=tuple(roots),
        residuals=tuple(residuals),
        max_coefficient=max(abs(c) for c in p.coeffs),
    )


@dataclass(frozen=True)
class EllipseFit:
    """Least-squares conic A x^2 + B xy + C y^2 + D x + E y + F = 0, A+C=1.

    discriminant is B^2 - 4AC (negative for an ellipse); rms_residual is the
    root-mean-square Sampson distance (algebraic value over gradient norm).
    """

    conic: tuple[float, float, float, float, float, float]
    discriminant: float
    rms_residual: float

    @property
    def is_ellipse(self) -> bool:
        return self.discriminant < 0


def ellipse_fit(points) -> EllipseFit:
    """Fit a conic with the linear normalization A + C = 1.

    `points` is a sequence of (re, im) pairs; at least 6 are required. With
    C = 1 - A the general conic becomes linear in (A, B, D, E, F), which a
    dense least-squares solve handles; the ellipse/hyperbola call is read off
    the discriminant afterward.
    """
    pts = np.asarray([(float(x), float(y)) for x, y in points], dtype=float)
    if len(pts) < 6:
        raise ValueError(f"need at least 6 points, got {len(pts)}")
    x, y = pts[:, 0], pts[:, 1]
    design = np.column_stack([x * x - y * y, x * y, x, y, np.ones_like(x)])
    rhs = -y * y
    solution, _, rank, _ = np.linalg.lstsq(design, rhs, rcond=None)
    if rank < 5:
        raise DegenerateConfiguration(
            f"conic normal system has rank {rank} < 5"
        )
    a, b, d, e, f = (float(v) for v in solution)
    c = 1.0 - a
    q = a * x * x + b * x * y + c * y * y + d * x + e * y + f
    gx = 2 * a * x + b * y + d
    gy = b * x + 2 * c * y + e
    grad = np.hypot(gx, gy)
    if np.any(grad == 0):
        raise DegenerateConfiguration("zero conic gradient at a data point")
    sampson = q / grad
    return EllipseFit(
        conic=(a, b, c, d, e, f),
        discriminant=b * b - 4 * a * c,
        rms_residual=float(math.sqrt(np.mean(sampson * sampson))),
    )


@dataclass(frozen=True)
class ScanRow:
    """Per-n root statistics for the shifted polynomials."""

    n: int
    real_root_count: int
    min_real_root: float
    max_abs_imag: float
    violations: tuple[str, ...]


def _scan_one(n: int, precision_bits: int) -> ScanRow:
    rs = find_roots(fib_shift_poly(n), precision_bits)
    real_idx = rs.real_classified()
    with gmpy2.context(precision=precision_bits, allow_complex=True):
        reals = sorted(rs.roots[k].real for k in real_idx)
        max_imag = max(abs(z.imag) for z in rs.roots)
        thr = real_threshold(precision_bits)
    violations = []
    if n % 2 == 0:
        if len(reals) != 2:
            violations.append("real-root-count")
    else:
        if len(reals) != 1:
            violations.append("real-root-count")
        elif not reals[0] < 0:
            violations.append("real-root-sign")
    # the bound is attained exactly (root at i) whenever 4 divides n, so the
    # violation test allows the classification threshold on top of 1
    if max_imag > 1 + thr:
        violations.append("imag-bound")
    return ScanRow(
        n=n,
        real_root_count=len(reals),
        min_real_root=float(reals[0]) if reals else math.nan,
        max_abs_imag=float(max_imag),
        violations=tuple(violations),
    )


def conjecture_scan(
    n_lo: int, n_hi: int, precision_bits: int = DEFAULT_PRECISION_BITS
) -> list[ScanRow]:
    """Root statistics for every shifted polynomial with n in [n_lo, n_hi].

    Each row flags violations of the expected pattern: two real roots for
    even n, one negative real root for odd n, and imaginary parts bounded by
    1 (up to the real-classification threshold). NonConvergence propagates.
    """
    if n_lo > n_hi:
        raise ValueError("need n_lo <= n_hi")
    if n_lo < 1:
        raise ValueError("n_lo must be >= 1")
    return [_scan_one(n, precision_bits) for n in range(n_lo, n_hi + 1)]


def local_extrema(
    n: int, precision_bits: int = DEFAULT_PRECISION_BITS
) -> list[tuple[mpfr, mpfr]]:
    """Real critical points of the degree-n characteristic polynomial.

    Returns (x, p_n(x)) pairs in increasing x, where x runs over the real
    roots of the exact derivative. Exploratory data only; no curve through
    the extrema is asserted.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    poly = charpoly_closed_form(n).poly
    deriv = poly_derivative(poly)
    rs = find_roots(deriv, precision_bits)
    ctx = gmpy2.context(
        precision=precision_bits + GUARD_BITS, allow_complex=True
    )
    out = []
    with ctx:
        for k in rs.real_classified():
            x = rs.roots[k].real
            acc = mpfr(0)
            for c in reversed(poly.coeffs):
                acc = acc * x + c
            out.append((+x, +acc))
    return sorted(out, key=lambda t: t[0])
