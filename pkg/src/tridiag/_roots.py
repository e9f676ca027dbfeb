"""Simultaneous polynomial root finding in arbitrary-precision arithmetic.

Two phases over gmpy2 complex numbers:

1. A Weierstrass (Durand-Kerner) global phase from a logarithmic-spiral
   start. The spiral fills the root annulus transversally; the Weierstrass
   correction has no Newton/repulsion cancellation, which lets crowded
   estimates untangle where a pure Ehrlich-Aberth sweep can stall in a
   metastable state (observed around degree 200 when the roots lie on a
   flattened oval).
2. An Ehrlich-Aberth polish at the requested precision, stopping once every
   correction has relative magnitude below 2^(8 - precision_bits). From the
   globally assigned estimates it converges cubically, so this phase costs a
   handful of sweeps.

Polynomial evaluation always runs with 64 guard bits so the stopping rule and
the reported residuals are trustworthy at the requested precision. Everything
is deterministic: fixed starts, no randomness.
"""

from __future__ import annotations

import math

import gmpy2
from gmpy2 import mpc, mpfr

GUARD_BITS = 64
_DK_TOL_LOG2 = -40  # relative correction at which the global phase hands off
_SPIRAL = complex(0.4, 0.9)  # |.| < 1: spiral sweeps the annulus inside-out


class NonConvergence(Exception):
    """Iteration cap exhausted; carries the last residuals per estimate."""

    def __init__(self, message: str, residuals: list | None = None):
        super().__init__(message)
        self.residuals = residuals or []


def _geometric_radius(coeffs: list[int]) -> float:
    """Geometric mean of the root magnitudes, |c_0/c_deg|^(1/deg)."""
    deg = len(coeffs) - 1
    # exact big ints can overflow float conversion; go through log2
    lo = math.log2(abs(coeffs[0]))
    hi = math.log2(abs(coeffs[-1]))
    return 2.0 ** ((lo - hi) / deg)


def _spiral_starts(coeffs: list[int]) -> list[complex]:
    deg = len(coeffs) - 1
    scale = _geometric_radius(coeffs)
    starts = []
    cur = complex(1.0, 0.0)
    for _ in range(deg):
        starts.append(scale * cur)
        cur *= _SPIRAL
    return starts


def _eval(coeffs: list[int], z: mpc) -> mpc:
    acc = mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _eval_with_derivative(coeffs: list[int], z: mpc) -> tuple[mpc, mpc]:
    p = mpc(coeffs[-1])
    dp = mpc(0)
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _weierstrass_phase(coeffs, z, ctx_work, tol2, sweep_budget):
    """Durand-Kerner sweeps until every relative correction is below tol."""
    deg = len(coeffs) - 1
    lead = coeffs[-1]
    sweeps = 0
    with ctx_work:
        while sweeps < sweep_budget:
            sweeps += 1
            converged = True
            for i in range(deg):
                zi = z[i]
                p = _eval(coeffs, zi)
                if p == 0:
                    continue
                q = mpc(lead)
                for j in range(deg):
                    if j != i:
                        q = q * (zi - z[j])
                if q == 0:
                    # exact collision of two estimates: rotate one slightly
                    z[i] = zi * mpc(1, 2.0**-26)
                    converged = False
                    continue
                w = p / q
                z[i] = zi - w
                if converged and gmpy2.norm(w) > tol2 * gmpy2.norm(z[i]):
                    converged = False
            if converged:
                return sweeps
    raise NonConvergence(
        f"global phase exhausted {sweep_budget} sweeps at degree {deg}"
    )


def _aberth_phase(coeffs, z, precision_bits, ctx_out, ctx_work, sweep_budget):
    """Ehrlich-Aberth sweeps until every correction is below 2^(8-bits).

    Horner cancellation can dwarf the base guard bits when coefficients are
    huge (the correction floor is evaluation noise over |p'|), so on
    stagnation the evaluation precision doubles, MPSolve-style, until the
    stopping rule is genuinely reachable.
    """
    deg = len(coeffs) - 1
    tol2 = mpfr(2) ** (2 * (-precision_bits + 8))
    guard = GUARD_BITS
    # repulsion sums in machine doubles are plenty: they steer the path but
    # never limit the converged accuracy, which the guarded Horner owns
    try:
        zc = [complex(t.real, t.imag) for t in z]
        use_fast_sums = all(
            t == 0 or 1e-120 < abs(t) < 1e120 for t in zc
        )
    except OverflowError:
        zc = [complex(0, 0)] * len(z)
        use_fast_sums = False
    sweeps = 0
    prev_worst = None
    stalled = 0
    while sweeps < sweep_budget:
        sweeps += 1
        converged = True
        worst = mpfr(0)
        for i in range(deg):
            zi = z[i]
            with ctx_work:
                p, dp = _eval_with_derivative(coeffs, zi)
            if p == 0:
                continue
            if dp == 0:
                with ctx_out:
                    z[i] = zi * mpc(1, 2.0**-26)
                zc[i] = complex(z[i].real, z[i].imag)
                converged = False
                continue
            with ctx_out:
                newton = p / dp
                if use_fast_sums:
                    zci = zc[i]
                    s = 0.0
                    for j in range(deg):
                        if j != i:
                            d = zci - zc[j]
                            if d != 0.0:
                                s += 1.0 / d
                    repulsion = mpc(s)
                else:
                    repulsion = mpc(0)
                    for j in range(deg):
                        if j != i:
                            d = zi - z[j]
                            if d != 0:
                                repulsion += 1 / d
                denom = 1 - newton * repulsion
                w = newton if denom == 0 else newton / denom
                z[i] = zi - w
                rel2 = gmpy2.norm(w) / gmpy2.norm(z[i])
                if rel2 > tol2:
                    converged = False
                if rel2 > worst:
                    worst = rel2
            if use_fast_sums:
                try:
                    zc[i] = complex(z[i].real, z[i].imag)
                except OverflowError:
                    use_fast_sums = False
        if converged:
            return sweeps
        # corrections normally shrink cubically; a flat sweep means the
        # evaluation-noise floor, not the roots, is what we are measuring
        if prev_worst is not None and worst * 4 >= prev_worst:
            stalled += 1
        else:
            stalled = 0
        prev_worst = worst
        if stalled >= 2:
            if guard >= 64 * GUARD_BITS:
                break
            guard *= 2
            ctx_work = gmpy2.context(
                precision=precision_bits + guard, allow_complex=True
            )
            stalled = 0
            prev_worst = None
    raise NonConvergence(
        f"polish phase exhausted its sweep budget at degree {deg}",
        residuals=_residuals(coeffs, z, ctx_out, ctx_work),
    )


def _residuals(coeffs, z, ctx_out, ctx_work):
    out = []
    for zi in z:
        with ctx_work:
            p = _eval(coeffs, zi)
        with ctx_out:
            out.append(abs(p))
    return out


def all_roots(
    coeffs: list[int], precision_bits: int, max_sweeps: int = 2000
) -> tuple[list[mpc], list[mpfr]]:
    """All complex roots of the integer polynomial, with residuals.

    Returns roots at `precision_bits` sorted by (real, imaginary) part, and
    |p(root)| evaluated with guard bits. Exact zero roots are deflated first
    and reported with residual exactly 0. Raises NonConvergence when the
    sweep budget runs out.
    """
    deg = len(coeffs) - 1
    if deg < 1:
        raise ValueError("need degree >= 1")
    if precision_bits < 53:
        raise ValueError("precision_bits must be >= 53")

    ctx_out = gmpy2.context(precision=precision_bits, allow_complex=True)
    ctx_work = gmpy2.context(
        precision=precision_bits + GUARD_BITS, allow_complex=True
    )

    n_zero = 0
    while coeffs[n_zero] == 0:
        n_zero += 1
    reduced = coeffs[n_zero:]

    with ctx_out:
        roots = [mpc(0)] * n_zero
        residuals = [mpfr(0)] * n_zero

    if len(reduced) > 1:
        with ctx_out:
            z = [mpc(t) for t in _spiral_starts(reduced)]
        dk_tol2 = mpfr(2) ** (2 * _DK_TOL_LOG2)
        used = _weierstrass_phase(reduced, z, ctx_work, dk_tol2, max_sweeps)
        _aberth_phase(
            reduced, z, precision_bits, ctx_out, ctx_work, max_sweeps - used
        )
        roots.extend(z)
        residuals.extend(_residuals(coeffs, z, ctx_out, ctx_work))

    order = sorted(range(len(roots)), key=lambda i: (roots[i].real, roots[i].imag))
    return [roots[i] for i in order], [residuals[i] for i in order]
