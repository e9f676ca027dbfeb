import math

import gmpy2
import pytest
from gmpy2 import mpfr

from tridiag.charpoly import charpoly_closed_form
from tridiag.fibexplore import (
    DegenerateConfiguration,
    NonConvergence,
    conjecture_scan,
    ellipse_fit,
    fib_shift_poly,
    fibonacci,
    find_roots,
    gaussian_unit_check,
    local_extrema,
    perturbed_f29,
    real_threshold,
)
from tridiag.polycore import IntPoly


def test_fibonacci():
    assert fibonacci(0).value == 0
    assert fibonacci(1).value == 1
    assert fibonacci(13).value == 233
    assert fibonacci(30).value == 832040
    with pytest.raises(ValueError):
        fibonacci(-1)


def test_gaussian_unit_check():
    for k in range(1, 13):
        assert gaussian_unit_check(k), k
    with pytest.raises(ValueError):
        gaussian_unit_check(0)


def test_fib_shift_poly():
    p12 = fib_shift_poly(12)
    assert p12.coeffs == (1 - 233, 0, -21, 0, 70, 0, -84, 0, 45, 0, -11, 0, 1)
    assert fib_shift_poly(1) == IntPoly([-1, -1])
    p29 = fib_shift_poly(29)
    base = charpoly_closed_form(29).poly
    assert p29.coefficient(0) == base.coefficient(0) - 832040
    assert p29.coeffs[1:] == base.coeffs[1:]


def test_perturbed_f29():
    p = perturbed_f29()
    reference = fib_shift_poly(29)
    assert p.coefficient(25) == -350
    assert p.degree() == 29
    for k in range(30):
        if k != 25:
            assert p.coefficient(k) == reference.coefficient(k), k


def test_find_roots_quadratic():
    rs = find_roots(IntPoly([-1, 0, 1]), 128)
    assert rs.n == 2
    with gmpy2.context(precision=128, allow_complex=True):
        vals = sorted(float(z.real) for z in rs.roots)
        assert abs(vals[0] + 1) < 1e-30 and abs(vals[1] - 1) < 1e-30
        assert all(abs(z.imag) == 0 for z in rs.roots)


def test_find_roots_rejects_bad_input():
    with pytest.raises(ValueError):
        find_roots(IntPoly([3]))
    with pytest.raises(ValueError):
        find_roots(IntPoly([]))
    with pytest.raises(ValueError):
        find_roots(IntPoly([-1, 0, 1]), 52)


def test_find_roots_deflates_exact_zeros():
    # x^3 - x = x(x-1)(x+1)
    rs = find_roots(IntPoly([0, -1, 0, 1]), 128)
    assert rs.n == 3
    with gmpy2.context(precision=128, allow_complex=True):
        zero = min(rs.roots, key=lambda z: abs(z))
        assert zero == 0
    assert any(r == 0 for r in rs.residuals)


def test_find_roots_double_root_collapses_exactly():
    # (x - 1)^2: the straddling pair contracts until both estimates round to
    # the representable root itself
    rs = find_roots(IntPoly([1, -2, 1]), 128)
    assert all(z == 1 for z in rs.roots)
    assert all(r == 0 for r in rs.residuals)


def test_find_roots_higher_multiplicity_raises():
    # (x - 1)^3 never meets the stopping rule; the error carries residuals
    with pytest.raises(NonConvergence) as err:
        find_roots(IntPoly([-1, 3, -3, 1]), 128)
    assert len(err.value.residuals) == 3


def test_root_set_invariants_fib_family():
    for n in (6, 17, 24, 33):
        p = fib_shift_poly(n)
        rs = find_roots(p, 192)
        assert rs.n == n
        thr = 2.0 ** (-192 // 4)
        with gmpy2.context(precision=192 + 64, allow_complex=True):
            # distinctness: pairwise separation clears the class threshold
            roots = list(rs.roots)
            for a in range(n):
                for b in range(a + 1, n):
                    assert abs(roots[a] - roots[b]) > thr
            # first Vieta sum: roots total -c_{n-1}/c_n = 0 for this family
            total = sum(roots, gmpy2.mpc(0))
            assert abs(total) < mpfr(2) ** -90
            # conjugation symmetry
            for z in roots:
                best = min(abs(w - gmpy2.mpc(z.real, -z.imag)) for w in roots)
                assert best < mpfr(2) ** -90


def test_scan_small_range():
    rows = conjecture_scan(3, 20, 192)
    assert [r.n for r in rows] == list(range(3, 21))
    for r in rows:
        assert not r.violations, r
        if r.n % 2 == 0:
            assert r.real_root_count == 2
        else:
            assert r.real_root_count == 1
            assert r.min_real_root < 0
        assert r.max_abs_imag <= 1 + float(real_threshold(192))
    with pytest.raises(ValueError):
        conjecture_scan(5, 3)


def test_scan_n29_real_root():
    row = conjecture_scan(29, 29, 256)[0]
    assert row.real_root_count == 1
    assert abs(row.min_real_root - (-2.20796)) < 5e-6


def test_ellipse_fit_synthetic():
    pts = [(2 * math.cos(t), math.sin(t))
           for t in [2 * math.pi * k / 8 + 0.1 for k in range(8)]]
    fit = ellipse_fit(pts)
    assert fit.is_ellipse
    assert fit.discriminant < 0
    assert fit.rms_residual < 1e-12
    a, b, c, d, e, f = fit.conic
    assert abs(a + c - 1) < 1e-12


def test_ellipse_fit_rejects_degenerate():
    with pytest.raises(ValueError):
        ellipse_fit([(0, 0)] * 5)
    with pytest.raises(DegenerateConfiguration):
        ellipse_fit([(float(k), float(2 * k)) for k in range(8)])


def test_ellipse_separation_in_perturbation():
    rs = find_roots(fib_shift_poly(29), 256)
    fit = ellipse_fit([(float(z.real), float(z.imag)) for z in rs.roots])
    rsp = find_roots(perturbed_f29(), 256)
    fitp = ellipse_fit([(float(z.real), float(z.imag)) for z in rsp.roots])
    assert fitp.rms_residual > 100 * fit.rms_residual


def test_local_extrema_small():
    assert [(float(x), float(v)) for x, v in local_extrema(2, 128)] == [(0.0, -1.0)]

    pts3 = local_extrema(3, 128)
    xs = [float(x) for x, _ in pts3]
    vs = [float(v) for _, v in pts3]
    root = math.sqrt(2.0 / 3.0)
    assert len(pts3) == 2
    assert abs(xs[0] + root) < 1e-15 and abs(xs[1] - root) < 1e-15
    assert abs(vs[0] + 4.0 / 3.0 * root) < 1e-15
    assert abs(vs[1] - 4.0 / 3.0 * root) < 1e-15

    pts4 = local_extrema(4, 128)
    assert len(pts4) == 3
    assert abs(float(pts4[0][0]) + math.sqrt(1.5)) < 1e-15
    assert float(pts4[1][0]) == 0.0 and float(pts4[1][1]) == 1.0
    assert abs(float(pts4[2][1]) - (-1.25)) < 1e-15


def test_local_extrema_count():
    assert len(local_extrema(20, 192)) == 19
    with pytest.raises(ValueError):
        local_extrema(1)
