import pytest

from tridiag.polycore import (
    GaussianInt,
    IntMatrix,
    IntPoly,
    bareiss_det,
    binomial,
    build_An_minus_tI,
    poly_add,
    poly_derivative,
    poly_eval_gaussian,
    poly_eval_int,
    poly_neg,
    poly_shift_mul,
)
from tridiag.charpoly import charpoly_recurrence

F4 = IntPoly([1, 0, -3, 0, 1])
F2 = IntPoly([-1, 0, 1])


def test_intpoly_normalization():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0, 0]).coeffs == ()
    assert IntPoly([]).degree() == -1
    assert IntPoly([5]).degree() == 0
    assert not IntPoly([])
    assert IntPoly([0, 1])


def test_intpoly_immutable():
    p = IntPoly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


def test_poly_add_examples():
    # (x^2 - 1) + 1 = x^2
    assert poly_add(F2, IntPoly([1])) == IntPoly([0, 0, 1])
    # p + 0 = p
    p = IntPoly([3, -2, 7])
    assert poly_add(p, IntPoly([])) == p
    # (-x^3 + 2x) + (x^2 - 1) = -x^3 + x^2 + 2x - 1, by hand
    assert poly_add(IntPoly([0, 2, 0, -1]), F2) == IntPoly([-1, 2, 1, -1])


def test_poly_add_commutative_associative():
    polys = [IntPoly([]), IntPoly([1]), IntPoly([0, -1]), IntPoly([2, 3, -4]),
             IntPoly([-1, 0, 0, 5])]
    for p in polys:
        for q in polys:
            assert poly_add(p, q) == poly_add(q, p)
            for r in polys:
                assert poly_add(poly_add(p, q), r) == poly_add(p, poly_add(q, r))


def test_poly_neg():
    assert poly_neg(IntPoly([0, -1])) == IntPoly([0, 1])
    assert poly_neg(IntPoly([])) == IntPoly([])
    assert poly_neg(F2) == IntPoly([1, 0, -1])


def test_poly_shift_mul():
    assert poly_shift_mul(IntPoly([1])) == IntPoly([0, 1])
    assert poly_shift_mul(IntPoly([])) == IntPoly([])
    assert poly_shift_mul(F2) == IntPoly([0, -1, 0, 1])
    for p in (IntPoly([1]), IntPoly([2, 3]), F4):
        assert poly_shift_mul(p).degree() == p.degree() + 1


def test_poly_derivative():
    assert poly_derivative(F4) == IntPoly([0, -6, 0, 4])
    assert poly_derivative(IntPoly([7])) == IntPoly([])
    assert poly_derivative(IntPoly([])) == IntPoly([])


def test_poly_eval_int():
    assert poly_eval_int(F4, 2) == 5  # 16 - 12 + 1, by hand
    assert poly_eval_int(IntPoly([42, 1, 1]), 0) == 42
    assert poly_eval_int(F2, 1) == 0


def test_poly_eval_gaussian():
    i = GaussianInt(0, 1)
    f12 = charpoly_recurrence(12).poly
    assert poly_eval_gaussian(f12, i) == GaussianInt(233, 0)
    assert poly_eval_gaussian(IntPoly([0, -1]), i) == GaussianInt(0, -1)
    f8 = charpoly_recurrence(8).poly
    assert poly_eval_gaussian(f8, i) == GaussianInt(34, 0)


def test_poly_eval_gaussian_matches_int_on_reals():
    polys = [F2, F4, IntPoly([3, -1, 0, 7]), IntPoly([0, 0, 5])]
    for p in polys:
        for t in range(-4, 5):
            val = poly_eval_gaussian(p, GaussianInt(t, 0))
            assert val == GaussianInt(poly_eval_int(p, t), 0)


def test_gaussian_arithmetic():
    a = GaussianInt(2, 3)
    b = GaussianInt(-1, 4)
    assert a + b == GaussianInt(1, 7)
    assert a * b == GaussianInt(2 * -1 - 3 * 4, 2 * 4 + 3 * -1)
    assert -a == GaussianInt(-2, -3)


def test_binomial():
    assert binomial(10, 0) == 1
    assert binomial(8, 2) == 28
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


def test_binomial_pascal_rule_exhaustive():
    for n in range(65):
        for r in range(n):
            assert binomial(n, r) + binomial(n, r + 1) == binomial(n + 1, r + 1)


def test_build_An_minus_tI():
    assert build_An_minus_tI(1, 0) == IntMatrix([[0]])
    assert build_An_minus_tI(2, 3) == IntMatrix([[-3, 1], [1, -3]])
    a4 = build_An_minus_tI(4, 0)
    assert a4 == IntMatrix(
        [[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]]
    )
    with pytest.raises(ValueError):
        build_An_minus_tI(0, 0)


def test_intmatrix_requires_square():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])


def test_bareiss_det_examples():
    assert bareiss_det(build_An_minus_tI(2, 0)) == -1
    eye5 = IntMatrix([[1 if i == j else 0 for j in range(5)] for i in range(5)])
    assert bareiss_det(eye5) == 1
    assert bareiss_det(build_An_minus_tI(4, 2)) == poly_eval_int(F4, 2) == 5


def test_bareiss_det_pivoting_and_singular():
    # leading zero pivot forces a row swap
    m = IntMatrix([[0, 2], [3, 5]])
    assert bareiss_det(m) == -6
    # a fully zero column
    assert bareiss_det(IntMatrix([[0, 1], [0, 2]])) == 0
    # known 3x3
    m3 = IntMatrix([[2, 0, 1], [1, 1, 0], [0, 3, 1]])
    assert bareiss_det(m3) == 2 * (1 * 1 - 0 * 3) - 0 + 1 * (1 * 3 - 0)


def test_bareiss_matches_charpoly_evaluation():
    for n in range(1, 13):
        f_n = charpoly_recurrence(n).poly
        for t in range(-3, 4):
            det = bareiss_det(build_An_minus_tI(n, t))
            assert det == poly_eval_int(f_n, t), (n, t)
