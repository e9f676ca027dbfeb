import pytest

from tridiag.charpoly import charpoly_family
from tridiag.chebyshev import (
    ChebyshevPair,
    IntegralityViolation,
    chebyshev_S,
    chebyshev_U,
    chebyshev_pair,
    halve_variable,
    reflect,
)
from tridiag.polycore import IntPoly, poly_eval_int

# golden rows, low-to-high coefficients
U_ROWS = {
    0: [1],
    1: [0, 2],
    2: [-1, 0, 4],
    3: [0, -4, 0, 8],
    4: [1, 0, -12, 0, 16],
    5: [0, 6, 0, -32, 0, 32],
    6: [-1, 0, 24, 0, -80, 0, 64],
}
S_ROWS = {
    0: [1],
    1: [0, 1],
    2: [-1, 0, 1],
    3: [0, -2, 0, 1],
    4: [1, 0, -3, 0, 1],
    5: [0, 3, 0, -4, 0, 1],
    6: [-1, 0, 6, 0, -5, 0, 1],
}


def test_golden_rows():
    for n, coeffs in U_ROWS.items():
        assert chebyshev_U(n) == IntPoly(coeffs), n
    for n, coeffs in S_ROWS.items():
        assert chebyshev_S(n) == IntPoly(coeffs), n


def test_rejects_negative_index():
    with pytest.raises(ValueError):
        chebyshev_U(-1)
    with pytest.raises(ValueError):
        chebyshev_S(-1)


def test_reflect():
    assert reflect(IntPoly([0, 1])) == IntPoly([0, -1])
    assert reflect(IntPoly([-1, 0, 1])) == IntPoly([-1, 0, 1])
    # reflecting the degree-3 monic row gives the characteristic polynomial
    assert reflect(chebyshev_S(3)) == IntPoly([0, 2, 0, -1])


def test_halve_variable():
    assert halve_variable(IntPoly([0, 2])) == IntPoly([0, 1])
    assert halve_variable(chebyshev_U(4)) == chebyshev_S(4)
    assert halve_variable(chebyshev_U(6)) == chebyshev_S(6)
    with pytest.raises(IntegralityViolation):
        halve_variable(IntPoly([0, 1]))


def test_identity_chain():
    family = charpoly_family(200)
    for n, f_n in enumerate(family, start=1):
        s_n = chebyshev_S(n)
        u_n = chebyshev_U(n)
        assert reflect(s_n) == f_n, n
        assert halve_variable(u_n) == s_n, n
        assert reflect(halve_variable(u_n)) == f_n, n


def test_value_at_one():
    for n in range(201):
        assert poly_eval_int(chebyshev_U(n), 1) == n + 1, n


def test_parity_structure():
    for n in range(60):
        u_n, s_n = chebyshev_U(n), chebyshev_S(n)
        for k in range(n + 1):
            if (n - k) % 2 == 1:
                assert u_n.coefficient(k) == 0
                assert s_n.coefficient(k) == 0


def test_pair_validation():
    pair = chebyshev_pair(7)
    assert pair.n == 7
    assert pair.U.coefficient(7) == 128
    assert pair.S.coefficient(7) == 1
    with pytest.raises(ValueError):
        ChebyshevPair(3, chebyshev_U(2), chebyshev_S(3))
    with pytest.raises(ValueError):
        ChebyshevPair(3, chebyshev_S(3), chebyshev_S(3))
