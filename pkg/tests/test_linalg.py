from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from linegeom.errors import RankError
from linegeom.linalg import adjugate, det, inverse, kernel, matmul, rank, rank2_split, solve
from linegeom.poly import variables
from linegeom.scalar import I

from strategies import small_ints


def matrices(r, c):
    return st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)


@given(matrices(4, 6))
def test_kernel_is_annihilated(m):
    ker = kernel(m)
    assert len(ker) == 6 - rank(m)
    for v in ker:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m)


@given(matrices(5, 5))
def test_rank_and_det_match_sympy(m):
    M = sympy.Matrix(m)
    assert rank(m) == M.rank()
    assert det(m) == M.det()


@given(matrices(4, 4))
def test_adjugate_identity(m):
    d = det(m)
    prod = matmul(m, adjugate(m))
    assert all(prod[i][j] == (d if i == j else 0) for i in range(4) for j in range(4))


def test_inverse_and_solve():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    inv = inverse(m)
    assert matmul(m, inv) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert solve(m, [3, 5, 5]) == [1, 1, 1]
    with pytest.raises(RankError):
        inverse([[1, 2], [2, 4]])


def test_gaussian_kernel_and_det():
    m = [[1, I, 0, 2], [I, -1, 1, 0], [2, 2 * I, 0, 4]]
    ker = kernel(m)
    assert len(ker) == 2
    for v in ker:
        assert all(sum((a * b for a, b in zip(row, v)), Fraction(0)) == 0 for row in m)
    sq = [[1, I, 3, 0], [2, 1, I, 1], [0, 1, 1, I], [I, 0, 2, 1]]
    Ms = sympy.Matrix([[sympy.I if x is I else (sympy.I * x.b if hasattr(x, "b") else x) for x in r] for r in sq])
    got = det(sq)
    want = complex(Ms.det())
    assert abs(complex(got) - want) < 1e-12


def test_rank2_split_of_rank_two_form():
    a, b, c = variables(3)
    q = (a + 2 * b) * (3 * a - c)
    L1, L2, delta = rank2_split(q)
    assert delta == 1
    prod = sum((L1[i] * v for i, v in enumerate((a, b, c))), 0 * a) * \
        sum((L2[i] * v for i, v in enumerate((a, b, c))), 0 * a)
    assert prod.proportional(q)


def test_rank2_split_irrational():
    a, b, c = variables(3)
    _, _, delta = rank2_split(a * a - 2 * b * b)
    assert delta == 2
