from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from linegeom.errors import DivisionNotExact
from linegeom.poly import MultiPoly, monomials, variables

x0, x1, x2, x3 = variables(4)
SYM = sympy.symbols("x0:4")

terms = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3), st.integers(-5, 5).filter(bool), max_size=5)


def polys():
    return terms.map(lambda d: MultiPoly(3, {e: Fraction(c) for e, c in d.items()}))


def to_sympy(p):
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.prod([s ** k for s, k in zip(SYM, e)])
                for e, c in p.terms.items()), sympy.Integer(0))


def test_monomial_count():
    assert len(monomials(4, 4)) == 35
    assert len(monomials(4, 2)) == 10


@given(polys(), polys())
def test_product_matches_sympy(p, q):
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@given(polys(), polys())
def test_exact_division_round_trip(p, q):
    if q.is_zero():
        return
    assert (p * q).divexact(q) == p


def test_inexact_division_raises():
    with pytest.raises(DivisionNotExact):
        (x0 * x0 + x1).divexact(x0)


def test_derivative_and_substitution():
    F = x0 ** 2 * x1 - 3 * x2 * x3
    assert F.diff(0) == 2 * x0 * x1
    assert F.subs([x1, x0, x2, x3]) == x1 ** 2 * x0 - 3 * x2 * x3
    assert F([1, 2, 3, 4]) == 2 - 36


def test_euler_identity():
    F = x0 ** 3 * x1 + 2 * x1 ** 2 * x2 * x3 - x3 ** 4
    euler = sum((v * F.diff(i) for i, v in enumerate((x0, x1, x2, x3))), MultiPoly(4))
    assert euler == 4 * F


def test_json_round_trip():
    F = Fraction(3, 7) * x0 ** 2 * x3 - x1 * x2 * x3
    assert MultiPoly.from_json(F.to_json()) == F
