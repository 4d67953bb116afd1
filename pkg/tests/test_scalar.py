from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from linegeom.errors import ExtensionMismatch
from linegeom.scalar import I, Quad, as_scalar, decode_scalar, encode_scalar, quad, sqrt_rational, squarefree_part

from strategies import fractions, nonzero_fractions

radicands = st.sampled_from([-1, 2, 3, -3, 5, 6])


@st.composite
def quads(draw, d=None):
    d = draw(radicands) if d is None else d
    return quad(draw(fractions), draw(nonzero_fractions), d)


def test_gaussian_unit():
    assert I * I == -1
    assert (1 + I) * (1 - I) == 2


def test_quad_collapses_to_rational():
    s2 = sqrt_rational(2)
    assert isinstance(s2 * s2, Fraction)
    assert s2 * s2 == 2


def test_mixed_radicands_rejected():
    with pytest.raises(ExtensionMismatch):
        sqrt_rational(2) + sqrt_rational(3)


@pytest.mark.parametrize("r, expect", [(Fraction(9, 4), Fraction(3, 2)), (0, 0), (Fraction(1, 9), Fraction(1, 3))])
def test_sqrt_of_squares(r, expect):
    assert sqrt_rational(r) == expect


def test_sqrt_irrational():
    s = sqrt_rational(Fraction(12, 5))    # sqrt(60)/5 = 2 sqrt(15)/5
    assert isinstance(s, Quad) and s.d == 15 and s * s == Fraction(12, 5)


def test_squarefree_part():
    assert squarefree_part(72) == (2, 6)
    assert squarefree_part(-50) == (-2, 5)


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_scalar(0.5)


@given(radicands.flatmap(lambda d: st.tuples(quads(d), quads(d), quads(d))))
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if a != 0:
        assert (b / a) * a == b
        assert 1 / a * a == 1


@given(quads())
def test_norm_and_conjugate(x):
    assert x * x.conjugate() == x.norm()


@given(quads())
def test_json_round_trip(x):
    assert decode_scalar(encode_scalar(x)) == x


@given(fractions)
def test_json_round_trip_rational(x):
    assert decode_scalar(encode_scalar(x)) == x
