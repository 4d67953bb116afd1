import pytest
import sympy
from hypothesis import given, strategies as st

from linegeom.errors import DegenerateError, RankError
from linegeom.projective import incident
from linegeom.steiner import (
    fit_hypersurface, is_generic_parameter, lie_sweep, roman_surface, sweep_parameters, tangent_plane,
    tangent_section_split,
)

from oracles import X

S = roman_surface()
params = st.tuples(*[st.integers(-6, 6)] * 3).filter(lambda u: is_generic_parameter(u))


def test_parametrisation_lies_on_surface():
    a, b, c = sympy.symbols("a b c")
    sub = dict(zip(X, (b * c, c * a, a * b, a * a + b * b + c * c)))
    F = X[1] ** 2 * X[2] ** 2 + X[2] ** 2 * X[0] ** 2 + X[0] ** 2 * X[1] ** 2 - X[0] * X[1] * X[2] * X[3]
    assert sympy.expand(F.subs(sub)) == 0
    assert S.F.subs(list(S.phi)).is_zero()


def test_triple_point_is_singular():
    with pytest.raises(DegenerateError):
        tangent_plane(S, (1, 0, 0))


@given(params)
def test_tangent_section_splits_into_two_conics(u):
    sec = tangent_section_split(S, u)
    T = sec.first.plane
    assert incident(S.image(u), T)
    for conic, L in zip(sec, sec.lines):
        # the images of points on each parameter line lie on its conic
        for p in _line_points(L):
            assert conic.contains(S.image(p))


def _line_points(L):
    from linegeom.linalg import kernel

    v1, v2 = kernel([list(L)])
    return [v1, v2, [a + b for a, b in zip(v1, v2)], [a - 2 * b for a, b in zip(v1, v2)]]


@pytest.mark.parametrize("u", [(1, 2, 3), (1, -3, 4), (2, 1, 1)])
def test_trope_parameters_are_rejected(u):
    assert not is_generic_parameter(u)
    with pytest.raises(RankError):
        tangent_section_split(S, u)


def test_sweep_parameters_are_generic():
    us = sweep_parameters(30, seed=3)
    assert len(set(us)) == 30 and all(is_generic_parameter(u) for u in us)


def test_poles_lie_in_their_tangent_planes():
    res = lie_sweep(S, (1, 2, 5, -1), sweep_parameters(6))
    for s in res.samples:
        assert all(incident(p, s.T) for p in s.poles)


def test_sweep_has_no_quadric_or_cubic():
    res = lie_sweep(S, (1, 2, 5, -1), sweep_parameters(45))
    poles = res.poles
    assert not fit_hypersurface(poles, 2)
    assert not fit_hypersurface(poles, 3)
    (quartic,) = fit_hypersurface(poles[:80], 4)
    assert all(quartic(p) == 0 for p in poles[80:])


@pytest.mark.parametrize("u0", [(1, 2, 5), (2, 3, 7)])
def test_tangent_plane_sweep_is_quadric(u0):
    Pi = list(tangent_plane(S, u0))
    res = lie_sweep(S, Pi, [u for u in sweep_parameters(14, seed=2) if u != u0])
    (quadric,) = fit_hypersurface(res.poles[:20], 2)
    assert all(quadric(p) == 0 for p in res.poles[20:])
    # each branch on its own also lies on a quadric
    for k in (0, 1):
        assert fit_hypersurface([s.poles[k] for s in res.samples], 2)


def test_fit_recovers_sphere():
    pts = [(3, 4, 0, 5), (0, 0, 1, 1), (1, 0, 0, 1), (0, 1, 0, 1), (-1, 0, 0, 1), (0, -1, 0, 1),
           (0, 0, -1, 1), (0, 3, 4, 5), (4, 0, 3, 5), (2, 3, 6, 7), (6, 2, 3, 7)]
    (q,) = fit_hypersurface(pts, 2)
    assert q((1, 2, 2, 3)) == 0
