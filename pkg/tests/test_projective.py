from fractions import Fraction

import pytest
from hypothesis import given

from linegeom.errors import CoincidentError, ContainmentError, DegenerateError
from linegeom.linalg import det
from linegeom.projective import (
    KLEIN, PlueckerLine, Point3, compound2, cross_ratio, incident, line_contains, line_from_planes,
    line_from_points, meet_line_plane, omega, plane_through, planes_through_line, pluecker_relation,
    points_on_line,
)

from strategies import point_pairs, vectors


@given(point_pairs())
def test_lines_satisfy_relation(pq):
    P, Q = pq
    line = line_from_points(P, Q)
    assert pluecker_relation(line) == 0
    assert line_contains(line, P) and line_contains(line, Q)


@given(point_pairs())
def test_points_and_planes_describe_same_line(pq):
    line = line_from_points(*pq)
    u, v = planes_through_line(line)
    assert line_from_planes(u, v) == line
    A, B = points_on_line(line)
    assert line_from_points(A, B) == line


@given(point_pairs(), point_pairs())
def test_omega_detects_meeting(a, b):
    # two lines meet iff their four points are coplanar
    l1, l2 = line_from_points(*a), line_from_points(*b)
    assert (omega(l1, l2) == 0) == (det([*a, *b]) == 0)


@given(point_pairs(), vectors(4))
def test_meet_lies_on_both(pq, u):
    line = line_from_points(*pq)
    try:
        X = meet_line_plane(line, u)
    except ContainmentError:
        assert all(incident(P, u) for P in pq)
        return
    assert incident(X, u) and line_contains(line, X)


def test_plane_through_line_and_point():
    line = line_from_points((1, 0, 0, 0), (0, 1, 0, 0))
    pl = plane_through(line, (0, 0, 1, 0))
    assert list(pl) == [0, 0, 0, 1]
    with pytest.raises(ContainmentError):
        plane_through(line, (1, 1, 0, 0))


def test_relation_enforced():
    with pytest.raises(ValueError):
        PlueckerLine((1, 0, 0, 1, 0, 0))


def test_cross_ratio_values():
    pts = [Point3((1, k, 0, 0)) for k in (1, 2, 3, 4)]
    assert cross_ratio(*pts) == Fraction(4, 3)
    lam = Fraction(7, 5)
    inf, zero, one, L = (0, 1, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0), (1, lam, 0, 0)
    assert cross_ratio(inf, zero, one, L) == lam


def test_cross_ratio_errors():
    with pytest.raises(DegenerateError):
        cross_ratio((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 0, 0))
    with pytest.raises(CoincidentError):
        cross_ratio((1, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0))


@given(vectors(4), vectors(4), point_pairs())
def test_compound_matrix_transports_lines(r0, r1, pq):
    T = [r0, r1, [0, 0, 1, 1], [1, 0, 0, 2]]
    if det(T) == 0:
        return
    P, Q = pq
    TP = [sum(T[i][j] * P[j] for j in range(4)) for i in range(4)]
    TQ = [sum(T[i][j] * Q[j] for j in range(4)) for i in range(4)]
    C = compound2(T)
    image = [sum(C[i][j] * x for j, x in enumerate(line_from_points(P, Q))) for i in range(6)]
    assert PlueckerLine(image) == line_from_points(TP, TQ)


def test_klein_matrix_is_omega():
    l1 = line_from_points((1, 2, 0, 1), (0, 1, 3, 1))
    l2 = line_from_points((2, 0, 1, 1), (1, 1, 1, 0))
    assert omega(l1, l2) == sum(l1[i] * KLEIN[i][j] * l2[j] for i in range(6) for j in range(6))


def test_json():
    line = line_from_points((1, 2, 0, 1), (0, 1, 3, 1))
    assert PlueckerLine.from_json(line.to_json()) == line
