from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from linegeom.complexes import (
    Congruence, LinearComplex, QuadraticComplex, TetrahedralComplex, complex_from_json, complex_to_json,
    congruence_directrices, diagonal_complex, is_irreducible_over_q, rank_certificate, scaling_action,
    singularity_surface, surface_points_on_line, tetra_cross_ratio,
)
from linegeom.errors import DegenerateError
from linegeom.poly import variables
from linegeom.projective import KLEIN, line_from_points, omega

from oracles import X, cone_minor_surface, proportional, to_sympy
from strategies import nonzero_fractions, point_pairs

x0, x1, x2, x3 = variables(4)

# frozen: the diagonal fixture with eigenvalues 1..6
DIAGONAL_QUARTIC = (-x0 ** 4 + 14 * x0 ** 2 * x1 ** 2 + 62 * x0 ** 2 * x2 ** 2 + 14 * x0 ** 2 * x3 ** 2
                    - 256 * x0 * x1 * x2 * x3 - x1 ** 4 + 14 * x1 ** 2 * x2 ** 2 + 62 * x1 ** 2 * x3 ** 2
                    - x2 ** 4 + 14 * x2 ** 2 * x3 ** 2 - x3 ** 4)


def test_tetrahedral_surface_is_four_planes():
    F = singularity_surface(TetrahedralComplex((1, 2, 4)))
    assert F == Fraction(-3, 2) * x0 * x1 * x2 * x3
    K = TetrahedralComplex((1, 2, 4)).quadratic()
    assert proportional(cone_minor_surface(K.matrix), X[0] * X[1] * X[2] * X[3])


def test_diagonal_surface_frozen_and_oracle():
    K = diagonal_complex()
    F = singularity_surface(K)
    assert F.proportional(DIAGONAL_QUARTIC)
    assert proportional(to_sympy(F), cone_minor_surface(K.matrix))


def test_diagonal_surface_irreducible():
    F = singularity_surface(diagonal_complex())
    assert is_irreducible_over_q(F)
    _, factors = sympy.factor_list(to_sympy(F).as_expr())
    assert len(factors) == 1 and factors[0][1] == 1


def test_rank_certificate_on_random_line():
    K = diagonal_complex()
    F = singularity_surface(K)
    cert = rank_certificate(K, F, (1, 2, -1, 3), (2, -1, 1, 1))
    assert cert and all(ok for _, ok in cert)


def test_exact_points_lie_on_surface():
    F = singularity_surface(diagonal_complex())
    # the line x2 = x3 = 0 cuts -x0^4 + 14 x0^2 x1^2 - x1^4
    pts = surface_points_on_line(F, (1, 0, 0, 0), (0, 1, 0, 0))
    assert len(pts) == 4 and all(F(p) == 0 for p in pts)


def test_trace_normalised_and_klein_rejected():
    K = diagonal_complex()
    assert sum(K.matrix[i][j] * KLEIN[j][i] for i in range(6) for j in range(6)) == 0
    with pytest.raises(DegenerateError):
        QuadraticComplex(KLEIN)


@given(point_pairs())
def test_tetrahedral_complex_through_line(pq):
    line = line_from_points(*pq)
    try:
        T = TetrahedralComplex.through(line)
    except DegenerateError:
        return
    assert T.contains(line)


@given(point_pairs(), nonzero_fractions, nonzero_fractions, nonzero_fractions)
def test_cross_ratio_invariant_under_scaling(pq, a, b, c):
    line = line_from_points(*pq)
    try:
        lam = tetra_cross_ratio(line)
    except DegenerateError:
        return
    assert tetra_cross_ratio(scaling_action(a, b, c, line)) == lam


def test_cross_ratio_matches_face_parameters():
    P, Q = (1, 1, 1, 1), (1, 2, 3, 4)
    line = line_from_points(P, Q)
    # oracle: P + t Q meets face k at t_k = -P_k / Q_k
    t = [Fraction(-P[k], Q[k]) for k in range(4)]
    want = (t[0] - t[2]) * (t[1] - t[3]) / ((t[1] - t[2]) * (t[0] - t[3]))
    assert tetra_cross_ratio(line) == want
    assert TetrahedralComplex.through(line).cross_ratio == want


def test_cross_ratio_undefined_in_face():
    with pytest.raises(DegenerateError):
        tetra_cross_ratio(line_from_points((0, 1, 2, 3), (0, 3, 1, 1)))


@pytest.mark.parametrize("a, b, delta, doubled", [
    ((1, 0, 0, -1, 0, 0), (0, 1, 0, 0, 1, 0), 1, False),     # t^2 - 1
    ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 1, 0), 1, True),       # t^2
    ((1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0), -1, False),     # t^2 + 1
])
def test_directrices(a, b, delta, doubled):
    R = congruence_directrices(Congruence(LinearComplex(a), LinearComplex(b)))
    assert R.delta == delta and R.doubled == doubled
    for line in R:
        # each directrix meets every congruence line
        c = Congruence(LinearComplex(a), LinearComplex(b))
        for P in ((1, 2, 3, 5), (2, -1, 1, 3)):
            assert omega(c.line_through(P), line) == 0


def test_congruence_line_in_both():
    c = Congruence(LinearComplex((1, 2, 3, 1, -1, 2)), LinearComplex((2, -1, 0, 1, 3, 1)))
    line = c.line_through((1, 0, 2, 1))
    assert c.contains(line)
    with pytest.raises(DegenerateError):
        Congruence(LinearComplex((1, 2, 3, 1, -1, 2)), LinearComplex((2, 4, 6, 2, -2, 4)))


@pytest.mark.parametrize("K", [LinearComplex((1, 2, 3, 1, -1, 2)), TetrahedralComplex((1, 2, 4)), diagonal_complex()])
def test_json_round_trip(K):
    back = complex_from_json(complex_to_json(K))
    assert complex_to_json(back) == complex_to_json(K)
