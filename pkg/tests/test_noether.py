import pytest
from hypothesis import given, settings, strategies as st

from linegeom.complexes import LinearComplex
from linegeom.errors import PreconditionError
from linegeom.linalg import rank
from linegeom.noether import (
    ExceptionalLine, OnConic, complex_lines, congruence_image, directrix_points, lines_meeting, noether_chart,
    noether_forward, noether_inverse, tangent_plane_certificate,
)
from linegeom.projective import omega

K1 = LinearComplex((1, 2, 3, 1, -1, 2))
L0 = complex_lines(K1, 1, seed=5)[0]
CHART = noether_chart(K1, L0)
SECOND_CONTAINING_L0 = (-2, 2, -2, -2, -1, 1)


def test_chart_preconditions():
    with pytest.raises(PreconditionError):
        noether_chart(LinearComplex((1, 0, 0, 0, 0, 0)), (0, 1, 0, 0, 0, 0))     # special complex
    with pytest.raises(PreconditionError):
        noether_chart(K1, (1, 0, 0, 0, 0, 0))                                    # not in K1


def test_c2_is_a_smooth_conic():
    assert rank(CHART.c2_matrix()) == 3


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20)
def test_round_trip(seed):
    for line in complex_lines(K1, 3, seed=seed):
        if omega(line, L0) == 0:
            continue
        img = noether_forward(CHART, line)
        assert not img.on_c2
        assert noether_inverse(CHART, img.point) == line


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20)
def test_lines_meeting_l0_land_on_c2(seed):
    for line in lines_meeting(CHART, 2, seed=seed):
        img = noether_forward(CHART, line)
        assert img.on_c2 and CHART.on_c2(img.point)
        with pytest.raises(OnConic):
            noether_inverse(CHART, img.point)


def test_l0_itself_is_exceptional():
    with pytest.raises(ExceptionalLine):
        noether_forward(CHART, L0)
    # a point of E off C2 maps back to l0
    E = CHART.exceptional_frame()
    y = next(p for p in E + [[a + b for a, b in zip(E[0], E[1])]] if not CHART.on_c2(p))
    assert noether_inverse(CHART, y) == L0


def test_pencil_through_point_of_l0_collapses():
    # every line of K1 through P in l0 lies in P's null plane together with l0
    from linegeom.complexes import null_plane
    from linegeom.linalg import kernel
    from linegeom.projective import line_from_points, points_on_line

    P = points_on_line(L0)[0]
    basis = kernel([null_plane(K1, P)])
    images = set()
    for W in basis:
        if rank([list(P), W]) == 2:
            line = line_from_points(P, W)
            if line != L0:
                images.add(noether_forward(CHART, line).point)
    assert len(images) == 1


@pytest.mark.parametrize("k", range(3))
def test_lines_meeting_a_line_through_l0_map_to_tangent_planes(k):
    v = lines_meeting(CHART, 3, seed=9)[k]
    plane, tangency = tangent_plane_certificate(CHART, v)
    assert tangency == 1


def test_congruence_image_is_quadric_through_c2():
    img = congruence_image(CHART, (2, -1, 0, 1, 3, 1))
    assert len(img.quadrics) == 1 and not img.planes
    assert img.contains_c2 and img.held_out_ok


def test_congruence_containing_l0_maps_to_plane():
    second = LinearComplex(SECOND_CONTAINING_L0)
    assert second.contains(L0)
    img = congruence_image(CHART, second)
    assert len(img.planes) == 1 and img.held_out_ok
    plane = img.planes[0]
    P1, P2 = directrix_points(CHART, second)
    assert P1 != P2
    for P in (P1, P2):
        assert CHART.on_c2(P) and plane(P) == 0
