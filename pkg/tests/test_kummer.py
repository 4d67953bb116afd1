import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy

from linegeom.complexes import diagonal_complex, singularity_surface
from linegeom.errors import DegenerateError, PositiveDimensionalLocus, PreconditionError
from linegeom.kummer import (
    KummerSurface, RESIDUAL_TOL, class_formula, configuration_check, fermat_quartic, find_nodes, find_tropes,
    fresnel_circles, fresnel_real_nodes, fresnel_surface, kummer_from_complex,
)
from linegeom.poly import variables
from linegeom.steiner import roman_surface

from oracles import X, to_sympy


@pytest.fixture(scope="module")
def kummer():
    return kummer_from_complex(diagonal_complex())


def test_class_formula():
    assert class_formula(4, 16) == 4
    assert class_formula(3, 0) == 12
    assert class_formula(4, 0) == 36
    with pytest.raises(ValueError):
        class_formula(1, 0)


def _signed_permutations_preserving(F):
    out = []
    for perm in itertools.permutations(range(4)):
        for signs in itertools.product((1, -1), repeat=4):
            img = sympy.expand(F.subs({X[i]: signs[i] * X[perm[i]] for i in range(4)}, simultaneous=True))
            if sympy.expand(img - F) == 0:
                out.append((perm, signs))
    return out


def _exact_nodes():
    """Orbit of one closed-form node under the signed permutations fixing F."""
    F = to_sympy(singularity_surface(diagonal_complex())).as_expr()
    b = (7 - 3 * sympy.sqrt(5)) / 2
    c = (3 - sympy.sqrt(5)) / (2 * sympy.sqrt(2))
    node = (1, -c, -b, c)
    sub = dict(zip(X, node))
    assert sympy.simplify(F.subs(sub)) == 0
    assert all(sympy.simplify(sympy.diff(F, v).subs(sub)) == 0 for v in X)
    pts = set()
    for perm, signs in _signed_permutations_preserving(F):
        img = [0] * 4
        for i in range(4):
            img[perm[i]] = signs[i] * node[i]
        v = np.array([float(sympy.N(x, 30)) for x in img])
        v = v / v[np.argmax(np.abs(v))]
        pts.add(tuple(np.round(v, 9)))
    return np.array(sorted(pts))


def test_nodes_match_exact_orbit(kummer):
    exact = _exact_nodes()
    assert len(exact) == 16
    got = kummer.nodes.points
    assert len(got) == 16 and float(kummer.nodes.residuals.max()) < RESIDUAL_TOL
    for p in got:
        assert np.min(np.linalg.norm(exact - p.real, axis=1)) < 1e-9
    assert kummer.nodes.is_real.all()


def test_sixteen_tropes_and_configuration(kummer):
    assert len(kummer.tropes) == 16
    cert = configuration_check(kummer)
    assert cert.ok
    assert cert.row_sums == [6] * 16 and cert.col_sums == [6] * 16
    for t in kummer.tropes:
        assert t.residual < 1e-9


def test_perturbed_surface_fails_configuration(kummer):
    x0 = variables(4)[0]
    F = kummer.F + Fraction(1, 1000) * x0 ** 4
    tropes = find_tropes(F, kummer.nodes)
    cert = configuration_check(KummerSurface(F, kummer.nodes, tropes))
    assert not cert.ok and cert.offending


def test_roman_surface_has_double_lines():
    with pytest.raises(PositiveDimensionalLocus):
        find_nodes(roman_surface().F)


def test_fermat_quartic_is_smooth():
    assert len(find_nodes(fermat_quartic())) == 0


def test_configuration_needs_nodes():
    with pytest.raises(PreconditionError):
        configuration_check(KummerSurface(fermat_quartic(), find_nodes(fermat_quartic())))


FRESNEL = [(4, 2, 1), (9, 4, 1), (5, 3, 2), (Fraction(7, 2), 2, Fraction(1, 3)), (10, 7, 3)]


@pytest.mark.parametrize("abc", FRESNEL)
def test_fresnel_real_nodes_closed_form(abc):
    a2, b2, c2 = abc
    f = fresnel_surface(a2, b2, c2)
    res = fresnel_real_nodes(f)
    assert len(res) == 16 and float(res.residuals.max()) < RESIDUAL_TOL
    real = res.real_points.real
    assert len(real) == 4
    A, B, C = (sympy.Rational(v.numerator, v.denominator) for v in map(Fraction, abc))
    xs = sympy.sqrt(C * (A - B) / (A - C))
    zs = sympy.sqrt(A * (B - C) / (A - C))
    Fs = to_sympy(f.F).as_expr()
    for sx, sz in itertools.product((1, -1), repeat=2):
        sub = {X[0]: sx * xs, X[1]: 0, X[2]: sz * zs, X[3]: 1}
        assert sympy.simplify(Fs.subs(sub)) == 0
        assert all(sympy.simplify(sympy.diff(Fs, v).subs(sub)) == 0 for v in X)
        want = np.array([float(sx * xs), 0.0, float(sz * zs), 1.0])
        aff = real / real[:, 3:4]
        assert np.min(np.linalg.norm(aff - want, axis=1)) < 1e-9


def test_fresnel_tropes_touch_along_circles():
    circles = fresnel_circles(fresnel_surface(4, 2, 1))
    assert len(circles) == 4
    assert all(is_circle for _, is_circle, _ in circles)


def test_uniaxial_crystal_degenerates():
    with pytest.raises(DegenerateError) as info:
        fresnel_surface(4, 4, 1)
    x, y, z, w = variables(4)
    sphere, spheroid = info.value.factors
    assert sphere.proportional(x * x + y * y + z * z - 4 * w * w)
    assert spheroid.proportional(4 * (x * x + y * y) + z * z - 4 * w * w)


def test_fresnel_needs_ordered_axes():
    with pytest.raises(PreconditionError):
        fresnel_surface(1, 2, 4)
