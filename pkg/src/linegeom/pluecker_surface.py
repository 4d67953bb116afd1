"""Plücker's complex surfaces.

Fix a line ``g`` and a quadratic complex.  Each plane ``pi(t)`` through ``g``
carries the conic enveloped by the complex lines lying in it; together these
conics sweep a quartic with ``g`` as a double line.

We pick a frame ``A, B`` on ``g`` and ``D0, D1`` completing a basis, so a
point is ``X = a A + b B + c0 D0 + c1 D1`` and ``pi(t)`` is ``c1 = t c0``.  In
the plane frame ``(A, B, D0 + t D1)`` the complex restricts to a dual conic
``R(t)``; the point conic is ``C(t) = adj R(t)``.  Homogenising ``t = c1/c0``
gives

    F = a^2 C00 + 2ab C01 + b^2 C11 + 2a C02 + 2b C12 + C22

with ``C_ij`` homogenised in ``(c0, c1)`` to degrees 2, 2, 2, 3, 3, 4.  Every
term has degree >= 2 in ``(c0, c1)``, which is the double line.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .complexes import _as_quadratic, restrict_to_line
from .conic import ConicInPlane
from .errors import DegenerateError, SingularPlaneError
from .linalg import Matrix, adjugate, inverse, matmul, matvec, rank, transpose
from .poly import MultiPoly
from .projective import PlueckerLine, points_on_line, wedge
from .scalar import sqrt_rational
from .univariate import Root, exact_roots, pderiv, ugcd

__all__ = [
    "complex_conic_in_plane", "dual_conic_in_frame", "ComplexSurface", "complex_surface",
    "pinch_points", "PinchPoint", "caustic_lines", "tangent_cone_form", "has_repeated_root",
]


def dual_conic_in_frame(K, frame) -> Matrix:
    """``R = V^T A V`` where column k of V is the line ``y_k = 0`` of the frame."""
    A = _as_quadratic(K).matrix
    F0, F1, F2 = frame
    V = transpose([list(wedge(F1, F2)), list(wedge(F2, F0)), list(wedge(F0, F1))])
    return matmul(matmul(transpose(V), A), V)


def complex_conic_in_plane(K, plane) -> ConicInPlane:
    """Point conic enveloped by the lines of ``K`` in ``plane``.

    Raises :class:`SingularPlaneError` (carrying the rank) when the lines of
    the complex in the plane do not envelope a proper conic.
    """
    from .conic import plane_frame

    frame = plane_frame(plane)
    R = dual_conic_in_frame(K, frame)
    r = rank(R)
    if r < 3:
        raise SingularPlaneError(f"complex lines in this plane form a degenerate envelope (rank {r})", r)
    return ConicInPlane.build(plane, frame, adjugate(R))


def _canonical_frame(g):
    A, B = points_on_line(g)
    basis = [list(A), list(B)]
    for k in range(4):
        e = [Fraction(int(i == k)) for i in range(4)]
        if rank(basis + [e]) == len(basis) + 1:
            basis.append(e)
        if len(basis) == 4:
            break
    return basis


def _homogenise(u: MultiPoly, k: int, pos0: int, pos1: int, arity: int) -> MultiPoly:
    """``c0^k u(c1 / c0)`` as a form in ``arity`` variables."""
    if not u.is_zero() and u.degree() > k:
        raise ValueError("degree exceeds homogenising degree")
    terms = {}
    for (m,), c in u.terms.items():
        e = [0] * arity
        e[pos0] = k - m
        e[pos1] = m
        terms[tuple(e)] = c
    return MultiPoly(arity, terms)


@dataclass
class PinchPoint:
    point: Optional[list]
    parameter: object   # s with G = A + s B, or "inf" for B itself
    root: Root


@dataclass
class ComplexSurface:
    F: MultiPoly
    g: PlueckerLine
    frame: list          # A, B, D0, D1
    R: Matrix            # dual conics R(t), entries univariate in t
    C: Matrix            # point conics adj R(t)
    frame_form: MultiPoly   # F in the coordinates (a, b, c0, c1)
    discriminant: list = field(default_factory=list)   # binary quartic coefficients in s, constant first

    def plane(self, t) -> list:
        """Covector of ``pi(t)``."""
        A, B, D0, D1 = self.frame
        D = [D0[i] + t * D1[i] for i in range(4)]
        from .linalg import kernel

        return kernel(transpose([A, B, D]))[0]

    def plane_section(self, t):
        """``(conic C(t), quotient)`` where ``F | pi(t) = c^2 * conic`` in frame coords ``(a, b, c)``."""
        t = Fraction(t)
        C = [[e(t) for e in row] for row in self.C]
        from .linalg import quadratic_from_symmetric

        conic = quadratic_from_symmetric(C)
        a, b, c = (MultiPoly.var(i, 3) for i in range(3))
        restricted = self.frame_form.subs([a, b, c, c * t])
        return conic, restricted

    def frame_coordinates(self, X) -> list:
        return matvec(inverse(transpose(self.frame)), list(X))


def complex_surface(K, g) -> ComplexSurface:
    """The quartic swept by the complex conics in the planes through ``g``."""
    K = _as_quadratic(K)
    g = g if isinstance(g, PlueckerLine) else PlueckerLine(g)
    frame = _canonical_frame(g)
    A, B, D0, D1 = frame
    t = MultiPoly.var(0, 1)
    one = MultiPoly.const(1, 1)
    F2 = [D0[i] * one + t * D1[i] for i in range(4)]
    Aq = [one * x for x in A]
    Bq = [one * x for x in B]
    R = dual_conic_in_frame(K, [Aq, Bq, F2])
    R = [[x if isinstance(x, MultiPoly) else MultiPoly.const(x, 1) for x in row] for row in R]
    if all(x.is_zero() for row in R for x in row):
        raise DegenerateError("every plane through g is singular for the complex")
    C = adjugate(R)
    C = [[x if isinstance(x, MultiPoly) else MultiPoly.const(x, 1) for x in row] for row in C]
    a, b, c0, c1 = (MultiPoly.var(i, 4) for i in range(4))
    hom = {(i, j): _homogenise(C[i][j], k, 2, 3, 4)
           for (i, j), k in {(0, 0): 2, (0, 1): 2, (1, 1): 2, (0, 2): 3, (1, 2): 3, (2, 2): 4}.items()}
    Ff = (a * a * hom[0, 0] + 2 * a * b * hom[0, 1] + b * b * hom[1, 1]
          + 2 * a * hom[0, 2] + 2 * b * hom[1, 2] + hom[2, 2])
    if Ff.is_zero():
        raise DegenerateError("complex surface vanishes identically (g in a singular position)")
    Minv = inverse(transpose(frame))
    coords = [MultiPoly.linear(row) for row in Minv]
    F = Ff.subs(coords)
    surf = ComplexSurface(F, g, frame, R, C, Ff)
    surf.discriminant = _pinch_discriminant(Ff)
    return surf


def tangent_cone_form(frame_form: MultiPoly):
    """Part of F of degree 2 in ``(c0, c1)``, as ``(h20, h11, h02)`` forms in ``(a, b)``."""
    h = {(2, 0): MultiPoly(2), (1, 1): MultiPoly(2), (0, 2): MultiPoly(2)}
    for (ea, eb, e0, e1), c in frame_form.terms.items():
        if e0 + e1 == 2:
            h[e0, e1] = h[e0, e1] + MultiPoly(2, {(ea, eb): c})
    return h[2, 0], h[1, 1], h[0, 2]


def _pinch_discriminant(frame_form) -> list:
    h20, h11, h02 = tangent_cone_form(frame_form)
    disc = h11 * h11 - 4 * h20 * h02
    # binary quartic in (a, b); a = 1, b = s
    out = [Fraction(0)] * 5
    for (ea, eb), c in disc.terms.items():
        if ea + eb != 4:
            raise DegenerateError("tangent cone discriminant is not a binary quartic")
        out[eb] = c
    return out


def pinch_points(s: ComplexSurface) -> List[PinchPoint]:
    """The four pinch points on ``g`` with multiplicity (points ``A + s B``, ``s = inf`` is B)."""
    disc = s.discriminant
    if all(c == 0 for c in disc):
        raise DegenerateError("pinch discriminant vanishes identically")
    A, B = s.frame[0], s.frame[1]
    out = []
    deg = max(k for k, c in enumerate(disc) if c != 0)
    for r in exact_roots(disc):
        pt = [A[i] + r.value * B[i] for i in range(4)] if r.value is not None else None
        out.append(PinchPoint(pt, r.value if r.value is not None else r.approx, r))
    if deg < 4:
        at_inf = Root(None, 4 - deg, complex("inf"), ())
        out.append(PinchPoint(list(B), "inf", at_inf))
    return out


def caustic_lines(s: ComplexSurface, K, X) -> list:
    """Lines of the congruence ``K ∩ {lines meeting g}`` through ``X``.

    Returns ``(line_coords, restriction)`` pairs; each line is tangent to F,
    so the restriction of F to it has a repeated root.
    """
    K = _as_quadratic(K)
    y = s.frame_coordinates(X)
    a, b, c0, c1 = y
    if c0 == 0:
        raise DegenerateError("point lies in the plane c0 = 0; choose another point")
    t = c1 / c0
    A, B, D0, D1 = s.frame
    D = [D0[i] + t * D1[i] for i in range(4)]
    frame = [A, B, D]
    R = dual_conic_in_frame(K, frame)
    yP = [a, b, c0]
    # xi . yP = 0: basis of the orthogonal complement
    from .linalg import kernel

    e1, e2 = kernel([yP])
    q2 = _bil(R, e1, e1)
    q1 = 2 * _bil(R, e1, e2)
    q0 = _bil(R, e2, e2)
    sols = []
    if q2 == 0:
        sols.append((Fraction(1), Fraction(0)))
        if q1 != 0:
            sols.append((-q0, q1))
    else:
        root = sqrt_rational(q1 * q1 - 4 * q2 * q0)
        for sgn in (1, -1):
            sols.append(((-q1 + sgn * root) / (2 * q2), Fraction(1)))
    out = []
    V = [wedge(frame[1], frame[2]), wedge(frame[2], frame[0]), wedge(frame[0], frame[1])]
    for u, v in sols:
        xi = [u * e1[k] + v * e2[k] for k in range(3)]
        line = [sum((xi[k] * V[k][j] for k in range(3)), Fraction(0)) for j in range(6)]
        # second point: where the line meets g, frame coordinates (xi1, -xi0, 0)
        Q = [xi[1] * A[i] - xi[0] * B[i] for i in range(4)]
        out.append((line, restrict_to_line(s.F, list(X), Q)))
    return out


def has_repeated_root(coeffs) -> bool:
    if len(coeffs) <= 2:
        return False
    return len(ugcd(coeffs, pderiv(coeffs))) > 1


def _bil(S, x, y):
    return sum((x[i] * S[i][j] * y[j] for i in range(3) for j in range(3)), Fraction(0))
