"""Noether's map: the lines of a linear complex as points of 3-space.

The lines of a non-special linear complex ``K1`` (covector ``a``) form a
3-dimensional quadric ``Q`` in the hyperplane ``H: omega(a, x) = 0``.
Projecting ``Q`` from one of its points ``l0`` onto a 3-space ``S`` inside
``H`` is birational.  The tangent cone at ``l0`` (lines meeting ``l0``)
collapses onto the conic ``C2`` in the exceptional plane
``E = {omega(l0, x) = 0} ∩ S``, and ``l0`` itself blows up to ``E``.

Screen recipe: let ``k`` be the index of the first non-zero coordinate of
``l0``; the screen is ``S = H ∩ {x_k = 0}`` with the frame given by the
exact kernel basis of ``[K a; e_k]``.  Screen coordinates are the
coefficients in that frame.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .complexes import Congruence, LinearComplex, congruence_directrices, null_plane
from .errors import DegenerateError, PreconditionError, RankError
from .linalg import kernel, rank, solve, transpose
from .poly import MultiPoly
from .projective import KLEIN_PARTNER, PlueckerLine, line_from_points, omega, points_on_line
from .samples import RationalSequence
from .scalar import as_scalar
from .steiner import fit_hypersurface

__all__ = [
    "NoetherChart", "NoetherImage", "noether_chart", "noether_forward", "noether_inverse",
    "ExceptionalLine", "OnConic", "lines_meeting", "complex_lines", "CongruenceImage",
    "congruence_image", "tangent_plane_certificate", "directrix_points",
]


class ExceptionalLine(DegenerateError):
    """The distinguished line itself: its image is the whole exceptional plane."""


class OnConic(DegenerateError):
    """A point of C2: its preimage is a whole pencil of lines."""


def _klein_covector(a) -> list:
    # omega(a, x) = sum_i a[partner(i)] x[i]
    return [a[KLEIN_PARTNER[i]] for i in range(6)]


@dataclass(frozen=True)
class NoetherImage:
    point: tuple
    on_c2: bool


@dataclass
class NoetherChart:
    K1: LinearComplex
    l0: tuple
    k: int                 # screen coordinate x_k = 0
    frame: list            # four 6-vectors spanning the screen
    exceptional: list      # covector of E in screen coordinates
    gram: list             # omega(F_j, F_k): C2 = E ∩ {y^T G y = 0}

    def lift(self, y) -> list:
        return [sum((y[j] * self.frame[j][i] for j in range(4)), Fraction(0)) for i in range(6)]

    def coordinates(self, X) -> list:
        return solve(transpose(self.frame), list(X))

    def on_c2(self, y) -> bool:
        return (sum((e * v for e, v in zip(self.exceptional, y)), Fraction(0)) == 0
                and self.conic_form(y) == 0)

    def conic_form(self, y):
        return sum((y[i] * self.gram[i][j] * y[j] for i in range(4) for j in range(4)
                    if self.gram[i][j] != 0), Fraction(0))

    def exceptional_frame(self) -> list:
        """Three screen points spanning E."""
        return kernel([self.exceptional])

    def c2_matrix(self) -> list:
        """Gram matrix of C2 in the frame of :meth:`exceptional_frame`."""
        E = self.exceptional_frame()
        return [[sum((E[r][i] * self.gram[i][j] * E[c][j] for i in range(4) for j in range(4)), Fraction(0))
                 for c in range(3)] for r in range(3)]


def noether_chart(K1, l0) -> NoetherChart:
    K1 = K1 if isinstance(K1, LinearComplex) else LinearComplex(K1)
    if K1.special:
        raise PreconditionError("Noether's map needs a non-special linear complex")
    l0 = tuple(as_scalar(x) for x in l0)
    if not K1.contains(l0):
        raise PreconditionError("distinguished line must belong to the complex")
    PlueckerLine(l0)
    k = next(i for i, x in enumerate(l0) if x != 0)
    ek = [Fraction(int(i == k)) for i in range(6)]
    frame = kernel([_klein_covector(K1.a), ek])
    exceptional = [omega(l0, F) for F in frame]
    gram = [[omega(F, G) for G in frame] for F in frame]
    return NoetherChart(K1, l0, k, frame, exceptional, gram)


def noether_forward(ch: NoetherChart, line) -> NoetherImage:
    """Screen point of a line of the complex (``on_c2`` set for lines meeting ``l0``)."""
    p = tuple(as_scalar(x) for x in line)
    if not ch.K1.contains(p):
        raise PreconditionError("line does not belong to the complex")
    s0 = ch.l0[ch.k]
    sp = p[ch.k]
    X = [s0 * p[i] - sp * ch.l0[i] for i in range(6)]
    if all(x == 0 for x in X):
        raise ExceptionalLine("the distinguished line maps onto the exceptional plane")
    y = ch.coordinates(X)
    return NoetherImage(tuple(_canonical(y)), omega(p, ch.l0) == 0)


def noether_inverse(ch: NoetherChart, y) -> PlueckerLine:
    y = [as_scalar(v) for v in y]
    X = ch.lift(y)
    wl = omega(X, ch.l0)
    wx = omega(X, X)
    if wl == 0:
        if wx == 0:
            raise OnConic("point of C2: preimage is a pencil of lines meeting l0")
        return PlueckerLine(ch.l0)
    return PlueckerLine([2 * wl * X[i] - wx * ch.l0[i] for i in range(6)])


def _canonical(y):
    lead = next(v for v in y if v != 0)
    return [v / lead for v in y]


# -- sampling lines of the complex ---------------------------------------------------------

def complex_lines(K1: LinearComplex, count: int, seed: int = 0, through=None) -> List[PlueckerLine]:
    """Lines of ``K1`` from the deterministic sequence.

    With ``through`` (a line), every sample meets that line: the point is
    taken on it and the second point in the point's null plane.
    """
    seq = RationalSequence(seed, 7)
    out = []
    base = points_on_line(through) if through is not None else None
    while len(out) < count:
        if base is None:
            Z = seq.vector(4)
        else:
            s, t = seq.scalar(), seq.scalar()
            Z = [s * base[0][i] + t * base[1][i] for i in range(4)]
            if all(z == 0 for z in Z):
                continue
        plane = null_plane(K1, Z)
        basis = kernel([plane])
        c = seq.vector(3)
        W = [sum((c[j] * basis[j][i] for j in range(3)), Fraction(0)) for i in range(4)]
        if rank([Z, W]) < 2:
            continue
        line = line_from_points(Z, W)
        if through is not None and line == PlueckerLine(through):
            continue
        out.append(line)
    return out


def lines_meeting(ch: NoetherChart, count: int, seed: int = 0) -> List[PlueckerLine]:
    """Lines of the complex meeting ``l0`` (excluding ``l0``)."""
    return complex_lines(ch.K1, count, seed, through=ch.l0)


def tangent_plane_certificate(ch: NoetherChart, v, samples: int = 8, seed: int = 0):
    """Images of the complex lines meeting ``v`` (a complex line through a point of ``l0``).

    Returns ``(plane, tangency_rank)``: the plane (screen covector) fitted
    through the images, and the rank of C2 restricted to the line
    ``plane ∩ E`` (1 means tangent).
    """
    v = tuple(as_scalar(x) for x in v)
    if not ch.K1.contains(v) or omega(v, ch.l0) != 0:
        raise PreconditionError("v must be a complex line meeting l0")
    pts = []
    for line in complex_lines(ch.K1, samples, seed, through=v):
        try:
            pts.append(list(noether_forward(ch, line).point))
        except ExceptionalLine:
            continue
    planes = fit_hypersurface(pts, 1)
    if len(planes) != 1:
        raise RankError("images do not span a unique plane", 4 - len(planes))
    plane = [planes[0].coeff(tuple(int(i == j) for i in range(4))) for j in range(4)]
    # the line plane ∩ E inside the screen, and C2 restricted to it
    basis = kernel([plane, ch.exceptional])
    G = [[sum((a[i] * ch.gram[i][j] * b[j] for i in range(4) for j in range(4)), Fraction(0))
          for b in basis] for a in basis]
    return plane, rank(G)


# -- congruences ---------------------------------------------------------------------------------

@dataclass
class CongruenceImage:
    points: list
    quadrics: List[MultiPoly]
    planes: List[MultiPoly]
    contains_c2: Optional[bool]
    held_out_ok: bool


def _restrict_quadric_to_e(ch: NoetherChart, q: MultiPoly) -> list:
    from .linalg import symmetric_from_quadratic

    S = symmetric_from_quadratic(q)
    E = ch.exceptional_frame()
    return [[sum((E[r][i] * S[i][j] * E[c][j] for i in range(4) for j in range(4)), Fraction(0))
             for c in range(3)] for r in range(3)]


def _proportional(A, B) -> bool:
    a = [x for r in A for x in r]
    b = [x for r in B for x in r]
    return rank([a, b]) == 1 if any(a) and any(b) else False


def congruence_image(ch: NoetherChart, second, samples: int = 14, held_out: int = 6, seed: int = 0):
    """Fit the image of the congruence ``K1 ∩ second`` and compare it with C2."""
    second = second if isinstance(second, LinearComplex) else LinearComplex(second)
    cong = Congruence(ch.K1, second)
    seq = RationalSequence(seed, 7)
    pts = []
    while len(pts) < samples + held_out:
        X = seq.vector(4)
        try:
            line = cong.line_through(X)
            pts.append(list(noether_forward(ch, line).point))
        except DegenerateError:
            continue
    fit, rest = pts[:samples], pts[samples:]
    quadrics = fit_hypersurface(fit, 2)
    planes = fit_hypersurface(fit, 1)
    ok = all(q(p) == 0 for q in quadrics for p in rest)
    contains = None
    if len(quadrics) == 1:
        contains = _proportional(_restrict_quadric_to_e(ch, quadrics[0]), ch.c2_matrix())
    return CongruenceImage(pts, quadrics, planes, contains, ok)


def directrix_points(ch: NoetherChart, second) -> list:
    """For a congruence containing ``l0``: the images of the pencils through ``l0 ∩ R1`` and ``l0 ∩ R2``.

    Each pencil (congruence lines through that point) contains ``l0`` and
    collapses to a single point of C2.
    """
    second = second if isinstance(second, LinearComplex) else LinearComplex(second)
    cong = Congruence(ch.K1, second)
    if not cong.contains(ch.l0):
        raise PreconditionError("congruence must contain l0")
    R = congruence_directrices(cong)
    if R.doubled or R.delta != 1:
        raise PreconditionError("need two distinct rational directrices")
    out = []
    for Ri, Rj in ((R.lines[0], R.lines[1]), (R.lines[1], R.lines[0])):
        Q = _meet_lines(ch.l0, Ri)
        A, B = points_on_line(Rj)
        for P in (A, B, [a + b for a, b in zip(A, B)]):
            if _same_point(P, Q):
                continue
            line = line_from_points(Q, P)
            if line != PlueckerLine(ch.l0):
                out.append(noether_forward(ch, line).point)
                break
    return out


def _same_point(P, Q) -> bool:
    return rank([list(P), list(Q)]) < 2


def _meet_lines(l1, l2) -> list:
    """Common point of two meeting lines."""
    A, B = points_on_line(l1)
    C, D = points_on_line(l2)
    ker = kernel(transpose([list(A), list(B), [-x for x in C], [-x for x in D]]))
    s, t = ker[0][0], ker[0][1]
    return [s * A[i] + t * B[i] for i in range(4)]
