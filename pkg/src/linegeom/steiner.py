"""The Roman (Steiner) quartic and the pole sweep of its tangent sections.

The surface ``x1^2 x2^2 + x2^2 x0^2 + x0^2 x1^2 - x0 x1 x2 x3 = 0`` is the
image of the plane under ``(a, b, c) -> (bc, ca, ab, a^2 + b^2 + c^2)``.
A tangent plane T pulls back to a ternary quadratic of rank <= 2, i.e. a
pair of lines, and these map to the two conics in which T meets the surface.

For a fixed plane ``Pi`` the line ``Pi ∩ T`` has a pole with respect to each
conic.  As T runs over the tangent planes these poles sweep a quartic; when
``Pi`` is itself tangent they sweep a quadric.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .conic import ConicInPlane, frame_coordinates, plane_frame, point_from_frame
from .errors import DegenerateError, RankError
from .linalg import adjugate, kernel, matvec, rank, rank2_split, symmetric_from_quadratic
from .poly import MultiPoly, monomials, variables
from .projective import Plane3
from .samples import RationalSequence
from .scalar import Quad, as_scalar, is_rational

__all__ = [
    "SteinerSurface", "roman_surface", "tangent_plane", "TangentSection", "tangent_section_split",
    "PoleSample", "SweepResult", "lie_sweep", "fit_hypersurface", "sweep_parameters",
    "restrict_to_plane", "evaluation_row", "is_generic_parameter",
]


@dataclass(frozen=True)
class SteinerSurface:
    F: MultiPoly
    phi: tuple
    triple_point: tuple
    double_lines: tuple     # each as a pair of points

    def image(self, u) -> list:
        return [p(list(u)) for p in self.phi]


def roman_surface() -> SteinerSurface:
    x0, x1, x2, x3 = variables(4)
    F = x1 ** 2 * x2 ** 2 + x2 ** 2 * x0 ** 2 + x0 ** 2 * x1 ** 2 - x0 * x1 * x2 * x3
    a, b, c = variables(3)
    phi = (b * c, c * a, a * b, a * a + b * b + c * c)
    O = (Fraction(0), Fraction(0), Fraction(0), Fraction(1))
    e = [[Fraction(int(i == k)) for i in range(4)] for k in range(3)]
    return SteinerSurface(F, phi, O, tuple((O, tuple(v)) for v in e))


def tangent_plane(S: SteinerSurface, u) -> Plane3:
    """Tangent plane at ``phi(u)``; raises DegenerateError at singular image points."""
    X = S.image(u)
    if all(x == 0 for x in X):
        raise DegenerateError("parameter maps to no point")
    grad = [g(X) for g in S.F.gradient()]
    if all(x == 0 for x in grad):
        raise DegenerateError("image point is singular on the surface")
    return Plane3(grad)


def restrict_to_plane(F: MultiPoly, frame) -> MultiPoly:
    """``F`` in the frame coordinates ``y`` of a plane (``X = sum y_k frame[k]``)."""
    y = variables(3)
    sub = [sum((y[k] * frame[k][i] for k in range(3)), MultiPoly(3)) for i in range(4)]
    return F.subs(sub)


@dataclass(frozen=True)
class TangentSection:
    first: ConicInPlane
    second: ConicInPlane
    delta: int
    lines: tuple

    def __iter__(self):
        return iter((self.first, self.second))


def _points_on_param_line(L, count=5):
    basis = kernel([list(L)])
    v1, v2 = basis
    return [[v1[i] + k * v2[i] for i in range(3)] for k in range(count - 1)] + [v2]


def _fit_conic(ys) -> list:
    rows = []
    for y in ys:
        rows.append([y[0] * y[0], y[0] * y[1], y[0] * y[2], y[1] * y[1], y[1] * y[2], y[2] * y[2]])
    ker = kernel(rows)
    if len(ker) != 1:
        raise RankError("image points do not determine a unique conic", 6 - len(ker))
    c = ker[0]
    half = Fraction(1, 2)
    return [[c[0], c[1] * half, c[2] * half],
            [c[1] * half, c[3], c[4] * half],
            [c[2] * half, c[4] * half, c[5]]]


def tangent_section_split(S: SteinerSurface, u, T: Optional[Plane3] = None) -> TangentSection:
    """Split the tangent section at ``phi(u)`` into its two conics."""
    T = T or tangent_plane(S, u)
    q = sum((T[i] * S.phi[i] for i in range(4)), MultiPoly(3))
    r = rank(symmetric_from_quadratic(q))
    if r < 2:
        # one of the four planes touching along a whole conic
        raise RankError(f"pulled-back tangent form has rank {r}; the section is a doubled conic", r)
    try:
        L1, L2, delta = rank2_split(q)
    except RankError as exc:
        raise RankError(f"pulled-back tangent form has rank {exc.rank}; not a Steiner section", exc.rank) from None
    frame = plane_frame(list(T))
    conics = []
    for L in (L1, L2):
        ys = [frame_coordinates(frame, S.image(v)) for v in _points_on_param_line(L)]
        conics.append(ConicInPlane.build(list(T), frame, _fit_conic(ys)))
    return TangentSection(conics[0], conics[1], delta, (tuple(L1), tuple(L2)))


@dataclass
class PoleSample:
    u: tuple
    T: Plane3
    ell: tuple               # the line Pi ∩ T in T's frame coordinates
    poles: tuple             # two points, possibly over Q(sqrt(delta))
    delta: int


@dataclass
class SweepResult:
    samples: List[PoleSample] = field(default_factory=list)
    skipped: List[tuple] = field(default_factory=list)   # (u, reason)

    @property
    def poles(self) -> list:
        return [p for s in self.samples for p in s.poles]


def is_generic_parameter(u) -> bool:
    """Off the double-line preimages ``abc = 0`` and the four lines ``a ± b ± c = 0``.

    On the latter the tangent plane is one of the four planes touching the
    surface along a whole conic (the section is a doubled conic).
    """
    a, b, c = u
    if a == 0 or b == 0 or c == 0:
        return False
    return all(a + sb * b + sc * c != 0 for sb in (1, -1) for sc in (1, -1))


def sweep_parameters(count: int, seed: int = 0, bound: int = 6) -> list:
    """Deterministic generic parameter points (see :func:`is_generic_parameter`)."""
    seq = RationalSequence(seed, bound)
    out = []
    while len(out) < count:
        u = tuple(seq.vector(3, nonzero_entries=True))
        if is_generic_parameter(u):
            out.append(u)
    return out


def lie_sweep(S: SteinerSurface, Pi: Sequence, us: Sequence) -> SweepResult:
    """Poles of ``Pi ∩ T_u`` with respect to both conics of each tangent section."""
    Pi = [as_scalar(x) for x in Pi]
    res = SweepResult()
    for u in us:
        u = tuple(as_scalar(x) for x in u)
        try:
            T = tangent_plane(S, u)
        except DegenerateError as exc:
            res.skipped.append((u, str(exc)))
            continue
        if Plane3(Pi) == T:
            res.skipped.append((u, "sample tangent plane equals Pi"))
            continue
        try:
            sec = tangent_section_split(S, u, T)
        except RankError as exc:
            res.skipped.append((u, str(exc)))
            continue
        frame = sec.first.frame
        xi = tuple(sum((Pi[i] * F[i] for i in range(4)), Fraction(0)) for F in frame)
        poles = []
        for conic in sec:
            C = [list(r) for r in conic.matrix]
            if rank(C) < 3:
                break
            y = matvec(adjugate(C), list(xi))
            poles.append(tuple(point_from_frame(frame, y)))
        if len(poles) < 2:
            res.skipped.append((u, "degenerate conic; polarity undefined"))
            continue
        res.samples.append(PoleSample(u, T, xi, tuple(poles), sec.delta))
    return res


# -- fitting ---------------------------------------------------------------------------------

def evaluation_row(point, degree: int, arity: int = 4) -> list:
    row = []
    for e in monomials(arity, degree):
        v = Fraction(1)
        for x, k in zip(point, e):
            if k:
                v = v * x ** k
        row.append(v)
    return row


def fit_hypersurface(points, degree: int, rational: bool = True, arity: int = 4) -> List[MultiPoly]:
    """Basis of the forms of the given degree vanishing at every point.

    With ``rational=True`` the coefficients are rational: a point over
    ``Q(sqrt(d))`` contributes the rational and irrational parts of its
    evaluation row as two separate constraints.  With ``rational=False`` the
    kernel is computed over the (single) field of the points.
    """
    mons = monomials(arity, degree)
    rows = []
    for P in points:
        row = evaluation_row(P, degree, arity)
        if rational and not all(is_rational(v) for v in row):
            rows.append([v.a if isinstance(v, Quad) else v for v in row])
            rows.append([v.b if isinstance(v, Quad) else Fraction(0) for v in row])
        else:
            rows.append(row)
    if not rows:
        basis = [[Fraction(int(i == k)) for i in range(len(mons))] for k in range(len(mons))]
    else:
        basis = kernel(rows)
    return [MultiPoly(arity, dict(zip(mons, v))) for v in basis]
