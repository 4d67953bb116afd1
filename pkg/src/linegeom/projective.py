"""Points, planes and Plücker lines of projective 3-space.

Line coordinates are ordered ``(p01, p02, p03, p23, p31, p12)`` with
``p_ij = P_i Q_j - P_j Q_i`` for the join of points ``P`` and ``Q``.  The
Klein pairing is

    omega(p, q) = p01 q23 + p02 q31 + p03 q12 + p23 q01 + p31 q02 + p12 q03

so ``omega(p, p) = 0`` on the Klein quadric and two lines meet iff their
pairing vanishes.

The cross ratio uses ``(A, B; C, D) = (AC * BD) / (BC * AD)`` with ``XY``
the signed affine distance between parameters.  Under this convention the
four parameters ``(inf, 0, 1, lam)`` give ``lam`` and ``(0, 1, inf, lam)``
give ``(lam - 1) / lam``; the other orderings produce the usual orbit
``lam, 1/lam, 1 - lam, ...``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

from .errors import CoincidentError, ContainmentError, DegenerateError
from .linalg import Matrix, kernel, rank
from .scalar import Scalar, as_scalar, decode_scalar, encode_scalar

__all__ = [
    "Point3", "Plane3", "PlueckerLine", "KLEIN", "PAIRS", "line_from_points", "line_from_planes",
    "omega", "cross_ratio", "meet_line_plane", "plane_through", "incident", "wedge",
    "skew_matrix", "dual_skew_matrix", "points_on_line", "planes_through_line",
    "line_contains", "compound2", "pluecker_relation",
]

PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))
# omega pairs coordinate k with coordinate KLEIN_PARTNER[k]
KLEIN_PARTNER = (3, 4, 5, 0, 1, 2)
KLEIN: Matrix = [[Fraction(int(KLEIN_PARTNER[i] == j)) for j in range(6)] for i in range(6)]


def _canonical(coords):
    coords = tuple(as_scalar(c) for c in coords)
    lead = next((c for c in coords if c != 0), None)
    if lead is None:
        raise ValueError("all coordinates are zero")
    if lead == 1:
        return coords
    return tuple(c / lead for c in coords)


class _Projective:
    __slots__ = ("coords",)
    size = 0

    def __init__(self, coords: Sequence):
        if len(coords) != self.size:
            raise ValueError(f"{type(self).__name__} needs {self.size} coordinates")
        self.coords = _canonical(coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self.coords)})"

    def to_json(self):
        return [encode_scalar(c) for c in self.coords]

    @classmethod
    def from_json(cls, obj):
        return cls([decode_scalar(c) for c in obj])


class Point3(_Projective):
    """Point of P^3; stored with first non-zero coordinate equal to 1."""
    size = 4


class Plane3(_Projective):
    """Plane of P^3 as a covector; same scaling convention as points."""
    size = 4

    def __call__(self, point) -> Scalar:
        return sum((a * b for a, b in zip(self.coords, point)), Fraction(0))


def pluecker_relation(p) -> Scalar:
    return p[0] * p[3] + p[1] * p[4] + p[2] * p[5]


class PlueckerLine(_Projective):
    size = 6

    def __init__(self, coords: Sequence):
        super().__init__(coords)
        if pluecker_relation(self.coords) != 0:
            raise ValueError("coordinates violate the Plücker relation")


def wedge(P: Sequence, Q: Sequence) -> tuple:
    """Raw 6-vector of 2x2 minors (no canonical scaling)."""
    return tuple(P[i] * Q[j] - P[j] * Q[i] for i, j in PAIRS)


def _dual_to_line(u: Sequence, v: Sequence) -> tuple:
    # plane-coordinates minors pi_ij -> (p01:p02:p03:p23:p31:p12) = (pi23:pi31:pi12:pi01:pi02:pi03)
    pi = wedge(u, v)
    return (pi[3], pi[4], pi[5], pi[0], pi[1], pi[2])


def line_from_points(P, Q) -> PlueckerLine:
    w = wedge(tuple(P), tuple(Q))
    if all(c == 0 for c in w):
        raise CoincidentError("points coincide")
    return PlueckerLine(w)


def line_from_planes(u, v) -> PlueckerLine:
    w = _dual_to_line(tuple(u), tuple(v))
    if all(c == 0 for c in w):
        raise CoincidentError("planes coincide")
    return PlueckerLine(w)


def omega(l1: Sequence, l2: Sequence) -> Scalar:
    return (l1[0] * l2[3] + l1[1] * l2[4] + l1[2] * l2[5]
            + l1[3] * l2[0] + l1[4] * l2[1] + l1[5] * l2[2])


def skew_matrix(p: Sequence) -> Matrix:
    """4x4 skew matrix ``L`` with ``L[i][j] = p_ij``."""
    m = [[Fraction(0)] * 4 for _ in range(4)]
    for (i, j), c in zip(PAIRS, p):
        m[i][j] = c
        m[j][i] = -c
    return m


def dual_skew_matrix(p: Sequence) -> Matrix:
    """Skew matrix of the dual (plane) coordinates of the line."""
    dual = (p[3], p[4], p[5], p[0], p[1], p[2])
    return skew_matrix(dual)


def meet_line_plane(line, plane) -> Point3:
    """Intersection point; raises ContainmentError if the line lies in the plane."""
    L = skew_matrix(tuple(line))
    x = [sum((L[i][j] * plane[j] for j in range(4)), Fraction(0)) for i in range(4)]
    if all(c == 0 for c in x):
        raise ContainmentError("line lies in the plane")
    return Point3(x)


def plane_through(line, point) -> Plane3:
    """Plane spanned by a line and a point; raises ContainmentError if the point is on it."""
    D = dual_skew_matrix(tuple(line))
    u = [sum((D[i][j] * point[j] for j in range(4)), Fraction(0)) for i in range(4)]
    if all(c == 0 for c in u):
        raise ContainmentError("point lies on the line")
    return Plane3(u)


def incident(point, plane) -> bool:
    return sum((a * b for a, b in zip(point, plane)), Fraction(0)) == 0


def line_contains(line, point) -> bool:
    D = dual_skew_matrix(tuple(line))
    return all(sum((D[i][j] * point[j] for j in range(4)), Fraction(0)) == 0 for i in range(4))


def points_on_line(line) -> Tuple[Point3, Point3]:
    """Two distinct points spanning the line (canonical choice)."""
    D = dual_skew_matrix(tuple(line))
    basis = kernel(D)
    if len(basis) != 2:
        raise DegenerateError("not a line")
    return Point3(basis[0]), Point3(basis[1])


def planes_through_line(line) -> Tuple[Plane3, Plane3]:
    L = skew_matrix(tuple(line))
    basis = kernel(L)
    if len(basis) != 2:
        raise DegenerateError("not a line")
    return Plane3(basis[0]), Plane3(basis[1])


def cross_ratio(A, B, C, D) -> Scalar:
    """Cross ratio ``(A, B; C, D)`` of four distinct collinear points."""
    pts = [tuple(as_scalar(c) for c in X) for X in (A, B, C, D)]
    if rank([list(p) for p in pts]) != 2:
        raise DegenerateError("points are not collinear (or all coincide)")
    for a in range(4):
        for b in range(a + 1, 4):
            if all(c == 0 for c in wedge(pts[a], pts[b])):
                raise CoincidentError("cross ratio needs four distinct points")
    # project onto a coordinate pair that separates the line's points
    w = wedge(pts[0], pts[1])
    k = next(idx for idx, c in enumerate(w) if c != 0)
    i, j = PAIRS[k]

    def br(X, Y):
        return X[i] * Y[j] - X[j] * Y[i]

    a, b, c, d = pts
    return (br(a, c) * br(b, d)) / (br(b, c) * br(a, d))


def compound2(T: Matrix) -> Matrix:
    """6x6 matrix acting on line coordinates induced by the point map ``T``."""
    cols = []
    for i, j in PAIRS:
        ei = [T[r][i] for r in range(4)]
        ej = [T[r][j] for r in range(4)]
        cols.append(list(wedge(ei, ej)))
    return [[cols[c][r] for c in range(6)] for r in range(6)]
