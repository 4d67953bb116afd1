"""Linear, quadratic and tetrahedral line complexes.

A linear complex with covector ``a`` consists of the lines ``p`` with
``omega(a, p) = 0``; when ``a`` itself lies on the Klein quadric the complex
is special and ``a`` is its axis.  A quadratic complex is a symmetric 6x6
matrix ``A`` (lines with ``p^T A p = 0``), taken modulo multiples of the Klein
matrix and normalised so that ``tr(K A) = 0``.

The complex cone of a point ``P`` is ``M(P) = W^T A W`` where ``W`` is the
6x4 matrix with ``P ^ X = W X``.  Its adjugate is ``K(P) P P^T`` for a quartic
``K``: the singularity surface.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import CoincidentError, ContainmentError, DegenerateError, DivisionNotExact
from .linalg import Matrix, det, matmul, rank, transpose
from .poly import MultiPoly, variables
from .projective import (
    KLEIN, KLEIN_PARTNER, PAIRS, PlueckerLine, cross_ratio, line_from_planes, meet_line_plane,
    omega, pluecker_relation, wedge,
)
from .scalar import Scalar, as_scalar, decode_scalar, encode_scalar, sqrt_rational, radicand
from .univariate import _irreducible_factors, exact_roots, polydivmod, squarefree_decomposition

__all__ = [
    "LinearComplex", "QuadraticComplex", "TetrahedralComplex", "Congruence", "Directrices",
    "membership", "wedge_matrix", "complex_cone", "singularity_surface", "tetra_cross_ratio",
    "scaling_action", "congruence_directrices", "diagonal_complex", "restrict_to_line",
    "is_irreducible_over_q", "surface_points_on_line", "rank_certificate", "complex_from_json",
    "complex_to_json", "null_plane",
]


def _vec(v):
    return tuple(as_scalar(x) for x in v)


@dataclass(frozen=True)
class LinearComplex:
    a: tuple

    def __init__(self, a: Sequence):
        a = _vec(a)
        if len(a) != 6 or all(x == 0 for x in a):
            raise ValueError("linear complex needs a non-zero 6-vector")
        object.__setattr__(self, "a", a)

    @property
    def special(self) -> bool:
        return pluecker_relation(self.a) == 0

    def axis(self) -> PlueckerLine:
        if not self.special:
            raise DegenerateError("only a special complex has an axis")
        return PlueckerLine(self.a)

    def contains(self, line) -> bool:
        return omega(self.a, tuple(line)) == 0


def klein_trace(A: Matrix):
    return sum((A[KLEIN_PARTNER[i]][i] for i in range(6)), Fraction(0))


def _normalise(A: Matrix) -> Matrix:
    t = klein_trace(A) / 6
    return [[A[i][j] - t * KLEIN[i][j] for j in range(6)] for i in range(6)]


@dataclass(frozen=True)
class QuadraticComplex:
    """Symmetric 6x6 form on line coordinates, stored Klein-trace free."""

    A: tuple

    def __init__(self, A: Sequence[Sequence]):
        m = [[as_scalar(x) for x in row] for row in A]
        if len(m) != 6 or any(len(r) != 6 for r in m):
            raise ValueError("quadratic complex needs a 6x6 matrix")
        if any(m[i][j] != m[j][i] for i in range(6) for j in range(6)):
            raise ValueError("matrix must be symmetric")
        m = _normalise(m)
        if all(x == 0 for r in m for x in r):
            raise DegenerateError("matrix is a multiple of the Klein form")
        object.__setattr__(self, "A", tuple(tuple(r) for r in m))

    @property
    def matrix(self) -> Matrix:
        return [list(r) for r in self.A]

    def form(self, p) -> Scalar:
        p = tuple(p)
        return sum((p[i] * self.A[i][j] * p[j] for i in range(6) for j in range(6)
                    if self.A[i][j] != 0), Fraction(0))

    def contains(self, line) -> bool:
        return self.form(line) == 0


@dataclass(frozen=True)
class TetrahedralComplex:
    """``mu1 p01 p23 + mu2 p02 p31 + mu3 p03 p12 = 0`` for the coordinate tetrahedron."""

    mu: tuple

    def __init__(self, mu: Sequence):
        mu = _vec(mu)
        if len(mu) != 3:
            raise ValueError("tetrahedral complex needs three coefficients")
        if mu[0] == mu[1] == mu[2]:
            raise DegenerateError("equal coefficients give the whole Klein quadric")
        object.__setattr__(self, "mu", mu)

    @classmethod
    def through(cls, line) -> "TetrahedralComplex":
        """The member of the pencil containing ``line`` (it has cross ratio ``lam``)."""
        lam = tetra_cross_ratio(line)
        # (mu3 - mu1) / (mu2 - mu1) = lam with mu1 = 0, mu2 = 1
        return cls((0, 1, lam))

    @property
    def cross_ratio(self) -> Scalar:
        m1, m2, m3 = self.mu
        if m2 == m1:
            raise DegenerateError("cross ratio is infinite for mu1 == mu2")
        return (m3 - m1) / (m2 - m1)

    def quadratic(self) -> QuadraticComplex:
        A = [[Fraction(0)] * 6 for _ in range(6)]
        for k, m in enumerate(self.mu):
            A[k][k + 3] = A[k + 3][k] = m / 2
        return QuadraticComplex(A)

    def contains(self, line) -> bool:
        p = tuple(line)
        return self.mu[0] * p[0] * p[3] + self.mu[1] * p[1] * p[4] + self.mu[2] * p[2] * p[5] == 0


@dataclass(frozen=True)
class Congruence:
    """Lines common to two independent linear complexes."""

    first: LinearComplex
    second: LinearComplex

    def __post_init__(self):
        if rank([list(self.first.a), list(self.second.a)]) < 2:
            raise DegenerateError("complexes of a congruence must be independent")

    def contains(self, line) -> bool:
        return self.first.contains(line) and self.second.contains(line)

    def line_through(self, X) -> PlueckerLine:
        """The congruence line through a point off the directrices."""
        try:
            return line_from_planes(null_plane(self.first, X), null_plane(self.second, X))
        except CoincidentError:
            raise DegenerateError("point lies on a directrix; infinitely many lines") from None


def membership(K, line) -> bool:
    return K.contains(line)


def null_plane(K: LinearComplex, X) -> list:
    """Plane of the lines of ``K`` through ``X`` (every line of K through X lies in it)."""
    X = _vec(X)
    out = []
    for j in range(4):
        e = [Fraction(int(i == j)) for i in range(4)]
        out.append(omega(K.a, wedge(X, e)))
    return out


# -- complex cone and singularity surface ------------------------------------------

def wedge_matrix(P) -> Matrix:
    """6x4 matrix ``W`` with ``P ^ X = W X``."""
    cols = []
    for j in range(4):
        e = [0] * 4
        e[j] = 1
        cols.append([P[a] * e[b] - P[b] * e[a] for a, b in PAIRS])
    return [[cols[j][r] for j in range(4)] for r in range(6)]


def _as_quadratic(K) -> QuadraticComplex:
    if isinstance(K, TetrahedralComplex):
        return K.quadratic()
    return K


def complex_cone(K, P) -> Matrix:
    """Symmetric 4x4 matrix ``M(P)``: X lies on the cone iff ``X^T M X = 0``."""
    A = _as_quadratic(K).matrix
    W = wedge_matrix(P)
    return matmul(matmul(transpose(W), A), W)


def _chart_det(M, skip):
    keep = [i for i in range(4) if i != skip]
    return det([[M[i][j] for j in keep] for i in keep])


def singularity_surface(K) -> MultiPoly:
    """Quartic ``K(P)`` with ``K(P) = 0`` iff the complex cone of P degenerates.

    In the chart ``x0 != 0`` the principal minor of ``M(P)`` omitting row and
    column 0 is ``x0^2 K``; the division is exact and the chart ``x3 != 0``
    gives the same quartic.
    """
    x = variables(4)
    M = complex_cone(K, x)
    results = []
    for chart in (0, 3):
        minor = _chart_det(M, chart)
        if minor.is_zero():
            raise DegenerateError("singularity surface vanishes identically; complex is degenerate")
        try:
            results.append(minor.divexact(x[chart] * x[chart]))
        except DivisionNotExact:
            results.append(None)
    if results[0] is None and results[1] is None:
        raise DivisionNotExact("no chart gave an exact quotient")
    if results[0] is None or results[1] is None:
        return results[0] if results[0] is not None else results[1]
    if results[0] != results[1]:
        raise DivisionNotExact("chart quotients disagree")
    return results[0]


def diagonal_complex(lams: Sequence = (1, 2, 3, 4, 5, 6)) -> QuadraticComplex:
    """Klein's normal form ``sum lam_k x_k^2`` written over the rationals.

    With ``y = (p01 + p23, p01 - p23, p02 + p31, p02 - p31, p03 + p12, p03 - p12)``
    the Klein form is ``(y1^2 - y2^2 + y3^2 - y4^2 + y5^2 - y6^2) / 2`` and the
    complex is ``sum eps_k lam_k y_k^2`` with ``eps = (+, -, +, -, +, -)``.
    """
    lams = [as_scalar(v) for v in lams]
    if len(lams) != 6:
        raise ValueError("need six eigenvalues")
    ys = []
    for k in range(3):
        plus = [Fraction(0)] * 6
        minus = [Fraction(0)] * 6
        plus[k] = plus[k + 3] = Fraction(1)
        minus[k], minus[k + 3] = Fraction(1), Fraction(-1)
        ys += [plus, minus]
    A = [[Fraction(0)] * 6 for _ in range(6)]
    for idx, (lam, y) in enumerate(zip(lams, ys)):
        s = lam if idx % 2 == 0 else -lam
        for i in range(6):
            for j in range(6):
                A[i][j] += s * y[i] * y[j]
    return QuadraticComplex(A)


# -- restriction to lines and certificates ----------------------------------------

def restrict_to_line(F: MultiPoly, P, Q) -> list:
    """Coefficients (constant first) of ``t -> F(P + t Q)``."""
    t = MultiPoly.var(0, 1)
    sub = [MultiPoly.const(P[i], 1) + t * Q[i] for i in range(4)]
    g = F.subs(sub)
    return g.univariate_coeffs() if not g.is_zero() else []


def is_irreducible_over_q(F: MultiPoly, rng: Optional[random.Random] = None, tries: int = 20) -> bool:
    """Sufficient test: some rational line cuts F in an irreducible binary form of full degree."""
    rng = rng or random.Random(0)
    deg = F.degree()
    for _ in range(tries):
        P = [Fraction(rng.randint(-9, 9)) for _ in range(4)]
        Q = [Fraction(rng.randint(-9, 9)) for _ in range(4)]
        f = restrict_to_line(F, P, Q)
        if len(f) - 1 != deg:
            continue
        parts = squarefree_decomposition(f)
        if len(parts) != 1 or parts[0][1] != 1:
            continue
        factors = _irreducible_factors(f)
        if len(factors) == 1:
            return True
    return False


def surface_points_on_line(F: MultiPoly, P, Q) -> list:
    """Exactly known points of ``F = 0`` on the line ``P + t Q`` (rational or quadratic roots)."""
    f = restrict_to_line(F, P, Q)
    out = []
    if not f:
        raise ContainmentError("line lies on the surface")
    for r in exact_roots(f):
        if r.value is None:
            continue
        out.append([P[i] + r.value * Q[i] for i in range(4)])
    return out


def _minors3(M):
    rows = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    for ri in rows:
        for ci in rows:
            yield det([[M[i][j] for j in ci] for i in ri])


def rank_certificate(K, F: MultiPoly, P, Q) -> List[tuple]:
    """Certify ``rank M(X) <= 2`` at every root of ``F`` along ``P + t Q``.

    Each irreducible factor ``f`` of ``F(P + t Q)`` over Q is checked by
    reducing all 3x3 minors of ``M(P + t Q)`` modulo ``f``, which is exact
    arithmetic in the number field of the root.  Returns ``(factor, ok)``.
    """
    t = MultiPoly.var(0, 1)
    X = [MultiPoly.const(P[i], 1) + t * Q[i] for i in range(4)]
    M = complex_cone(K, X)
    f = restrict_to_line(F, P, Q)
    minors = [m.univariate_coeffs() if not m.is_zero() else [] for m in _minors3(M)]
    out = []
    for sqf, _ in squarefree_decomposition(f):
        sqf = sqf if isinstance(sqf, list) else sqf.univariate_coeffs()
        for g in _irreducible_factors(sqf):
            ok = all(not m or not polydivmod(m, g)[1] for m in minors)
            out.append((tuple(g), ok))
    return out


# -- tetrahedral complex ---------------------------------------------------------------

def tetra_cross_ratio(line) -> Scalar:
    """Cross ratio of the points where the line meets the faces x0, x1, x2, x3 = 0."""
    pts = []
    for k in range(4):
        face = [Fraction(int(i == k)) for i in range(4)]
        try:
            pts.append(meet_line_plane(line, face))
        except ContainmentError:
            raise DegenerateError(f"line lies in the face x{k} = 0") from None
    if len(set(pts)) < 4:
        raise DegenerateError("line passes through a vertex of the tetrahedron")
    return cross_ratio(*pts)


def scaling_action(alpha, beta, gamma, line) -> PlueckerLine:
    """Image of the line under ``diag(alpha, beta, gamma, 1)``."""
    d = (as_scalar(alpha), as_scalar(beta), as_scalar(gamma), Fraction(1))
    if any(x == 0 for x in d):
        raise ValueError("scaling factors must be non-zero")
    p = tuple(line)
    return PlueckerLine([p[k] * d[i] * d[j] for k, (i, j) in enumerate(PAIRS)])


# -- directrices of a linear congruence --------------------------------------------

@dataclass(frozen=True)
class Directrices:
    lines: tuple
    doubled: bool
    delta: int

    def __iter__(self):
        return iter(self.lines)


def congruence_directrices(c: Congruence) -> Directrices:
    """Axes of the special complexes in the pencil ``s a + t a'``.

    The pencil's self-pairing is the binary form
    ``rel(a) s^2 + omega(a, a') s t + rel(a') t^2``; equal roots give one
    doubled directrix.
    """
    a, b = c.first.a, c.second.a
    A, B, C = pluecker_relation(a), omega(a, b), pluecker_relation(b)
    if A == 0 and B == 0 and C == 0:
        raise DegenerateError("every complex of the pencil is special")
    disc = B * B - 4 * A * C

    def line_at(s, t):
        return PlueckerLine([s * x + t * y for x, y in zip(a, b)])

    if A != 0:
        # members v a + b with A v^2 + B v + C = 0
        root = sqrt_rational(disc)
        v1 = (-B + root) / (2 * A)
        v2 = (-B - root) / (2 * A)
        lines = (line_at(v1, 1), line_at(v2, 1))
    else:
        # A == 0: t = 0 is a root (a itself); the other from B s + C t = 0
        lines = (line_at(1, 0), line_at(-C, B) if B != 0 else line_at(1, 0))
    doubled = disc == 0
    return Directrices(lines, doubled, radicand(sqrt_rational(disc)) or 1)


# -- json ----------------------------------------------------------------------------------

def complex_to_json(K) -> dict:
    if isinstance(K, LinearComplex):
        return {"linear": [encode_scalar(x) for x in K.a]}
    if isinstance(K, TetrahedralComplex):
        return {"tetrahedral": [encode_scalar(x) for x in K.mu]}
    return {"quadratic": [encode_scalar(K.A[i][j]) for i in range(6) for j in range(i, 6)]}


def complex_from_json(obj: dict):
    if "linear" in obj:
        return LinearComplex([decode_scalar(x) for x in obj["linear"]])
    if "tetrahedral" in obj:
        return TetrahedralComplex([decode_scalar(x) for x in obj["tetrahedral"]])
    if "quadratic" in obj:
        vals = [decode_scalar(x) for x in obj["quadratic"]]
        if len(vals) != 21:
            raise ValueError("quadratic complex needs 21 upper-triangle entries")
        A = [[Fraction(0)] * 6 for _ in range(6)]
        it = iter(vals)
        for i in range(6):
            for j in range(i, 6):
                A[i][j] = A[j][i] = next(it)
        return QuadraticComplex(A)
    raise ValueError("unknown complex encoding")
