"""Lie's line-sphere correspondence over Q(i).

Oriented spheres (centre ``m``, signed radius ``r``) are points
``s = (1, |m|^2 - r^2, m, r)`` of the Lie quadric for the form

    B(s, s') = (s0 s1' + s1 s0') / 2 - s2 s2' - s3 s3' - s4 s4' + s5 s5'

and two spheres touch (with matching orientation) iff ``B(s, s') = 0``.
The Klein form has signature (3, 3) and ``B`` has (2, 4), so no real
linear map carries one onto the other; one square root of -1 suffices.
The map ``M`` built here satisfies ``M^T L M = K`` exactly, i.e.
``B(M p, M q) = omega(p, q)``: lines that meet go to spheres that touch.

Such an ``M`` is only fixed up to the orthogonal group of ``B``.  The
classical choice sends the lines of one distinguished linear complex to
point spheres (radius zero); that normalization is not imposed here, so
lines of a linear complex generally map to spheres of nonzero radius.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .errors import CoincidentError, DegenerateError, PreconditionError
from .linalg import matmul, matvec, transpose
from .poly import MultiPoly, variables
from .projective import KLEIN, PlueckerLine, omega, points_on_line
from .scalar import I, as_scalar, encode_scalar
from .steiner import fit_hypersurface

__all__ = [
    "LIE", "OrientedSphere", "lie_pairing", "LineSphereMap", "build_line_sphere_map",
    "line_to_sphere", "sphere_to_line", "Regulus", "regulus_through", "opposite_regulus",
    "contact_point", "CyclideCertificate", "cyclide_certificate", "cyclide_check",
    "torus_families",
]

_h = Fraction(1, 2)
LIE = [
    [0, _h, 0, 0, 0, 0],
    [_h, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0],
    [0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 1],
]
LIE = [[Fraction(x) for x in row] for row in LIE]


def lie_pairing(s, t):
    return ((s[0] * t[1] + s[1] * t[0]) * _h - s[2] * t[2] - s[3] * t[3] - s[4] * t[4]
            + s[5] * t[5])


@dataclass(frozen=True)
class OrientedSphere:
    center: tuple
    radius: object

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(as_scalar(x) for x in self.center))
        object.__setattr__(self, "radius", as_scalar(self.radius))

    def lie_vector(self) -> list:
        m = self.center
        r = self.radius
        return [Fraction(1), m[0] * m[0] + m[1] * m[1] + m[2] * m[2] - r * r, m[0], m[1], m[2], r]

    def touches(self, other: "OrientedSphere") -> bool:
        return lie_pairing(self.lie_vector(), other.lie_vector()) == 0

    def to_json(self) -> dict:
        return {"center": [encode_scalar(x) for x in self.center], "radius": encode_scalar(self.radius)}


@dataclass(frozen=True)
class LineSphereMap:
    M: list         # 6x6 over Q(i), Pluecker -> Lie
    Minv: list
    kappa: Fraction

    def pairing_defect(self, p, q):
        """``B(M p, M q) - kappa omega(p, q)`` (exactly zero)."""
        return lie_pairing(matvec(self.M, list(p)), matvec(self.M, list(q))) - self.kappa * omega(p, q)


def build_line_sphere_map() -> LineSphereMap:
    """Compose the two diagonalisations with a Gaussian permutation.

    Klein side: on each pair ``(x, y) = (p_ij, p_kl)`` put ``u = x + y/2``,
    ``v = x - y/2`` so that ``2 x y = u^2 - v^2``.  Lie side: ``u = (s0+s1)/2``,
    ``v = (s0-s1)/2`` gives ``s0 s1 = u^2 - v^2``.  The diagonal forms are
    ``(+,-,+,-,+,-)`` and ``(+,-,-,-,-,+)``; one ``+`` is sent to a ``-`` slot
    times ``i``.
    """
    n = 6
    zero = Fraction(0)
    # P_K: diagonal Klein coords w -> Pluecker p
    PK = [[zero] * n for _ in range(n)]
    for pair in range(3):
        x, y = pair, pair + 3
        u, v = 2 * pair, 2 * pair + 1
        PK[x][u] = _h
        PK[x][v] = _h
        PK[y][u] = Fraction(1)
        PK[y][v] = Fraction(-1)
    # P_L: diagonal Lie coords z -> s
    PL = [[zero] * n for _ in range(n)]
    PL[0][0] = PL[0][1] = PL[1][0] = Fraction(1)
    PL[1][1] = Fraction(-1)
    for k in range(2, 6):
        PL[k][k] = Fraction(1)
    # T: Klein diagonal index -> Lie diagonal index (with factor)
    perm = {0: (0, 1), 2: (5, 1), 4: (1, I), 1: (2, 1), 3: (3, 1), 5: (4, 1)}
    T = [[zero] * n for _ in range(n)]
    for src, (dst, f) in perm.items():
        T[dst][src] = as_scalar(f)
    PKinv = _inverse_pk()
    M = matmul(PL, matmul(T, PKinv))
    # M^T L M = K gives M^-1 = K M^T L  (K is its own inverse)
    Minv = matmul(KLEIN, matmul(transpose(M), LIE))
    return LineSphereMap(M, Minv, Fraction(1))


def _inverse_pk() -> list:
    # u = x + y/2, v = x - y/2
    n = 6
    out = [[Fraction(0)] * n for _ in range(n)]
    for pair in range(3):
        x, y = pair, pair + 3
        u, v = 2 * pair, 2 * pair + 1
        out[u][x] = Fraction(1)
        out[u][y] = _h
        out[v][x] = Fraction(1)
        out[v][y] = -_h
    return out


def line_to_sphere(lsm: LineSphereMap, line) -> OrientedSphere:
    s = matvec(lsm.M, list(line))
    if s[0] == 0:
        raise DegenerateError("image is a plane (the sphere has its centre at infinity)")
    s = [x / s[0] for x in s]
    return OrientedSphere(tuple(s[2:5]), s[5])


def sphere_to_line(lsm: LineSphereMap, sphere: OrientedSphere) -> PlueckerLine:
    return PlueckerLine(matvec(lsm.Minv, sphere.lie_vector()))


# -- reguli ---------------------------------------------------------------------------------------

@dataclass(frozen=True)
class Regulus:
    """Lines ``p(t)`` (coordinates quadratic in ``t``) meeting three skew lines."""

    coords: tuple   # six univariate MultiPoly
    directors: tuple

    def __call__(self, t) -> PlueckerLine:
        t = as_scalar(t)
        return PlueckerLine([c([t]) for c in self.coords])


def _check_skew(lines):
    for i in range(3):
        for j in range(i + 1, 3):
            if PlueckerLine(lines[i]) == PlueckerLine(lines[j]):
                raise CoincidentError("regulus needs three distinct lines")
            if omega(lines[i], lines[j]) == 0:
                raise DegenerateError("regulus needs pairwise skew lines")


def regulus_through(l1, l2, l3) -> Regulus:
    """The regulus of transversals to three skew lines.

    For ``X(t) = A + t B`` on ``l1`` the transversal is the meet of the
    planes spanned by ``l2`` and ``l3`` with ``X(t)``.
    """
    _check_skew((l1, l2, l3))
    A, B = points_on_line(l1)
    (t,) = variables(1)
    X = [A[i] + t * B[i] for i in range(4)]
    u = _plane_poly(l2, X)
    v = _plane_poly(l3, X)
    # meet of two planes: dual pluecker coords, then swap to primal order
    from .projective import PAIRS

    dual = [u[a] * v[b] - u[b] * v[a] for a, b in PAIRS]
    # primal p_ij equals dual q_kl for complementary (ij, kl)
    coords = tuple(dual[(k + 3) % 6] for k in range(6))
    return Regulus(coords, (PlueckerLine(l1), PlueckerLine(l2), PlueckerLine(l3)))


def _plane_poly(line, X) -> list:
    """Plane through a line and a polynomial point: coordinates of ``[line]^* X``."""
    from .projective import dual_skew_matrix

    D = dual_skew_matrix(list(line))
    return [sum((D[r][c] * X[c] for c in range(4)), MultiPoly(1)) for r in range(4)]


def opposite_regulus(reg: Regulus, params=(0, 1, -1)) -> Regulus:
    return regulus_through(*(reg(t) for t in params))


# -- cyclide certificate -------------------------------------------------------------------------

def contact_point(s1: OrientedSphere, s2: OrientedSphere) -> list:
    """Point of contact of two touching oriented spheres (affine, 3 coords)."""
    r, q = s1.radius, s2.radius
    if r == q:
        raise DegenerateError("equal radii: the contact point is at infinity")
    return [(q * a - r * b) / (q - r) for a, b in zip(s1.center, s2.center)]


@dataclass
class CyclideCertificate:
    tangencies: int
    tangent_all: bool
    points: list
    quartics: List[MultiPoly]
    leading_ok: bool
    held_out_ok: bool

    @property
    def ok(self) -> bool:
        return self.tangent_all and len(self.quartics) == 1 and self.leading_ok and self.held_out_ok


def _leading_form_ok(F: MultiPoly) -> bool:
    """Terms free of ``x3`` proportional to ``(x0^2 + x1^2 + x2^2)^2``."""
    x0, x1, x2, _ = variables(4)
    target = (x0 ** 2 + x1 ** 2 + x2 ** 2) ** 2
    lead = {e: c for e, c in F.terms.items() if e[3] == 0}
    if not lead:
        return False
    ratio = None
    for e in set(lead) | set(target.terms):
        a = lead.get(e, 0)
        b = target.terms.get(e, 0)
        if b == 0:
            if a != 0:
                return False
            continue
        if ratio is None:
            ratio = a / b
        elif a != ratio * b:
            return False
    return ratio is not None and ratio != 0


def cyclide_certificate(family_a: Sequence[OrientedSphere], family_b: Sequence[OrientedSphere],
                        held_out_every: int = 7, rational: bool = False) -> CyclideCertificate:
    """Check cross tangency and that the contact points lie on a unique quartic
    whose top-degree part is ``(x^2 + y^2 + z^2)^2``."""
    pts = []
    tangent = True
    count = 0
    for A in family_a:
        for Bs in family_b:
            count += 1
            if not A.touches(Bs):
                tangent = False
                continue
            try:
                X = contact_point(A, Bs)
            except DegenerateError:
                continue
            hom = X + [Fraction(1)]
            if hom not in pts:
                pts.append(hom)
    # a quartic meets a circle in 8 points, so every circle needs >= 9 samples
    rest = pts[::held_out_every]
    fit = [p for i, p in enumerate(pts) if i % held_out_every]
    if len(fit) < 34 or not rest:
        raise PreconditionError(f"only {len(pts)} contact points; need at least 35")
    quartics = fit_hypersurface(fit, 4, rational=rational)
    lead = len(quartics) == 1 and _leading_form_ok(quartics[0])
    held = all(q(p) == 0 for q in quartics for p in rest)
    return CyclideCertificate(count, tangent, pts, quartics, lead, held)


def cyclide_check(lsm: LineSphereMap, reg: Regulus, params_a, params_b, held_out_every: int = 7):
    """Cyclide certificate for the sphere images of a regulus and its opposite."""
    opp = opposite_regulus(reg)
    fa = [line_to_sphere(lsm, reg(t)) for t in params_a]
    fb = [line_to_sphere(lsm, opp(t)) for t in params_b]
    return cyclide_certificate(fa, fb, held_out_every)


def torus_families(R, rho, params_a, params_b):
    """Two families of spheres enveloping the ring torus (tube ``rho``, axis distance ``R``).

    The first family is the tube spheres; the second is centred on the axis
    and touches the torus along parallels.  Parameters are rational
    (stereographic) so everything stays exact.
    """
    R, rho = as_scalar(R), as_scalar(rho)
    fa, fb = [], []
    for u in params_a:
        u = as_scalar(u)
        c, s = (1 - u * u) / (1 + u * u), 2 * u / (1 + u * u)
        fa.append(OrientedSphere((R * c, R * s, Fraction(0)), rho))
    for u in params_b:
        u = as_scalar(u)
        if u * u == 1:
            raise DegenerateError("parameter gives a plane")
        fb.append(OrientedSphere((Fraction(0), Fraction(0), -2 * R * u / (1 - u * u)),
                                 rho + R * (1 + u * u) / (1 - u * u)))
    return fa, fb
