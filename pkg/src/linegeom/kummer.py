"""Nodes, tropes and the (16,6) configuration of Kummer quartics.

Node finding is numeric: a complex Gauss-Newton iteration on ``grad F = 0``
in a random affine chart, started from many seeded random points, followed
by deduplication in the canonical chart (largest coordinate equal to 1,
radius 1e-6).  Residuals are measured for ``F`` scaled to unit largest
coefficient at ``x`` with ``|x| = 1``.

The Fresnel wave surface with parameters ``a2 > b2 > c2 > 0`` is

    (a2 x^2 + b2 y^2 + c2 z^2)(x^2 + y^2 + z^2)
      - (a2 (b2 + c2) x^2 + b2 (c2 + a2) y^2 + c2 (a2 + b2) z^2) w^2
      + a2 b2 c2 w^4 = 0

in coordinates ``(x, y, z, w) = (x0, x1, x2, x3)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import numpy as np

from . import _kernels
from .errors import DegenerateError, PositiveDimensionalLocus, PreconditionError
from .numeric import CompiledPoly, dedupe, gauss_newton, normalise_projective, unit
from .poly import MultiPoly, variables
from .scalar import as_scalar

__all__ = [
    "class_formula", "NodeResult", "find_nodes", "Trope", "find_tropes", "KummerSurface",
    "ConfigurationCertificate", "configuration_check", "FresnelSurface", "fresnel_surface",
    "fresnel_real_nodes", "fresnel_circles", "kummer_from_complex", "fermat_quartic",
]

RESIDUAL_TOL = 1e-12
DEDUPE_RADIUS = 1e-6


def class_formula(n: int, d: int) -> int:
    """Class ``n (n - 1)^2 - 2 d`` of a surface of order n with d nodes."""
    if n < 2 or d < 0:
        raise ValueError("need n >= 2 and d >= 0")
    return n * (n - 1) ** 2 - 2 * d


# -- nodes ---------------------------------------------------------------------------------

@dataclass
class NodeResult:
    points: np.ndarray          # (k, 4) complex, canonical chart
    residuals: np.ndarray       # max(|F|, |grad F|) at the unit representative
    hessian_ranks: np.ndarray
    starts: int
    converged: int

    def __len__(self):
        return len(self.points)

    @property
    def is_real(self) -> np.ndarray:
        return np.all(np.abs(self.points.imag) < 1e-9, axis=1)

    @property
    def real_points(self) -> np.ndarray:
        return self.points[self.is_real].real

    def class_check(self, order: int = 4) -> int:
        return class_formula(order, len(self.points))


class _Derivs:
    def __init__(self, F: MultiPoly):
        self.F = CompiledPoly(F)
        s = self.F.scale
        g = F.gradient()
        self.grad = [CompiledPoly(p, s) for p in g]
        self.hess = [[CompiledPoly(gi.diff(j), s) for j in range(F.arity)] for gi in g]

    def residual(self, x) -> np.ndarray:
        xu = unit(x)
        fv = np.abs(self.F(xu))
        gv = np.sqrt(sum(np.abs(g(xu)) ** 2 for g in self.grad))
        return np.maximum(fv, gv)

    def hessian(self, x) -> np.ndarray:
        xu = unit(x)
        n = len(self.hess)
        H = np.empty((len(xu), n, n), dtype=np.complex128)
        for i in range(n):
            for j in range(n):
                H[:, i, j] = self.hess[i][j](xu)
        return H


def _hessian_rank(H, tol=1e-6) -> np.ndarray:
    sv = np.linalg.svd(H, compute_uv=False)
    return np.sum(sv > tol * sv[:, :1], axis=1)


def _on_line(points, line_pts, tol=1e-8) -> np.ndarray:
    if line_pts is None:
        return np.zeros(len(points), dtype=bool)
    L = unit(np.asarray(line_pts, dtype=np.complex128))
    out = []
    for p in unit(points):
        sv = np.linalg.svd(np.vstack([L, p]), compute_uv=False)
        out.append(sv[-1] < tol)
    return np.array(out, dtype=bool)


def find_nodes(F: MultiPoly, starts: int = 200, seed: int = 0, exclude_line=None,
               max_isolated: int = 16, max_rounds: int = 12, patience: int = 2) -> NodeResult:
    """Isolated singular points of the quartic surface ``F = 0``.

    Each round draws ``starts`` complex starting points and a fresh random
    chart; rounds continue until ``patience`` consecutive rounds add no new
    point.  ``exclude_line`` (two spanning points) removes solutions on a
    known singular line.  Raises :class:`PositiveDimensionalLocus` when the
    solutions do not look isolated (several distinct points with Hessian rank
    at most 2, or more than ``max_isolated`` points).
    """
    if F.arity != 4 or not F.is_homogeneous():
        raise ValueError("find_nodes needs a homogeneous form in four variables")
    D = _Derivs(F)
    rng = np.random.default_rng(seed)
    pts = np.zeros((0, 4), dtype=np.complex128)
    converged = 0
    quiet = 0
    rounds = 0
    while rounds < max_rounds and quiet < patience:
        rounds += 1
        chart = rng.normal(size=4) + 1j * rng.normal(size=4)
        x0 = rng.normal(size=(starts, 4)) + 1j * rng.normal(size=(starts, 4))
        x = gauss_newton(D.grad, D.hess, x0, chart)
        res = D.residual(x)
        good = x[res < 1e-8]
        converged += len(good)
        if D.F.real and len(good):
            good = np.vstack([good, good.conj()])
        before = len(pts)
        if len(good):
            pts = dedupe(np.vstack([pts, good]), DEDUPE_RADIUS)
        quiet = quiet + 1 if len(pts) == before else 0
        if len(pts) > 4 * max_isolated:
            break
    pts = pts[~_on_line(pts, exclude_line)] if len(pts) else pts
    if len(pts):
        # polish in the chart through each point
        polished = []
        for p in pts:
            h = np.conj(p) / np.vdot(p, p)
            polished.append(gauss_newton(D.grad, D.hess, p[None, :], h, iters=8)[0])
        pts = normalise_projective(np.array(polished))
        ranks = _hessian_rank(D.hessian(pts))
    else:
        ranks = np.zeros(0, dtype=int)
    if np.sum(ranks <= 2) >= 2 or len(pts) > max_isolated:
        raise PositiveDimensionalLocus(
            f"singular locus is not isolated ({len(pts)} solutions, {int(np.sum(ranks <= 2))} with Hessian rank <= 2)")
    residuals = D.residual(pts) if len(pts) else np.zeros(0)
    order = _canonical_order(pts)
    return NodeResult(pts[order], residuals[order], ranks[order], starts * rounds, converged)


def _canonical_order(pts):
    if not len(pts):
        return np.zeros(0, dtype=int)
    keys = [tuple(np.round(np.r_[np.abs(p.imag).max() > 1e-9, p.real, p.imag], 8)) for p in pts]
    return np.array(sorted(range(len(pts)), key=lambda i: keys[i]), dtype=int)


# -- tropes ------------------------------------------------------------------------------------

@dataclass
class Trope:
    plane: np.ndarray          # unit covector
    nodes: tuple               # indices of nodes on the plane
    residual: float            # |F|_plane - c Q^2| / |F|_plane|
    conic: np.ndarray          # 3x3 symmetric contact conic in the frame
    frame: np.ndarray          # (3, 4) frame points


def _conic_rows(y):
    return np.stack([y[:, 0] ** 2, y[:, 0] * y[:, 1], y[:, 0] * y[:, 2],
                     y[:, 1] ** 2, y[:, 1] * y[:, 2], y[:, 2] ** 2], axis=1)


def _conic_matrix(c):
    return np.array([[c[0], c[1] / 2, c[2] / 2],
                     [c[1] / 2, c[3], c[4] / 2],
                     [c[2] / 2, c[4] / 2, c[5]]])


def _plane_frame(u):
    _, _, vh = np.linalg.svd(u[None, :])
    return vh[1:].conj()


def square_residual(Fc: CompiledPoly, frame, conic, rng) -> float:
    y = rng.normal(size=(40, 3)) + 1j * rng.normal(size=(40, 3))
    X = y @ frame
    f = Fc(X)
    q = np.einsum("ni,ij,nj->n", y, conic, y) ** 2
    c = np.vdot(q, f) / np.vdot(q, q)
    return float(np.linalg.norm(f - c * q) / max(np.linalg.norm(f), 1e-300))


def fit_contact_conic(frame, node_pts):
    y = np.linalg.lstsq(frame.T, np.asarray(node_pts).T, rcond=None)[0].T
    _, sv, vh = np.linalg.svd(_conic_rows(y))
    return _conic_matrix(vh[-1].conj()), sv


def find_tropes(F: MultiPoly, nodes, rank_tol: float = 1e-7, incidence_tol: float = 1e-7,
                square_tol: float = 1e-9, seed: int = 0) -> List[Trope]:
    """Planes through six nodes on which ``F`` restricts to a perfect square."""
    pts = nodes.points if isinstance(nodes, NodeResult) else np.asarray(nodes)
    if len(pts) < 6:
        raise PreconditionError("need at least six nodes to look for tropes")
    P = unit(np.asarray(pts, dtype=np.complex128))
    subs = np.array(list(itertools.combinations(range(len(P)), 6)), dtype=np.int64)
    ratio = _kernels.subset_rank_ratio(P, subs)
    Fc = CompiledPoly(F)
    rng = np.random.default_rng(seed)
    tropes: List[Trope] = []
    for s in subs[ratio < rank_tol]:
        _, _, vh = np.linalg.svd(P[s])
        u = vh[-1].conj()
        u = u / u[np.argmax(np.abs(u))]
        u = u / np.linalg.norm(u)
        on = tuple(int(i) for i in np.nonzero(np.abs(P @ u) < incidence_tol)[0])
        if any(set(on) == set(t.nodes) for t in tropes):
            continue
        frame = _plane_frame(u)
        conic, _ = fit_contact_conic(frame, P[list(on)])
        r = square_residual(Fc, frame, conic, rng)
        if r < square_tol:
            tropes.append(Trope(u, on, r, conic, frame))
    return tropes


# -- configuration ----------------------------------------------------------------------------

@dataclass
class KummerSurface:
    F: MultiPoly
    nodes: Optional[NodeResult] = None
    tropes: List[Trope] = field(default_factory=list)

    def incidence(self) -> np.ndarray:
        n = len(self.nodes) if self.nodes is not None else 0
        m = np.zeros((n, len(self.tropes)), dtype=np.int8)
        for j, t in enumerate(self.tropes):
            for i in t.nodes:
                m[i, j] = 1
        return m


@dataclass
class ConfigurationCertificate:
    ok: bool
    row_sums: list
    col_sums: list
    offending: list       # (kind, index, sum) for sums != 6
    incidence: np.ndarray

    def to_json(self) -> dict:
        return {"ok": self.ok, "row_sums": self.row_sums, "col_sums": self.col_sums,
                "offending": self.offending, "incidence": self.incidence.tolist()}


def configuration_check(k: KummerSurface) -> ConfigurationCertificate:
    """Certify the symmetric (16, 6) configuration of nodes and tropes."""
    if k.nodes is None or len(k.nodes) == 0:
        raise PreconditionError("configuration check needs nodes")
    m = k.incidence()
    rows = [int(v) for v in m.sum(axis=1)]
    cols = [int(v) for v in m.sum(axis=0)]
    offending = [("node", i, s) for i, s in enumerate(rows) if s != 6]
    offending += [("trope", j, s) for j, s in enumerate(cols) if s != 6]
    ok = m.shape == (16, 16) and not offending
    if m.shape != (16, 16):
        offending.append(("shape", m.shape[0], m.shape[1]))
    return ConfigurationCertificate(ok, rows, cols, offending, m)


def kummer_from_complex(K, starts: int = 200, seed: int = 0) -> KummerSurface:
    from .complexes import singularity_surface

    F = singularity_surface(K)
    surf = KummerSurface(F)
    surf.nodes = find_nodes(F, starts=starts, seed=seed)
    if len(surf.nodes) >= 6:
        surf.tropes = find_tropes(F, surf.nodes)
    return surf


def fermat_quartic() -> MultiPoly:
    return sum((v ** 4 for v in variables(4)), MultiPoly(4))


# -- Fresnel wave surface ----------------------------------------------------------------------

@dataclass(frozen=True)
class FresnelSurface:
    a2: Fraction
    b2: Fraction
    c2: Fraction
    F: MultiPoly


def _fresnel_poly(a2, b2, c2) -> MultiPoly:
    x, y, z, w = variables(4)
    r2 = x * x + y * y + z * z
    return ((a2 * x * x + b2 * y * y + c2 * z * z) * r2
            - (a2 * (b2 + c2) * x * x + b2 * (c2 + a2) * y * y + c2 * (a2 + b2) * z * z) * w * w
            + a2 * b2 * c2 * w ** 4)


def fresnel_surface(a2, b2, c2) -> FresnelSurface:
    a2, b2, c2 = (as_scalar(v) for v in (a2, b2, c2))
    if a2 == b2 or b2 == c2:
        F = _fresnel_poly(a2, b2, c2)
        x, y, z, w = variables(4)
        r = a2 if a2 == b2 else c2
        sphere = x * x + y * y + z * z - r * w * w
        err = DegenerateError("uniaxial parameters: the wave surface splits into a sphere and a spheroid")
        err.factors = (sphere, F.divexact(sphere))
        raise err
    if not (a2 > b2 > c2 > 0):
        raise PreconditionError("Fresnel parameters must satisfy a2 > b2 > c2 > 0")
    return FresnelSurface(a2, b2, c2, _fresnel_poly(a2, b2, c2))


def fresnel_real_nodes(f: FresnelSurface, starts: int = 200, seed: int = 0) -> NodeResult:
    """All nodes of the wave surface; ``.real_points`` are the four real ones."""
    return find_nodes(f.F, starts=starts, seed=seed)


def _real_plane(u, tol=1e-9):
    u = u / u[np.argmax(np.abs(u))]
    if np.max(np.abs(u.imag)) > tol:
        return None
    return u.real


def fresnel_circles(f: FresnelSurface, nodes: Optional[NodeResult] = None, tol: float = 1e-8):
    """Real tropes of the wave surface and whether each contact conic is a circle.

    A plane conic is a circle when, written in an orthonormal frame of its
    (affine) plane, its quadratic part is a multiple of the identity.
    Returns a list of ``(plane, is_circle, defect)``.
    """
    nodes = nodes or fresnel_real_nodes(f)
    tropes = find_tropes(f.F, nodes)
    out = []
    P = unit(nodes.points)
    for t in tropes:
        u = _real_plane(t.plane)
        if u is None:
            continue
        n, d = u[:3], u[3]
        if np.linalg.norm(n) < 1e-12:
            continue
        _, _, vh = np.linalg.svd(n[None, :])
        e1, e2 = vh[1], vh[2]
        p0 = -d * n / np.dot(n, n)
        frame = np.array([np.r_[e1, 0.0], np.r_[e2, 0.0], np.r_[p0, 1.0]], dtype=np.complex128)
        conic, _ = fit_contact_conic(frame, P[list(t.nodes)])
        conic = conic / conic[np.unravel_index(np.argmax(np.abs(conic)), conic.shape)]
        scale = max(abs(conic[0, 0]), abs(conic[1, 1]))
        defect = float(max(abs(conic[0, 1]), abs(conic[0, 0] - conic[1, 1])) / scale)
        out.append((u, defect < tol, defect))
    return out
