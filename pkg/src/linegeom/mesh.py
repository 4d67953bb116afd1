"""Triangle meshes of real affine pieces of implicit surfaces (for viewing).

Marching tetrahedra (six per grid cube) on a float evaluation of the
polynomial in an affine chart (``x3 = 1`` by default).  Vertices are shared along grid edges, so
the mesh is a proper simplicial surface away from the box boundary.
"""
from __future__ import annotations

import warnings
from typing import Tuple

import numpy as np

from .numeric import CompiledPoly
from .poly import MultiPoly

__all__ = ["sample_grid", "marching_tetrahedra", "mesh_surface", "write_obj", "euler_characteristic",
           "boundary_edges"]

# cube corners as (i, j, k) offsets; tetrahedra share the main diagonal 0-7
_CORNERS = np.array([[i, j, k] for i in (0, 1) for j in (0, 1) for k in (0, 1)])
_TETS = ((0, 7, 1, 3), (0, 7, 3, 2), (0, 7, 2, 6), (0, 7, 6, 4), (0, 7, 4, 5), (0, 7, 5, 1))


def sample_grid(F: MultiPoly, lo: float, hi: float, n: int, chart: int = 3) -> Tuple[np.ndarray, np.ndarray]:
    """Values of ``F`` with ``x_chart = 1`` on an ``(n+1)^3`` grid of the other
    three coordinates (in order); returns ``(axis, values)``."""
    if F.arity != 4 or chart not in range(4):
        raise ValueError("need a quaternary form and a chart index in 0..3")
    if n < 2 or not hi > lo:
        raise ValueError("resolution must be >= 2 and the box nondegenerate")
    f = CompiledPoly(F)
    if not f.real:
        raise ValueError("meshing needs real coefficients")
    ax = np.linspace(lo, hi, n + 1)
    grids = np.meshgrid(ax, ax, ax, indexing="ij")
    cols = [g.ravel() for g in grids]
    cols.insert(chart, np.ones(grids[0].size))
    pts = np.stack(cols, axis=1)
    return ax, f(pts).reshape(grids[0].shape)


def marching_tetrahedra(ax: np.ndarray, vals: np.ndarray):
    n = len(ax) - 1
    shape = vals.shape
    cache = {}
    verts = []
    faces = []

    def vid(a, b):
        key = (a, b) if a < b else (b, a)
        got = cache.get(key)
        if got is None:
            ia, ib = np.unravel_index(a, shape), np.unravel_index(b, shape)
            fa, fb = vals[ia], vals[ib]
            t = fa / (fa - fb)
            pa = ax[list(ia)]
            pb = ax[list(ib)]
            verts.append(pa + t * (pb - pa))
            got = cache[key] = len(verts) - 1
        return got

    sign = vals > 0
    # cubes whose corners do not all share a sign
    s = sign.astype(np.int8)
    total = sum(s[i:i + n, j:j + n, k:k + n] for i, j, k in _CORNERS)
    for ci, cj, ck in zip(*np.nonzero((total > 0) & (total < 8))):
        idx = [np.ravel_multi_index((ci + i, cj + j, ck + k), shape) for i, j, k in _CORNERS]
        for tet in _TETS:
            g = [idx[c] for c in tet]
            inside = [v for v in g if sign.flat[v]]
            outside = [v for v in g if not sign.flat[v]]
            if len(inside) in (0, 4):
                continue
            if len(inside) == 1 or len(inside) == 3:
                lone, rest = (inside[0], outside) if len(inside) == 1 else (outside[0], inside)
                faces.append(tuple(vid(lone, r) for r in rest))
            else:
                a, b = inside
                c, d = outside
                q = (vid(a, c), vid(a, d), vid(b, d), vid(b, c))
                faces.append((q[0], q[1], q[2]))
                faces.append((q[0], q[2], q[3]))
    return np.array(verts).reshape(-1, 3), np.array(faces, dtype=np.int64).reshape(-1, 3)


def mesh_surface(F: MultiPoly, lo: float = -2.0, hi: float = 2.0, n: int = 40, chart: int = 3):
    ax, vals = sample_grid(F, lo, hi, n, chart)
    verts, faces = marching_tetrahedra(ax, vals)
    if len(faces) == 0:
        warnings.warn("no sign change in the box: empty mesh", RuntimeWarning, stacklevel=2)
    return verts, faces


def boundary_edges(faces) -> int:
    """Edges used by exactly one triangle (cells cut off by the box)."""
    count = {}
    for a, b, c in faces:
        for u, v in ((a, b), (b, c), (c, a)):
            key = (min(u, v), max(u, v))
            count[key] = count.get(key, 0) + 1
    return sum(1 for k in count.values() if k == 1)


def euler_characteristic(verts, faces) -> int:
    edges = set()
    for a, b, c in faces:
        for u, v in ((a, b), (b, c), (c, a)):
            edges.add((min(u, v), max(u, v)))
    return len(verts) - len(edges) + len(faces)


def write_obj(path, verts, faces) -> None:
    with open(path, "w") as fh:
        for v in verts:
            fh.write("v %.9g %.9g %.9g\n" % tuple(v))
        for f in faces:
            fh.write("f %d %d %d\n" % tuple(int(i) + 1 for i in f))
