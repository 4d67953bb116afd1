"""Floating-point hot loops, compiled with numba when available.

Set ``LINEGEOM_NUMBA=0`` to force the vectorised numpy implementations
(useful for debugging and for the benchmark in ``benchmarks/``).  Both
variants compute the same thing; tests compare them.
"""
from __future__ import annotations

import os

import numpy as np

__all__ = ["USE_NUMBA", "eval_poly", "eval_poly_numpy", "eval_poly_numba", "subset_rank_ratio",
           "subset_rank_ratio_numpy", "subset_rank_ratio_numba", "backend"]


def _numba_enabled() -> bool:
    if os.environ.get("LINEGEOM_NUMBA", "1").strip().lower() in ("0", "false", "no", "off"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USE_NUMBA = _numba_enabled()


def numba_njit(func):
    """``numba.njit(cache=True)`` if numba is importable, else the plain function."""
    try:
        import numba
    except ImportError:
        return func
    return numba.njit(cache=True)(func)


# -- polynomial evaluation -------------------------------------------------------------

@numba_njit
def eval_poly_numba(exps, coeffs, pts):
    n = pts.shape[0]
    m = exps.shape[0]
    k = exps.shape[1]
    out = np.zeros_like(pts[:, 0])
    for i in range(n):
        acc = out[i]
        for j in range(m):
            term = coeffs[j]
            for v in range(k):
                e = exps[j, v]
                x = pts[i, v]
                for _ in range(e):
                    term = term * x
            acc += term
        out[i] = acc
    return out


def eval_poly_numpy(exps, coeffs, pts):
    if exps.shape[0] == 0:
        return np.zeros(pts.shape[0], dtype=pts.dtype)
    deg = int(exps.max()) if exps.size else 0
    # powers[p, i, v] = pts[i, v] ** p
    powers = np.empty((deg + 1,) + pts.shape, dtype=pts.dtype)
    powers[0] = 1
    for p in range(1, deg + 1):
        powers[p] = powers[p - 1] * pts
    out = np.zeros(pts.shape[0], dtype=pts.dtype)
    cols = np.arange(pts.shape[1])
    for j in range(exps.shape[0]):
        out += coeffs[j] * np.prod(powers[exps[j], :, cols], axis=0)
    return out


def eval_poly(exps, coeffs, pts):
    """Evaluate ``sum_j coeffs[j] * prod_v pts[:, v] ** exps[j, v]``.

    ``coeffs`` is cast to the dtype of ``pts`` (float64 or complex128).
    """
    pts = np.ascontiguousarray(pts)
    coeffs = np.ascontiguousarray(coeffs, dtype=pts.dtype)
    exps = np.ascontiguousarray(exps, dtype=np.int64)
    if USE_NUMBA:
        return eval_poly_numba(exps, coeffs, pts)
    return eval_poly_numpy(exps, coeffs, pts)


# -- rank screen for point subsets -------------------------------------------------------

@numba_njit
def subset_rank_ratio_numba(points, subsets):
    """``sigma_min / sigma_max`` of each stacked subset matrix."""
    m = subsets.shape[0]
    r = subsets.shape[1]
    out = np.empty(m)
    for s in range(m):
        block = np.empty((r, points.shape[1]), dtype=points.dtype)
        for i in range(r):
            block[i] = points[subsets[s, i]]
        _, sv, _ = np.linalg.svd(block, False)
        out[s] = sv[-1] / sv[0]
    return out


def subset_rank_ratio_numpy(points, subsets):
    blocks = points[subsets]
    sv = np.linalg.svd(blocks, compute_uv=False)
    return sv[:, -1] / sv[:, 0]


def subset_rank_ratio(points, subsets):
    points = np.ascontiguousarray(points)
    subsets = np.ascontiguousarray(subsets, dtype=np.int64)
    if USE_NUMBA:
        return subset_rank_ratio_numba(points, subsets)
    return subset_rank_ratio_numpy(points, subsets)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
