"""Floating-point evaluation of exact polynomials and batched Gauss-Newton."""
from __future__ import annotations

from typing import List, Sequence

import numpy as np

from . import _kernels
from .poly import MultiPoly

__all__ = ["CompiledPoly", "compile_polys", "gauss_newton", "normalise_projective", "dedupe"]


class CompiledPoly:
    """Float form of a MultiPoly, scaled so the largest coefficient has modulus 1."""

    def __init__(self, p: MultiPoly, scale: float = None):
        exps, coeffs = p.to_arrays()
        if scale is None:
            scale = float(np.abs(coeffs).max()) if coeffs.size else 1.0
        self.scale = scale
        self.exps = exps.reshape(-1, p.arity)
        self.coeffs = coeffs / scale
        self.arity = p.arity
        self.real = bool(np.all(self.coeffs.imag == 0))

    def __call__(self, pts) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts))
        if np.iscomplexobj(pts) or not self.real:
            return _kernels.eval_poly(self.exps, self.coeffs, pts.astype(np.complex128))
        return _kernels.eval_poly(self.exps, self.coeffs.real.copy(), pts.astype(np.float64))


def compile_polys(polys: Sequence[MultiPoly], scale: float = None) -> List[CompiledPoly]:
    return [CompiledPoly(p, scale) for p in polys]


def normalise_projective(x) -> np.ndarray:
    """Divide each row by its largest-modulus entry (canonical affine chart)."""
    x = np.atleast_2d(x)
    idx = np.argmax(np.abs(x), axis=1)
    return x / x[np.arange(len(x)), idx][:, None]


def unit(x) -> np.ndarray:
    x = np.atleast_2d(x)
    return x / np.linalg.norm(x, axis=1)[:, None]


def gauss_newton(funcs: Sequence[CompiledPoly], jac: Sequence[Sequence[CompiledPoly]], starts,
                 chart, iters: int = 60):
    """Solve ``funcs(x) = 0, chart . x = 1`` from every start simultaneously.

    ``jac[i][j]`` is the derivative of ``funcs[i]`` in ``x_j``.  Returns the
    final iterates (rows).
    """
    x = np.array(starts, dtype=np.complex128)
    chart = np.asarray(chart, dtype=np.complex128)
    x = x / (x @ chart)[:, None]
    n = x.shape[1]
    m = len(funcs)
    for _ in range(iters):
        r = np.empty((len(x), m + 1), dtype=np.complex128)
        J = np.empty((len(x), m + 1, n), dtype=np.complex128)
        for i, f in enumerate(funcs):
            r[:, i] = f(x)
            for j in range(n):
                J[:, i, j] = jac[i][j](x)
        r[:, m] = x @ chart - 1
        J[:, m, :] = chart
        dx = -np.einsum("nij,nj->ni", np.linalg.pinv(J), r)
        x = x + dx
        bad = ~np.all(np.isfinite(x), axis=1)
        if bad.any():
            x[bad] = 1.0
        if np.max(np.abs(dx)) < 1e-15 * max(1.0, float(np.max(np.abs(x)))):
            break
    return x


def dedupe(points, radius: float = 1e-6) -> np.ndarray:
    """Remove repeats (compared in the canonical affine chart)."""
    out = []
    for p in normalise_projective(points):
        if all(np.linalg.norm(p - q) > radius for q in out):
            out.append(p)
    return np.array(out).reshape(len(out), np.atleast_2d(points).shape[1])
