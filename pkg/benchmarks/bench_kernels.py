"""Compare the numba kernels with their numpy counterparts.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends are called directly, so the LINEGEOM_NUMBA flag does not
matter here.  The first numba call (compilation or cache load) is timed
separately.
"""
import argparse
import itertools
import time

import numpy as np

from linegeom import _kernels
from linegeom.complexes import diagonal_complex, singularity_surface
from linegeom.numeric import CompiledPoly


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--points", type=int, default=100_000)
    args = ap.parse_args()
    rng = np.random.default_rng(0)

    # kummer quartic on a batch of complex points (the Newton inner loop)
    f = CompiledPoly(singularity_surface(diagonal_complex()))
    pts = rng.normal(size=(args.points, 4)) + 1j * rng.normal(size=(args.points, 4))
    exps = np.ascontiguousarray(f.exps, dtype=np.int64)
    coeffs = np.ascontiguousarray(f.coeffs, dtype=np.complex128)

    t0 = time.perf_counter()
    a = _kernels.eval_poly_numba(exps, coeffs, pts)
    first = time.perf_counter() - t0
    b = _kernels.eval_poly_numpy(exps, coeffs, pts)
    err = float(np.max(np.abs(a - b)) / np.max(np.abs(b)))
    tn = best_of(lambda: _kernels.eval_poly_numba(exps, coeffs, pts), args.repeat)
    tp = best_of(lambda: _kernels.eval_poly_numpy(exps, coeffs, pts), args.repeat)
    print(f"eval_poly  {args.points} pts  numba {tn:.4f}s (first call {first:.2f}s)  "
          f"numpy {tp:.4f}s  ratio {tp / tn:.1f}x  rel.diff {err:.1e}")

    # rank screen over all 6-subsets of 16 points
    P = rng.normal(size=(16, 4)) + 1j * rng.normal(size=(16, 4))
    subs = np.array(list(itertools.combinations(range(16), 6)), dtype=np.int64)
    t0 = time.perf_counter()
    a = _kernels.subset_rank_ratio_numba(P, subs)
    first = time.perf_counter() - t0
    b = _kernels.subset_rank_ratio_numpy(P, subs)
    err = float(np.max(np.abs(a - b)))
    tn = best_of(lambda: _kernels.subset_rank_ratio_numba(P, subs), args.repeat)
    tp = best_of(lambda: _kernels.subset_rank_ratio_numpy(P, subs), args.repeat)
    print(f"subset svd {len(subs)} subsets  numba {tn:.4f}s (first call {first:.2f}s)  "
          f"numpy {tp:.4f}s  ratio {tp / tn:.1f}x  abs.diff {err:.1e}")


if __name__ == "__main__":
    main()
