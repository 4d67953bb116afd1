import itertools
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra import numpy as hnp

from linegeom import _kernels
from linegeom.complexes import diagonal_complex, singularity_surface
from linegeom.numeric import CompiledPoly

F = CompiledPoly(singularity_surface(diagonal_complex()))
EXPS = np.ascontiguousarray(F.exps, dtype=np.int64)

finite = st.floats(-3, 3, allow_nan=False)


@given(hnp.arrays(np.float64, (7, 4), elements=finite), hnp.arrays(np.float64, (7, 4), elements=finite))
def test_eval_poly_backends_agree(re, im):
    pts = re + 1j * im
    coeffs = np.ascontiguousarray(F.coeffs, dtype=np.complex128)
    a = _kernels.eval_poly_numba(EXPS, coeffs, pts)
    b = _kernels.eval_poly_numpy(EXPS, coeffs, pts)
    assert np.allclose(a, b, rtol=1e-13, atol=1e-12)


def test_eval_poly_real_points():
    pts = np.random.default_rng(1).normal(size=(50, 4))
    coeffs = np.ascontiguousarray(F.coeffs.real, dtype=np.float64)
    assert np.allclose(_kernels.eval_poly_numba(EXPS, coeffs, pts), _kernels.eval_poly_numpy(EXPS, coeffs, pts),
                       rtol=1e-13, atol=1e-13)


def test_subset_rank_backends_agree():
    rng = np.random.default_rng(2)
    P = rng.normal(size=(10, 4)) + 1j * rng.normal(size=(10, 4))
    P[9] = P[0] + 2 * P[1] - P[2]      # a rank-deficient 6-subset exists
    subs = np.array(list(itertools.combinations(range(10), 4)), dtype=np.int64)
    a = _kernels.subset_rank_ratio_numba(P, subs)
    b = _kernels.subset_rank_ratio_numpy(P, subs)
    assert np.allclose(a, b, atol=1e-13)
    assert a.min() < 1e-12


@pytest.mark.parametrize("flag, want", [("0", "numpy"), ("1", "numba")])
def test_environment_flag_selects_backend(flag, want):
    env = dict(os.environ, LINEGEOM_NUMBA=flag)
    out = subprocess.run([sys.executable, "-c", "from linegeom import _kernels; print(_kernels.backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == want


def test_numpy_backend_finds_same_nodes():
    code = ("from linegeom.complexes import diagonal_complex, singularity_surface\n"
            "from linegeom.kummer import find_nodes\n"
            "print(len(find_nodes(singularity_surface(diagonal_complex()))))")
    env = dict(os.environ, LINEGEOM_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "16"
