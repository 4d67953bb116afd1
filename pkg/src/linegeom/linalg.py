"""Exact linear algebra on small dense matrices (nested lists).

Rational matrices are cleared to integers row by row and reduced with
fraction-free (Bareiss) elimination; matrices over a quadratic extension are
reduced the same way with exact field division.  Matrices of polynomials use
cofactor expansion, which needs no division at all.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence

from .errors import RankError
from .poly import MultiPoly
from .scalar import Quad, as_scalar, is_rational, quad, radicand, sqrt_rational

Matrix = List[list]

__all__ = [
    "Matrix", "identity", "zeros", "transpose", "matmul", "matvec", "det", "adjugate",
    "rank", "kernel", "echelon", "solve", "rank2_split", "inverse", "symmetric_from_quadratic",
    "quadratic_from_symmetric",
]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def transpose(m: Matrix) -> Matrix:
    return [list(row) for row in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if isinstance(x, MultiPoly) or x != 0:
                    acc = x * y + acc
            out_row.append(acc if not isinstance(acc, int) else Fraction(acc))
        out.append(out_row)
    return out


def matvec(a: Matrix, v: Sequence) -> list:
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            acc = x * y + acc
        out.append(acc if not isinstance(acc, int) else Fraction(acc))
    return out


def _is_poly_matrix(m):
    return any(isinstance(x, MultiPoly) for row in m for x in row)


def _integer_rows(m):
    """Scale each row of a rational matrix to integers (row scaling keeps the kernel)."""
    out = []
    for row in m:
        den = 1
        for x in row:
            den = math.lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def echelon(m: Matrix):
    """Fraction-free row echelon form.

    Returns ``(rows, pivots, sign)`` where ``rows`` is the reduced matrix,
    ``pivots`` the pivot columns and ``sign`` the parity of row swaps.
    """
    rows = [list(r) for r in m]
    if not rows:
        return rows, [], 1
    rational = all(is_rational(as_scalar(x)) for r in rows for x in r)
    if rational:
        rows = _integer_rows(rows)
        one = 1
    elif len({radicand(as_scalar(x)) for r in rows for x in r} - {None}) == 1:
        return _echelon_quadratic_integer(rows)
    else:
        rows = [[as_scalar(x) for x in r] for r in rows]
        one = Fraction(1)
    nr, nc = len(rows), len(rows[0])
    prev = one
    pivots = []
    sign = 1
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nr):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, nc):
                v = p * row[j] - f * prow[j]
                if rational:
                    row[j] = v // prev
                else:
                    row[j] = v / prev
            row[c] = 0 if rational else Fraction(0)
        # rows above the active block keep their entries; rows below were updated
        prev = p
        pivots.append(c)
        r += 1
    # rows below the last pivot that were never touched as pivot rows are zero
    return rows, pivots, sign


def _quad_integer_rows(m, d):
    """Rows over Q(sqrt d) scaled to integer pairs ``(a, b)`` meaning ``a + b sqrt d``."""
    out = []
    for row in m:
        row = [as_scalar(x) for x in row]
        parts = [(x.a, x.b) if isinstance(x, Quad) else (x, Fraction(0)) for x in row]
        den = 1
        for a, b in parts:
            den = math.lcm(den, a.denominator, b.denominator)
        out.append([(int(a * den), int(b * den)) for a, b in parts])
    return out


def _echelon_quadratic_integer(m):
    """Bareiss elimination in Z[sqrt d]; every division is exact there."""
    d = next(x.d for r in m for x in map(as_scalar, r) if isinstance(x, Quad))
    rows = _quad_integer_rows(m, d)
    nr, nc = len(rows), len(rows[0])

    def mul(x, y):
        return (x[0] * y[0] + d * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def div(x, y):
        n = y[0] * y[0] - d * y[1] * y[1]
        a = x[0] * y[0] - d * x[1] * y[1]
        b = x[1] * y[0] - x[0] * y[1]
        return (a // n, b // n)

    prev = (1, 0)
    pivots = []
    sign = 1
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][c] != (0, 0)), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nr):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, nc):
                u, v = mul(p, row[j]), mul(f, prow[j])
                row[j] = div((u[0] - v[0], u[1] - v[1]), prev)
            row[c] = (0, 0)
        prev = p
        pivots.append(c)
        r += 1
    out = [[quad(a, b, d) for a, b in row] for row in rows]
    return out, pivots, sign


def rank(m: Matrix) -> int:
    if not m:
        return 0
    if _is_poly_matrix(m):
        raise TypeError("rank of polynomial matrices is not supported")
    return len(echelon(m)[1])


def det(m: Matrix):
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    if _is_poly_matrix(m):
        return _laplace(m)
    if n <= 3:
        return as_scalar(_laplace([[as_scalar(x) for x in row] for row in m]))
    rows, pivots, sign = echelon(m)
    if len(pivots) < n:
        return Fraction(0)
    d = rows[n - 1][n - 1]
    # Bareiss on the integer-scaled matrix: undo the row scaling
    if all(is_rational(as_scalar(x)) for r in m for x in r):
        scale = Fraction(1)
        for row in m:
            den = 1
            for x in row:
                den = math.lcm(den, Fraction(x).denominator)
            scale *= den
        return Fraction(sign * d) / scale
    if len({radicand(as_scalar(x)) for r in m for x in r} - {None}) == 1:
        scale = Fraction(1)
        for row in m:
            den = 1
            for x in map(as_scalar, row):
                parts = (x.a, x.b) if isinstance(x, Quad) else (x,)
                for v in parts:
                    den = math.lcm(den, v.denominator)
            scale *= den
        return sign * d / scale
    return sign * d


def _laplace(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        a, b, c = m
        return (a[0] * (b[1] * c[2] - b[2] * c[1])
                - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]))
    total = 0
    for j in range(n):
        x = m[0][j]
        if not isinstance(x, MultiPoly) and x == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = x * _laplace(minor)
        total = term + total if j % 2 == 0 else total - term
    return total


def _minor(m, i, j):
    return [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]


def adjugate(m: Matrix) -> Matrix:
    n = len(m)
    if n == 1:
        return [[Fraction(1)]]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(_minor(m, i, j))
            out[j][i] = c if (i + j) % 2 == 0 else -c
    return out


def inverse(m: Matrix) -> Matrix:
    m = [[x if isinstance(x, MultiPoly) else as_scalar(x) for x in row] for row in m]
    d = det(m)
    if d == 0:
        raise RankError("matrix is singular", rank(m))
    adj = adjugate(m)
    return [[x / d for x in row] for row in adj]


def kernel(m: Matrix) -> List[list]:
    """Basis of the right kernel ``{v : m v = 0}``.

    Rational kernels are returned as primitive integer vectors (as Fractions)
    with a positive first non-zero entry; otherwise each vector has a 1 in its
    free column.
    """
    if not m:
        return []
    nc = len(m[0])
    rows, pivots, _ = echelon(m)
    free = [c for c in range(nc) if c not in pivots]
    rational = all(is_rational(as_scalar(x)) for r in m for x in r)
    basis = []
    for f in free:
        x = [Fraction(0)] * nc
        x[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            row = rows[k]
            s = Fraction(0)
            for j in range(pc + 1, nc):
                if row[j] != 0 and x[j] != 0:
                    s = s + row[j] * x[j]
            x[pc] = -s / row[pc]
        if rational:
            den = 1
            for v in x:
                den = math.lcm(den, Fraction(v).denominator)
            ints = [int(Fraction(v) * den) for v in x]
            g = 0
            for v in ints:
                g = math.gcd(g, v)
            first = next(v for v in ints if v != 0)
            g = g if first > 0 else -g
            x = [Fraction(v, g) for v in ints]
        basis.append(x)
    return basis


def solve(m: Matrix, b: Sequence) -> list:
    """One solution of ``m x = b`` (raises RankError when inconsistent)."""
    aug = [list(row) + [-as_scalar(bi)] for row, bi in zip(m, b)]
    for v in kernel(aug):
        if v[-1] != 0:
            return [x / v[-1] for x in v[:-1]]
    raise RankError("linear system is inconsistent", rank(m))


# -- quadratic forms ---------------------------------------------------------------

def symmetric_from_quadratic(q: MultiPoly) -> Matrix:
    """Symmetric matrix ``S`` with ``q(x) = x^T S x``."""
    n = q.arity
    s = [[Fraction(0)] * n for _ in range(n)]
    for e, c in q.terms.items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        if len(idx) != 2:
            raise ValueError("not a quadratic form")
        i, j = idx
        if i == j:
            s[i][i] = s[i][i] + c
        else:
            s[i][j] = s[i][j] + c / 2
            s[j][i] = s[j][i] + c / 2
    return s


def quadratic_from_symmetric(s: Matrix) -> MultiPoly:
    n = len(s)
    terms = {}
    for i in range(n):
        for j in range(i, n):
            c = s[i][j] if i == j else 2 * s[i][j]
            if c != 0:
                e = [0] * n
                e[i] += 1
                e[j] += 1
                terms[tuple(e)] = c
    return MultiPoly(n, terms)


def _split_binary(a, b, c):
    """Factor ``a y^2 + b y z + c z^2`` as a product of two linear forms.

    Returns ``((u1, v1), (u2, v2), delta)`` meaning ``(u1 y + v1 z)(u2 y + v2 z)``.
    """
    if a == 0 and c == 0:
        return (Fraction(1), Fraction(0)), (Fraction(0), b), 1
    if a == 0:
        # z (b y + c z)
        return (Fraction(0), Fraction(1)), (b, c), 1
    disc = b * b - 4 * a * c
    s = sqrt_rational(disc)
    d = radicand(s) or 1
    r1 = (-b + s) / (2 * a)
    r2 = (-b - s) / (2 * a)
    return (a, -a * r1), (Fraction(1), -r2), d


def rank2_split(q):
    """Split a ternary quadratic form of rank <= 2 as a product of two linear forms.

    ``q`` may be a MultiPoly of arity 3 or its symmetric 3x3 matrix.  Returns
    ``(L1, L2, delta)`` with ``L1 * L2 == q`` exactly, where the linear forms
    are coefficient lists over Q(sqrt(delta)) (``delta == 1`` when the split
    is rational).  Rank-1 input gives ``L1 == L2``.
    """
    s = symmetric_from_quadratic(q) if isinstance(q, MultiPoly) else [list(r) for r in q]
    n = len(s)
    r = rank(s)
    if r == 0:
        raise RankError("zero form has no factorization", 0)
    if r > 2:
        raise RankError(f"form has rank {r}; it does not split into two lines", r)
    ker = kernel(s)
    v = ker[0]
    # complete v to a basis with two standard vectors
    std = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    others = []
    for e in std:
        trial = [v] + others + [e]
        if rank(trial) == len(trial):
            others.append(e)
        if len(others) == n - 1:
            break
    basis = [v] + others  # columns of T
    t = transpose(basis)
    tinv = inverse(t)
    # binary form in the coordinates of others[0], others[1]
    w1, w2 = others
    a = _bil(s, w1, w1)
    b = 2 * _bil(s, w1, w2)
    c = _bil(s, w2, w2)
    if r == 1:
        # q = alpha * l^2 with l linear in (y, z)
        if a != 0:
            alpha, ly, lz = a, Fraction(1), b / (2 * a)
        else:
            alpha, ly, lz = c, Fraction(0), Fraction(1)
        root = sqrt_rational(alpha)
        delta = radicand(root) or 1
        coeffs = [root * ly, root * lz]
        lin = _lift_linear(coeffs, tinv)
        return lin, list(lin), delta
    (u1, v1), (u2, v2), delta = _split_binary(a, b, c)
    l1 = _lift_linear([u1, v1], tinv)
    l2 = _lift_linear([u2, v2], tinv)
    return l1, l2, delta


def _bil(s, x, y):
    acc = Fraction(0)
    for i in range(len(s)):
        for j in range(len(s)):
            if s[i][j] != 0:
                acc = acc + x[i] * s[i][j] * y[j]
    return acc


def _lift_linear(coeffs_yz, tinv):
    # y = row 1 of T^{-1} X, z = row 2 of T^{-1} X
    u, v = coeffs_yz
    return [u * tinv[1][k] + v * tinv[2][k] for k in range(len(tinv))]
