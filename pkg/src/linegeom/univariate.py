"""Univariate polynomial tools over the exact scalar towers.

Internally polynomials are coefficient lists with the constant term first;
the public functions accept either such lists or arity-1 :class:`MultiPoly`
values and return the same kind they were given.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import mpmath

from .poly import MultiPoly
from .scalar import Scalar, as_scalar, is_rational, sqrt_rational

__all__ = [
    "Root", "ugcd", "resultant", "discriminant", "squarefree_decomposition",
    "rational_roots", "exact_roots", "sturm_isolate", "numeric_roots",
    "polydivmod", "peval", "pderiv", "pmul", "padd", "psub", "trim",
]


# -- coefficient-list primitives ------------------------------------------------

def trim(p):
    p = [as_scalar(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def _as_list(p):
    if isinstance(p, MultiPoly):
        return trim(p.univariate_coeffs()) if not p.is_zero() else []
    return trim(p)


def _wrap(like, coeffs):
    if isinstance(like, MultiPoly):
        return MultiPoly.from_coeffs(coeffs) if coeffs else MultiPoly(1)
    return coeffs


def padd(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def psub(p, q):
    return padd(p, [-c for c in q])


def pmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def pderiv(p):
    return trim([p[k] * k for k in range(1, len(p))])


def peval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def polydivmod(p, q):
    p, q = _as_list(p), _as_list(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lc = q[-1]
    while len(rem) >= len(q) and rem:
        k = len(rem) - len(q)
        c = rem[-1] / lc
        quot[k] = c
        for i, b in enumerate(q):
            rem[i + k] = rem[i + k] - c * b
        rem = trim(rem)
    return trim(quot), rem


def _monic(p):
    if not p:
        return p
    lc = p[-1]
    return [c / lc for c in p]


def ugcd(p, q):
    """Monic GCD; a result equal to ``[1]`` means the inputs are coprime."""
    a, b = _as_list(p), _as_list(q)
    while b:
        _, r = polydivmod(a, b)
        a, b = b, r
    return _wrap(p, _monic(a))


def _det(m):
    # fraction-free elimination on a square matrix of field elements
    from .linalg import det

    return det(m)


def resultant(p, q):
    """Resultant via the Sylvester determinant."""
    a, b = _as_list(p), _as_list(q)
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        return Fraction(0)
    if m == 0 and n == 0:
        return Fraction(1)
    size = m + n
    rows = []
    ra, rb = list(reversed(a)), list(reversed(b))
    for i in range(n):
        rows.append([Fraction(0)] * i + ra + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + rb + [Fraction(0)] * (size - n - 1 - i))
    return _det(rows)


def discriminant(p):
    a = _as_list(p)
    n = len(a) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(a, pderiv(a)) / a[-1]


def squarefree_decomposition(p):
    """Yun's algorithm: list of ``(factor, multiplicity)`` with monic factors."""
    a = _monic(_as_list(p))
    if len(a) <= 1:
        return []
    out = []
    d = pderiv(a)
    g = _as_list(ugcd(a, d))
    b = polydivmod(a, g)[0]
    c = polydivmod(d, g)[0]
    dd = psub(c, pderiv(b))
    k = 1
    while len(b) > 1:
        g = _as_list(ugcd(b, dd))
        b = polydivmod(b, g)[0]
        c = polydivmod(dd, g)[0]
        if len(g) > 1:
            out.append((_wrap(p, g), k))
        dd = psub(c, pderiv(b))
        k += 1
    return out


# -- integer transform used by root extraction ---------------------------------

def _to_integer(p):
    den = 1
    for c in p:
        den = math.lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints]


def _monic_integer(p):
    """``q(y) = a_n^(n-1) p(y / a_n)`` for integer ``p``: monic with integer coefficients."""
    n = len(p) - 1
    an = p[-1]
    return [p[k] * an ** (n - 1 - k) for k in range(n)] + [1]


def _numeric(p, dps=None):
    ints = _to_integer(p)
    height = max(abs(v) for v in ints)
    if dps is None:
        dps = 30 + 3 * len(str(height))
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([mpmath.mpf(v) for v in reversed(ints)],
                                 maxsteps=400, extraprec=4 * dps)
        return [complex(r) for r in roots], [r for r in roots], dps


def numeric_roots(p) -> List[complex]:
    a = _as_list(p)
    if len(a) <= 1:
        return []
    if all(is_rational(c) for c in a):
        return _numeric(a)[0]
    import numpy as np

    return list(np.roots([complex(c) for c in reversed(a)]))


def rational_roots(p) -> List[Fraction]:
    """Distinct rational roots of a rational polynomial, verified exactly."""
    a = _as_list(p)
    if len(a) <= 1:
        return []
    out = []
    while a and a[0] == 0:
        out.append(Fraction(0))
        a = a[1:]
    if len(a) <= 1:
        return sorted(set(out))
    ints = _to_integer(a)
    q = _monic_integer(ints)
    an = ints[-1]
    _, roots, dps = _numeric(q)
    seen = set(out)
    with mpmath.workdps(dps):
        for r in roots:
            if abs(mpmath.im(r)) > mpmath.mpf(10) ** (-(dps // 3)) * max(1, abs(r)):
                continue
            k = int(mpmath.nint(mpmath.re(r)))
            if peval(q, Fraction(k)) == 0:
                x = Fraction(k, an)
                if x not in seen:
                    seen.add(x)
                    out.append(x)
    return sorted(out)


def _quadratic_factor_int(q):
    """Monic integer quadratic factor of a monic integer quartic, if one exists."""
    _, roots, dps = _numeric(q)
    with mpmath.workdps(dps):
        for i in range(4):
            for j in range(i + 1, 4):
                s = roots[i] + roots[j]
                pr = roots[i] * roots[j]
                tol = mpmath.mpf(10) ** (-(dps // 3))
                if abs(mpmath.im(s)) > tol * max(1, abs(s)) or abs(mpmath.im(pr)) > tol * max(1, abs(pr)):
                    continue
                cand = [Fraction(int(mpmath.nint(mpmath.re(pr)))), Fraction(-int(mpmath.nint(mpmath.re(s)))), Fraction(1)]
                _, r = polydivmod(q, cand)
                if not r:
                    return cand
    return None


@dataclass(frozen=True)
class Root:
    """A root with multiplicity.

    ``value`` is exact (Fraction or Quad) when the root lies in Q or in a
    quadratic extension; otherwise it is ``None`` and ``interval`` holds a
    rational isolating interval for real roots.  ``approx`` is always set.
    ``factor`` is the monic irreducible factor over Q that the root belongs to.
    """

    value: Optional[Scalar]
    multiplicity: int
    approx: complex
    factor: tuple
    interval: Optional[tuple] = None

    @property
    def exact(self) -> bool:
        return self.value is not None

    @property
    def is_real(self) -> bool:
        if self.value is not None:
            v = self.value
            return is_rational(v) or v.d > 0
        return self.interval is not None


def _quadratic_roots(f):
    c, b, a = f
    disc = b * b - 4 * a * c
    s = sqrt_rational(disc)
    return [(-b + s) / (2 * a), (-b - s) / (2 * a)]


def _irreducible_factors(f):
    """Split a monic squarefree rational polynomial of degree <= 4 over Q."""
    f = _monic(f)
    out = []
    for r in rational_roots(f):
        out.append([-r, Fraction(1)])
        f = polydivmod(f, [-r, Fraction(1)])[0]
    if len(f) - 1 == 4:
        ints = _to_integer(f)
        q = _monic_integer(ints)
        an = ints[-1]
        g = _quadratic_factor_int(q)
        if g is not None:
            # undo y = an * x on the factor
            g_x = _monic([g[0], g[1] * an, g[2] * an * an])
            out.append(g_x)
            f = polydivmod(f, g_x)[0]
    if len(f) > 1:
        out.append(_monic(f))
    return out


def exact_roots(p) -> List[Root]:
    """All roots of a rational polynomial, exact where possible.

    Each square-free part must have degree <= 4.
    """
    a = _as_list(p)
    if not all(is_rational(c) for c in a):
        raise TypeError("exact_roots needs rational coefficients")
    out = []
    for sqf, mult in squarefree_decomposition(a):
        sqf = _as_list(sqf)
        if len(sqf) - 1 > 4:
            raise ValueError("exact root extraction is limited to square-free parts of degree <= 4")
        for f in _irreducible_factors(sqf):
            deg = len(f) - 1
            key = tuple(f)
            if deg == 1:
                v = -f[0]
                out.append(Root(v, mult, complex(v), key))
            elif deg == 2:
                for v in _quadratic_roots(f):
                    out.append(Root(v, mult, complex(v), key))
            else:
                intervals = sturm_isolate(f)
                approx = sorted(_numeric(f)[0], key=lambda z: (abs(z.imag) > 1e-9, z.real, z.imag))
                reals = [z for z in approx if abs(z.imag) <= 1e-9 * max(1.0, abs(z))]
                cplx = [z for z in approx if z not in reals]
                for iv, z in zip(intervals, sorted(reals, key=lambda z: z.real)):
                    out.append(Root(None, mult, complex(z.real, 0.0), key, iv))
                for z in cplx:
                    out.append(Root(None, mult, z, key))
    return out


# -- Sturm sequences -------------------------------------------------------------

def _sturm_chain(f):
    chain = [f, pderiv(f)]
    while len(chain[-1]) > 1:
        _, r = polydivmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain, x):
    signs = []
    for g in chain:
        v = peval(g, x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_isolate(p, width=None):
    """Disjoint rational intervals ``(lo, hi]`` each holding one real root."""
    f = _as_list(p)
    g = _as_list(ugcd(f, pderiv(f)))
    if len(g) > 1:
        f = polydivmod(f, g)[0]
    chain = _sturm_chain(f)
    bound = 1 + max(abs(c / f[-1]) for c in f[:-1]) if len(f) > 1 else Fraction(1)
    bound = Fraction(math.ceil(bound))
    stack = [(-bound, bound)]
    out = []
    while stack:
        lo, hi = stack.pop()
        n = _sign_changes(chain, lo) - _sign_changes(chain, hi)
        if n == 0:
            continue
        if n == 1 and (width is None or hi - lo <= width):
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)
