"""Exact scalars: rationals, Gaussian rationals and one quadratic extension.

Rationals are plain :class:`fractions.Fraction` objects.  An element of
Q(sqrt(d)) with non-zero irrational part is a :class:`Quad`; the Gaussian
tower is the case ``d == -1``.  Every operation that produces a zero
irrational part collapses back to a ``Fraction``, so equality against plain
rationals and ints works as expected.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import ExtensionMismatch

__all__ = [
    "Quad", "Scalar", "I", "as_scalar", "quad", "sqrt_rational", "squarefree_part",
    "conj", "radicand", "is_rational", "to_complex", "parse_scalar",
    "encode_scalar", "decode_scalar",
]


class Quad:
    """``a + b*sqrt(d)`` with rational ``a``, ``b`` (``b != 0``) and square-free ``d``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            raise ValueError("use quad() to build possibly-rational values")
        if d in (0, 1):
            raise ValueError("radicand must be a non-square")
        self.a = a
        self.b = b
        self.d = d

    # -- helpers -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.d != self.d:
                raise ExtensionMismatch(f"sqrt({self.d}) combined with sqrt({other.d})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(c[0] - self.a, c[1] - self.b, self.d)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        x, y = c
        return quad(self.a * x + self.d * self.b * y, self.a * y + self.b * x, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        x, y = c
        n = x * x - self.d * y * y
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        # (a + b s)(x - y s) / n
        return quad((self.a * x - self.d * self.b * y) / n, (self.b * x - self.a * y) / n, self.d)

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        # other is rational here: other * conj(self) / norm(self)
        n = self.norm()
        return quad(c[0] * self.a / n, -c[0] * self.b / n, self.d)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** -n)
        result, base = Fraction(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return True

    def conjugate(self):
        return Quad(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def __complex__(self):
        if self.d < 0:
            return complex(float(self.a), float(self.b) * math.sqrt(-self.d))
        return complex(float(self.a) + float(self.b) * math.sqrt(self.d), 0.0)

    def __float__(self):
        if self.d < 0:
            raise TypeError("non-real value has no float")
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        root = "i" if self.d == -1 else f"sqrt({self.d})"
        return f"({self.a} + {self.b}*{root})"


Scalar = Union[Fraction, Quad]

I = Quad(0, 1, -1)


def quad(a, b, d) -> Scalar:
    """Canonical constructor: returns a Fraction when ``b == 0``."""
    if b == 0:
        return Fraction(a)
    return Quad(a, b, d)


def as_scalar(x) -> Scalar:
    if isinstance(x, (Fraction, Quad)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars; pass a Fraction or string")
    raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")


def is_rational(x) -> bool:
    return not isinstance(x, Quad)


def radicand(x):
    """Radicand of ``x`` (``None`` for rationals)."""
    return x.d if isinstance(x, Quad) else None


def conj(x):
    return x.conjugate() if isinstance(x, Quad) else x


def to_complex(x) -> complex:
    return complex(x)


@lru_cache(maxsize=4096)
def _squarefree_int(n: int):
    """Split ``n > 0`` as ``(s, k)`` with ``n == s * k*k`` and ``s`` square-free."""
    from sympy import factorint

    s, k = 1, 1
    for p, e in factorint(n).items():
        k *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, k


def squarefree_part(n: int):
    """Return ``(s, k)`` with ``n == s*k**2``, ``s`` square-free (sign kept in ``s``)."""
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    r = math.isqrt(n)
    if r * r == n:
        return sign, r
    s, k = _squarefree_int(n)
    return sign * s, k


def sqrt_rational(r) -> Scalar:
    """Exact square root of a rational, in Q or in Q(sqrt(d)) with d square-free."""
    r = Fraction(r)
    if r == 0:
        return Fraction(0)
    n, m = r.numerator, r.denominator
    s, k = squarefree_part(n * m)
    if s == 1:
        return Fraction(k, m)
    return Quad(0, Fraction(k, m), s)


def parse_scalar(text: str) -> Fraction:
    return Fraction(text.strip())


def encode_scalar(x):
    """JSON form: ``[num, den]``, Gaussian ``[re_n, re_d, im_n, im_d]``,
    other radicands ``[a_n, a_d, b_n, b_d, d]``."""
    x = as_scalar(x)
    if isinstance(x, Quad):
        out = [x.a.numerator, x.a.denominator, x.b.numerator, x.b.denominator]
        if x.d != -1:
            out.append(x.d)
        return out
    return [x.numerator, x.denominator]


def decode_scalar(obj) -> Scalar:
    if isinstance(obj, (int, str)):
        return as_scalar(obj)
    if len(obj) == 2:
        return Fraction(obj[0], obj[1])
    if len(obj) == 4:
        return quad(Fraction(obj[0], obj[1]), Fraction(obj[2], obj[3]), -1)
    if len(obj) == 5:
        return quad(Fraction(obj[0], obj[1]), Fraction(obj[2], obj[3]), obj[4])
    raise ValueError(f"bad scalar encoding: {obj!r}")
