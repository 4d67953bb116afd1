"""Sparse multivariate polynomials with exact coefficients.

A :class:`MultiPoly` maps exponent tuples to exact scalars.  Terms iterate in
graded-lex order (total degree first, then lexicographic with ``x0`` most
significant).  Values are treated as immutable once built.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Sequence, Tuple

import numpy as np

from .errors import ArityMismatch, DivisionNotExact
from .scalar import Quad, Scalar, as_scalar, decode_scalar, encode_scalar, radicand

Exponent = Tuple[int, ...]

__all__ = ["MultiPoly", "monomials", "variables", "glex_key"]


def glex_key(e: Exponent):
    return (sum(e), e)


def monomials(arity: int, degree: int):
    """Exponent tuples of all monomials of exactly ``degree``, in descending glex order."""
    out = []
    for combo in combinations_with_replacement(range(arity), degree):
        e = [0] * arity
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


class MultiPoly:
    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Dict[Exponent, Scalar] | None = None):
        self.arity = arity
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != arity:
                    raise ArityMismatch(f"exponent {e} does not have {arity} entries")
                if c != 0:
                    clean[tuple(e)] = as_scalar(c)
        self.terms = clean

    @classmethod
    def _raw(cls, arity, terms):
        # trusted constructor: terms already canonical (no zeros, tuple keys)
        p = object.__new__(cls)
        p.arity = arity
        p.terms = terms
        return p

    # -- constructors --------------------------------------------------------
    @classmethod
    def const(cls, c, arity: int) -> "MultiPoly":
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def var(cls, i: int, arity: int) -> "MultiPoly":
        e = [0] * arity
        e[i] = 1
        return cls._raw(arity, {tuple(e): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "MultiPoly":
        """The linear form ``sum coeffs[i] * x_i``."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "MultiPoly":
        """Univariate polynomial from coefficients, constant term first."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    # -- basic queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_degree(self):
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: glex_key(t[0]), reverse=True)

    def leading_term(self):
        e = max(self.terms, key=glex_key)
        return e, self.terms[e]

    def coeff(self, e: Exponent):
        return self.terms.get(tuple(e), Fraction(0))

    def radicand(self):
        for c in self.terms.values():
            d = radicand(c)
            if d is not None:
                return d
        return None

    def is_rational(self) -> bool:
        return self.radicand() is None

    # -- arithmetic -----------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
            return other
        return MultiPoly.const(as_scalar(other), self.arity)

    def __add__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction, Quad)):
            return NotImplemented
        other = self._lift(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v == 0:
                terms.pop(e, None)
            else:
                terms[e] = v
        return MultiPoly._raw(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction, Quad)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
            terms: Dict[Exponent, Scalar] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    v = terms.get(e, 0) + c1 * c2
                    if v == 0:
                        terms.pop(e, None)
                    else:
                        terms[e] = v
            return MultiPoly._raw(self.arity, terms)
        if isinstance(other, (int, Fraction, Quad)):
            if other == 0:
                return MultiPoly._raw(self.arity, {})
            return MultiPoly._raw(self.arity, {e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return self.divexact(other)
        if isinstance(other, (int, Fraction, Quad)):
            inv = 1 / as_scalar(other)
            return self * inv
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MultiPoly.const(1, self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, Fraction, Quad)):
            return self == MultiPoly.const(other, self.arity)
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # -- calculus & composition ------------------------------------------------
    def diff(self, i: int) -> "MultiPoly":
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                terms[tuple(ne)] = c * k
        return MultiPoly._raw(self.arity, terms)

    def gradient(self):
        return [self.diff(i) for i in range(self.arity)]

    def subs(self, polys: Sequence["MultiPoly"]) -> "MultiPoly":
        """Compose: replace ``x_i`` by ``polys[i]`` (all of one common arity)."""
        if len(polys) != self.arity:
            raise ArityMismatch(f"need {self.arity} substitutes, got {len(polys)}")
        polys = list(polys)
        target = polys[0].arity if polys else 0
        cache = [{0: MultiPoly.const(1, target), 1: p} for p in polys]

        def power(i, k):
            table = cache[i]
            if k not in table:
                table[k] = power(i, k - 1) * polys[i]
            return table[k]

        out = MultiPoly._raw(target, {})
        for e, c in self.terms.items():
            term = MultiPoly.const(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def __call__(self, *values):
        """Exact evaluation at a point given as scalars."""
        if len(values) == 1 and isinstance(values[0], (list, tuple)):
            values = values[0]
        if len(values) != self.arity:
            raise ArityMismatch(f"need {self.arity} values, got {len(values)}")
        powers = [[Fraction(1)] for _ in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    pw = powers[i]
                    while len(pw) <= k:
                        pw.append(pw[-1] * values[i])
                    term = term * pw[k]
            total = total + term
        return total

    # -- division --------------------------------------------------------------
    def divmod(self, divisor: "MultiPoly"):
        """Multivariate division by one polynomial in glex order."""
        divisor = self._lift(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        le, lc = divisor.leading_term()
        quotient: Dict[Exponent, Scalar] = {}
        remainder: Dict[Exponent, Scalar] = {}
        work = MultiPoly._raw(self.arity, dict(self.terms))
        while work.terms:
            e, c = work.leading_term()
            if all(a >= b for a, b in zip(e, le)):
                qe = tuple(a - b for a, b in zip(e, le))
                qc = c / lc
                quotient[qe] = quotient.get(qe, 0) + qc
                shifted = MultiPoly._raw(self.arity, {
                    tuple(a + b for a, b in zip(de, qe)): dc * qc for de, dc in divisor.terms.items()
                })
                work = work - shifted
            else:
                remainder[e] = c
                del work.terms[e]
        return MultiPoly(self.arity, quotient), MultiPoly(self.arity, remainder)

    def divexact(self, divisor: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise DivisionNotExact("polynomial division leaves a remainder")
        return q

    def divides(self, other: "MultiPoly") -> bool:
        return other.divmod(self)[1].is_zero()

    # -- normalisation -----------------------------------------------------------
    def monic(self) -> "MultiPoly":
        """Scale so the glex-leading coefficient is 1."""
        if self.is_zero():
            return self
        return self * (1 / self.leading_term()[1])

    def proportional(self, other: "MultiPoly") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.monic() == other.monic()

    def primitive(self) -> "MultiPoly":
        """Rational polynomial scaled to coprime integer coefficients, positive leading term."""
        if self.is_zero() or not self.is_rational():
            return self.monic()
        from math import gcd, lcm

        den = 1
        for c in self.terms.values():
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.terms.values()]
        g = 0
        for v in ints:
            g = gcd(g, v)
        scale = Fraction(den, g)
        if self.leading_term()[1] < 0:
            scale = -scale
        return self * scale

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly(self.arity, {e: fn(c) for e, c in self.terms.items()})

    def homogenize(self, position: int = 0) -> "MultiPoly":
        """Insert a homogenizing variable at ``position``."""
        deg = self.degree()
        terms = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne.insert(position, deg - sum(e))
            terms[tuple(ne)] = c
        return MultiPoly._raw(self.arity + 1, terms)

    def dehomogenize(self, position: int) -> "MultiPoly":
        terms = {}
        for e, c in self.terms.items():
            ne = e[:position] + e[position + 1:]
            terms[ne] = terms.get(ne, 0) + c
        return MultiPoly(self.arity - 1, terms)

    def part_of_degree(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.arity, {e: c for e, c in self.terms.items() if sum(e) == d})

    # -- univariate helpers ----------------------------------------------------------
    def univariate_coeffs(self):
        """Coefficient list (constant first) of a univariate polynomial."""
        if self.arity != 1:
            raise ArityMismatch("polynomial is not univariate")
        deg = self.degree()
        out = [Fraction(0)] * (deg + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    # -- numerics & io ------------------------------------------------------------------
    def to_arrays(self):
        """``(exponents int64[m, n], coefficients complex128[m])`` for float kernels."""
        items = self.sorted_terms()
        exps = np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), self.arity)
        coeffs = np.array([complex(c) for _, c in items], dtype=np.complex128)
        return exps, coeffs

    def to_json(self):
        return {
            "arity": self.arity,
            "terms": [{"e": list(e), "c": encode_scalar(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj) -> "MultiPoly":
        return cls(obj["arity"], {tuple(t["e"]): decode_scalar(t["c"]) for t in obj["terms"]})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k)
            cs = str(c)
            if mono:
                parts.append(mono if c == 1 else (f"-{mono}" if c == -1 else f"{cs}*{mono}"))
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")


def variables(arity: int):
    return [MultiPoly.var(i, arity) for i in range(arity)]
