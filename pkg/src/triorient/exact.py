"""Exact comparison layer: every verdict in the auditor goes through here.

Only ``int`` and ``fractions.Fraction`` operands are accepted; a float anywhere
in a comparison is a programming error and raises ``TypeError``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Exact = int | Fraction

RELATIONS = ("<", "<=", "=", ">", ">=")


def _check(x) -> None:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"exact comparison got {type(x).__name__}: {x!r}")


def holds(lhs: Exact, relation: str, rhs: Exact) -> bool:
    _check(lhs)
    _check(rhs)
    if relation == "<":
        return lhs < rhs
    if relation == "<=":
        return lhs <= rhs
    if relation == "=":
        return lhs == rhs
    if relation == ">":
        return lhs > rhs
    if relation == ">=":
        return lhs >= rhs
    raise ValueError(f"unknown relation {relation!r}")


def log2_upper(x: int, denom: int = 100) -> Fraction:
    """Smallest p/denom with 2^(p/denom) >= x, i.e. 2^p >= x^denom."""
    if x < 1:
        raise ValueError("log2_upper needs x >= 1")
    big = x ** denom
    p = big.bit_length() - 1
    if (1 << p) < big:
        p += 1
    return Fraction(p, denom)


def log2_bound_holds(x: int, bound: Fraction) -> bool:
    """Exact test of log2(x) <= bound, i.e. x^q <= 2^p for bound = p/q."""
    _check(bound)
    p, q = bound.numerator, bound.denominator
    if p < 0:
        return False
    return holds(x ** q, "<=", 2 ** p)


def pow2_exponent(value: Fraction) -> Fraction:
    """Inverse of 2^e for an exact power of two (used to pretty-print)."""
    if value <= 0:
        raise ValueError("not positive")
    num, den = value.numerator, value.denominator
    if num & (num - 1) or den & (den - 1):
        raise ValueError("not a power of two")
    return Fraction(num.bit_length() - den.bit_length())


# -- univariate polynomials with rational coefficients ---------------------


class Poly:
    """Polynomial ``sum(c[k] * t**k)`` with exact coefficients."""

    def __init__(self, coeffs: Sequence[Exact]) -> None:
        cs = [Fraction(c) for c in coeffs]
        for c in coeffs:
            _check(c)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.c = tuple(cs) or (Fraction(0),)

    @classmethod
    def t(cls) -> Poly:
        return cls([0, 1])

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        n = max(len(self.c), len(other.c))
        return Poly([(self.c[k] if k < len(self.c) else 0) + (other.c[k] if k < len(other.c) else 0)
                     for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.c])

    def __sub__(self, other) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other) -> Poly:
        other = _as_poly(other)
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            for j, b in enumerate(other.c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __call__(self, t: Exact) -> Fraction:
        _check(t)
        out = Fraction(0)
        for c in reversed(self.c):
            out = out * t + c
        return out

    def derivative(self) -> Poly:
        return Poly([k * c for k, c in enumerate(self.c)][1:] or [0])

    def coefficients(self) -> list[str]:
        return [str(c) for c in self.c]

    def __repr__(self) -> str:
        return f"Poly({self.coefficients()})"


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def positive_from(p: Poly, start: int) -> bool:
    """True iff p(t) > 0 for every integer t >= start (degree <= 2)."""
    if p.degree > 2:
        raise ValueError("positive_from handles degree <= 2")
    if p(start) <= 0:
        return False
    if p.degree == 0:
        return True
    lead = p.c[-1]
    if lead < 0:
        return False
    # nondecreasing from start onward implies positivity; quadratic with
    # positive lead is nondecreasing once past its vertex
    return p.derivative()(start) >= 0 or (p.degree == 2 and _quadratic_min_positive(p, start))


def _quadratic_min_positive(p: Poly, start: int) -> bool:
    c0, c1, c2 = p.c
    vertex = -c1 / (2 * c2)
    # integer points near the vertex bound the minimum over t >= start
    lo = max(start, int(vertex) - 1)
    return all(p(t) > 0 for t in range(lo, lo + 4))


def first_positive_tail(p: Poly, start: int, stop: int) -> int | None:
    """Smallest t in [start, stop] with p(s) > 0 for all integers s >= t."""
    if not positive_from(p, stop):
        return None
    t = stop
    while t > start and p(t - 1) > 0:
        t -= 1
    return t
