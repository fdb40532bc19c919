"""Exact scalar kernel: rationals, Pochhammer symbols, binomials, brackets.

Every scalar in this package is an arbitrary-precision rational.  The
stdlib ``fractions.Fraction`` already guarantees the invariants we need
(always in lowest terms, positive denominator, exact arithmetic,
division by zero raises), so it is used directly and re-exported as
``Rational``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DomainError, NegativeIndexPole

Rational = Fraction

Scalar = Union[Fraction, int]

HALF = Fraction(1, 2)


def rising(x: Scalar, n: int) -> Fraction:
    """Rising factorial x(x+1)...(x+n-1), with the empty product equal to 1.

    For n < 0 the value is extended by 1 / rising(x - |n|, |n|), the unique
    choice satisfying rising(x, a+b) = rising(x, a) * rising(x+a, b).

    Raises NegativeIndexPole when n < 0 and x is one of 1..|n| (the
    extension would divide by zero).
    """
    x = Fraction(x)
    if n >= 0:
        out = Fraction(1)
        for i in range(n):
            out *= x + i
        return out
    k = -n
    den = rising(x - k, k)
    if den == 0:
        raise NegativeIndexPole(
            f"rising({x}, {n}) undefined: x in {{1, ..., {k}}} makes the extension divide by zero"
        )
    return 1 / den


def falling(x: Scalar, n: int) -> Fraction:
    """Falling factorial x(x-1)...(x-n+1); empty product 1.

    For n < 0 extends by 1 / falling(x + |n|, |n|); raises
    NegativeIndexPole when x is one of -1..-|n|.
    """
    x = Fraction(x)
    if n >= 0:
        out = Fraction(1)
        for i in range(n):
            out *= x - i
        return out
    k = -n
    den = falling(x + k, k)
    if den == 0:
        raise NegativeIndexPole(
            f"falling({x}, {n}) undefined: x in {{-1, ..., -{k}}} makes the extension divide by zero"
        )
    return 1 / den


def binomial(x: Scalar, k: int) -> Fraction:
    """Generalized binomial coefficient falling(x, k) / k!, with 0 for k < 0."""
    if k < 0:
        return Fraction(0)
    x = Fraction(x)
    if x.denominator == 1 and x >= 0:
        xi = int(x)
        return Fraction(math.comb(xi, k)) if k <= xi else Fraction(0)
    return falling(x, k) / math.factorial(k)


@lru_cache(maxsize=None)
def _rising_half(n: int) -> Fraction:
    """rising(1/2, n) for any integer n; never zero, never a pole."""
    return rising(HALF, n)


def bracket(upper: int, lower: int) -> Fraction:
    """Half-integer analogue of the binomial coefficient.

    bracket(n, k) = (1/2)_n / ((1/2)_k (1/2)_{n-k}) where (1/2)_j is the
    rising factorial at 1/2, extended to negative j.  Both arguments may
    be any integers: since 1/2 is never a positive integer the extension
    has no poles, so the defining quotient is total.
    """
    return _rising_half(upper) / (_rising_half(lower) * _rising_half(upper - lower))


def central_binomial(n: int) -> Fraction:
    """Binomial coefficient (2n choose n) for n >= 0."""
    if n < 0:
        raise DomainError(f"central_binomial requires n >= 0, got {n}")
    return Fraction(math.comb(2 * n, n))
