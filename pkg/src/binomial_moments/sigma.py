"""Complete symmetric functions sigma_{m,l}(y) in three independent forms.

sigma_{m,l}(y) is the coefficient of T^(m-l) in the product of the
geometric series 1/(1 - T(y-j)^2) for j = 0..l.  Equivalently it is the
complete homogeneous symmetric polynomial of degree m-l in the squared
shifts (y-0)^2, ..., (y-l)^2, and it also has an explicit single-sum
expression whose denominator falling(2y, 1+2l) can vanish.  The three
routes are implemented independently; agreement is enforced by tests
and by the verify command.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations_with_replacement

from .errors import DenominatorPole, DomainError
from .exact import Scalar, binomial, falling
from .series import Polynomial, geometric, poly_interpolate, series_mul


def _check_args(m: int, ell: int) -> None:
    if m < 0 or not 0 <= ell <= m:
        raise DomainError(f"sigma requires 0 <= l <= m, got m={m}, l={ell}")


@lru_cache(maxsize=None)
def sigma_series(m: int, ell: int, y: Scalar) -> Fraction:
    """[T^(m-l)] of the truncated product of geometric((y-j)^2) for j = 0..l."""
    _check_args(m, ell)
    y = Fraction(y)
    prod = reduce(series_mul, (geometric((y - j) ** 2, m) for j in range(ell + 1)))
    return prod.coefficient(m - ell)


def sigma_monomial(m: int, ell: int, y: Scalar) -> Fraction:
    """Sum over weakly increasing tuples 0 <= k_1 <= ... <= k_{m-l} <= l
    of the products of squared shifts (y - k_i)^2; the empty tuple gives 1.
    """
    _check_args(m, ell)
    y = Fraction(y)
    shifts = [(y - k) ** 2 for k in range(ell + 1)]
    total = Fraction(0)
    for tup in combinations_with_replacement(range(ell + 1), m - ell):
        total += math.prod((shifts[k] for k in tup), start=Fraction(1))
    return total


def sigma_explicit(m: int, ell: int, y: Scalar) -> Fraction:
    """Single-sum form 2(-1)^l / falling(2y, 1+2l) * sum_i binomial(2y, i)
    * binomial(2l-2y, l-i) * (y-i)^(1+2m).

    Only valid away from the zeros of falling(2y, 1+2l); raises
    DenominatorPole there (for y = n a positive integer this is the
    condition n > l).
    """
    _check_args(m, ell)
    y = Fraction(y)
    den = falling(2 * y, 1 + 2 * ell)
    if den == 0:
        raise DenominatorPole(
            f"sigma_explicit({m}, {ell}, {y}): falling({2 * y}, {1 + 2 * ell}) = 0"
        )
    total = Fraction(0)
    for i in range(ell + 1):
        total += binomial(2 * y, i) * binomial(2 * ell - 2 * y, ell - i) * (y - i) ** (1 + 2 * m)
    return 2 * (-1) ** ell * total / den


def sigma_poly(m: int, ell: int) -> Polynomial:
    """sigma_{m,l} as a polynomial in y, of degree exactly 2(m-l).

    Interpolated from sigma_series samples at y = 0, 1, ..., 2(m-l).
    """
    _check_args(m, ell)
    deg = 2 * (m - ell)
    pts = [(Fraction(y), sigma_series(m, ell, Fraction(y))) for y in range(deg + 1)]
    return poly_interpolate(pts, deg)
