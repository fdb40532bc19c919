"""Truncated formal power series, dense polynomials, exact interpolation.

A TruncatedSeries is a formal power series in one variable T over
Rational, cut off at a fixed order M: only coefficients of T^0..T^M are
stored and arithmetic never looks past index M.  Polynomials are dense
coefficient lists (lowest degree first) in canonical form.  Both are
immutable value objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ConsistencyError,
    DomainError,
    DuplicateAbscissa,
    IndexOutOfOrder,
    OrderMismatch,
)
from .exact import Scalar


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series truncated at a fixed order."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise DomainError(f"series order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise DomainError(
                f"series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], order: int) -> "TruncatedSeries":
        """Build a series from a coefficient sequence, padding with zeros."""
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([Fraction(c)], order)

    @classmethod
    def monomial(cls, k: int, order: int) -> "TruncatedSeries":
        """The series T^k (the zero series when k exceeds the order)."""
        if k < 0:
            raise DomainError(f"monomial exponent must be >= 0, got {k}")
        cs = [Fraction(0)] * (order + 1)
        if k <= order:
            cs[k] = Fraction(1)
        return cls(order, tuple(cs))

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of T^k; raises IndexOutOfOrder outside 0..order."""
        if not 0 <= k <= self.order:
            raise IndexOutOfOrder(f"coefficient index {k} outside 0..{self.order}")
        return self.coeffs[k]

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c: Scalar) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if bj != 0:
                out[i + j] += ai * bj
    return TruncatedSeries(n, tuple(out))


def geometric(c: Scalar, order: int) -> TruncatedSeries:
    """Truncation of 1/(1 - cT): coefficient of T^k is c^k."""
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for _ in range(order):
        coeffs.append(coeffs[-1] * c)
    return TruncatedSeries(order, tuple(coeffs))


def coefficient(s: TruncatedSeries, k: int) -> Fraction:
    """Coefficient of T^k in a truncated series."""
    return s.coefficient(k)


class Polynomial:
    """Univariate polynomial over Rational, dense, lowest degree first.

    Canonical form: no trailing zero coefficients except for the zero
    polynomial, which is stored as the single coefficient 0.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar] = (0,)):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        return Polynomial([c * a for a in self.coeffs])

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and self.degree > 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*y")
            else:
                parts.append(f"{c}*y^{i}")
        return " + ".join(parts) if parts else "0"


def poly_interpolate(
    points: Sequence[tuple[Scalar, Scalar]], degree_bound: int
) -> Polynomial:
    """Exact polynomial through the first degree_bound+1 points.

    Uses Newton divided differences over Rational.  All abscissae must be
    distinct; any points beyond the first degree_bound+1 must lie on the
    resulting polynomial, otherwise ConsistencyError is raised.
    """
    if degree_bound < 0:
        raise DomainError(f"degree bound must be >= 0, got {degree_bound}")
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    seen = set()
    for x, _ in pts:
        if x in seen:
            raise DuplicateAbscissa(f"repeated abscissa {x}")
        seen.add(x)
    need = degree_bound + 1
    if len(pts) < need:
        raise DomainError(f"need at least {need} points for degree bound {degree_bound}")

    base = pts[:need]
    xs = [x for x, _ in base]
    # Newton divided-difference table, one diagonal at a time.
    coefs = [y for _, y in base]
    for level in range(1, need):
        for i in range(need - 1, level - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (xs[i] - xs[i - level])
    # Expand the Newton form into the monomial basis.
    poly = Polynomial([coefs[-1]])
    for i in range(need - 2, -1, -1):
        poly = poly * Polynomial([-xs[i], 1]) + Polynomial([coefs[i]])

    for x, y in pts[need:]:
        got = poly(x)
        if got != y:
            raise ConsistencyError(
                f"point ({x}, {y}) off the degree-{degree_bound} interpolant (expected {got})"
            )
    return poly
