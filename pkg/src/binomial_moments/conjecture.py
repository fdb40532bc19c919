"""Exact ansatz fitting over the rationals.

A candidate closed form is a sum of up to three terms, each

    prefactor(n) * (polynomial in n of bounded degree) / (product of linear forms),

with prefactor drawn from the structural vocabulary of the printed
formulas: the central binomial C(2n,n), the central bracket [2n,n], a
power 2^(2n+c), the sign (-1)^n, or 1.  The unknown polynomial
coefficients are linear, so they are determined exactly from oracle
samples by rational Gaussian elimination and then checked on holdout
points disjoint from the fit.  A candidate is only ``verified`` when
every holdout point matches exactly; with no holdout it can only be
``underdetermined``.

``rediscover_all`` refits every printed simplified formula from oracle
data alone and compares the recovered coefficients with the printed
ones.  ``explore_D_even`` runs the same machinery over a finite ansatz
catalogue for the even-power D sums, where no closed form is known; it
reports honest statuses and never fabricates a result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, Inconsistent, SingularSystem
from .exact import bracket, central_binomial
from .moments import MomentQuery, oracle
from .series import Polynomial

PREFACTORS = ("unit", "sign", "central", "bracket", "power2")


def _poly_str(coeffs: Sequence[Fraction], var: str = "n") -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}")
        else:
            parts.append(f"{c}*{var}^{i}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class AnsatzTerm:
    """One structured term: prefactor * poly(deg<=degree) / prod(a*n+b)."""

    prefactor: str
    degree: int
    roots: tuple[tuple[int, int], ...] = ()
    shift: int = 0  # only for power2: the c in 2^(2n+c)

    def __post_init__(self) -> None:
        if self.prefactor not in PREFACTORS:
            raise DomainError(f"unknown prefactor {self.prefactor!r}")
        if self.degree < 0:
            raise DomainError(f"degree must be >= 0, got {self.degree}")

    def prefactor_value(self, n: int) -> Fraction:
        if self.prefactor == "unit":
            return Fraction(1)
        if self.prefactor == "sign":
            return Fraction(-1 if n % 2 else 1)
        if self.prefactor == "central":
            return central_binomial(n)
        if self.prefactor == "bracket":
            return bracket(2 * n, n)
        return Fraction(2) ** (2 * n + self.shift)

    def root_product(self, n: int) -> Fraction:
        out = Fraction(1)
        for a, b in self.roots:
            out *= a * n + b
        return out

    def excluded_ns(self) -> set[int]:
        """Positive integers where a denominator root vanishes."""
        out = set()
        for a, b in self.roots:
            if a != 0 and (-b) % a == 0 and -b // a >= 1:
                out.add(-b // a)
        return out

    def describe(self) -> str:
        pf = {
            "unit": "1",
            "sign": "(-1)^n",
            "central": "binom(2n,n)",
            "bracket": "[2n,n]",
            "power2": f"2^(2n{self.shift:+d})" if self.shift else "2^(2n)",
        }[self.prefactor]
        s = f"{pf} * poly(deg<={self.degree})"
        if self.roots:
            den = " ".join(f"({_poly_str((b, a))})" for a, b in self.roots)
            s += f" / {den}"
        return s


@dataclass(frozen=True)
class Ansatz:
    """A sum of at most three structured terms."""

    terms: tuple[AnsatzTerm, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.terms) <= 3:
            raise DomainError(f"an ansatz has 1..3 terms, got {len(self.terms)}")

    @property
    def unknowns(self) -> int:
        return sum(t.degree + 1 for t in self.terms)

    def basis_at(self, n: int) -> list[Fraction]:
        row: list[Fraction] = []
        for t in self.terms:
            base = t.prefactor_value(n) / t.root_product(n)
            x = base
            row.append(base)
            for _ in range(t.degree):
                x *= n
                row.append(x)
        return row

    def excluded_ns(self) -> set[int]:
        out: set[int] = set()
        for t in self.terms:
            out |= t.excluded_ns()
        return out

    def describe(self) -> str:
        return "  +  ".join(t.describe() for t in self.terms)


@dataclass(frozen=True)
class ClosedFormCandidate:
    """A fitted candidate with its verification outcome."""

    family: str
    power: int
    ansatz: Ansatz
    coefficients: tuple[Fraction, ...]
    fitted_on: tuple[int, ...]
    verified_on: tuple[int, ...]
    status: str  # verified | refuted | underdetermined
    first_mismatch: Optional[int] = None

    def value_at(self, n: int) -> Fraction:
        return sum(
            (c * b for c, b in zip(self.coefficients, self.ansatz.basis_at(n))),
            Fraction(0),
        )

    def term_coefficients(self) -> list[tuple[AnsatzTerm, tuple[Fraction, ...]]]:
        out = []
        i = 0
        for t in self.ansatz.terms:
            out.append((t, self.coefficients[i : i + t.degree + 1]))
            i += t.degree + 1
        return out

    def formula(self) -> str:
        parts = []
        for t, cs in self.term_coefficients():
            if all(c == 0 for c in cs):
                continue
            pf = t.describe().split(" * ")[0]
            s = f"{pf} * ({_poly_str(cs)})"
            if t.roots:
                den = " ".join(f"({_poly_str((b, a))})" for a, b in t.roots)
                s += f" / {den}"
            parts.append(s)
        return "  +  ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "power": self.power,
            "ansatz": self.ansatz.describe(),
            "coefficients": [str(c) for c in self.coefficients],
            "fitted_on": list(self.fitted_on),
            "verified_on": list(self.verified_on),
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "formula": self.formula(),
        }


def solve_exact(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction]:
    """Solve a square or overdetermined-consistent system exactly.

    Gauss-Jordan elimination over Rational.  Raises SingularSystem when the
    columns are dependent (no unique solution) and Inconsistent when extra
    rows contradict the solution.
    """
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if len(rows) != len(matrix) or len(rows) != len(rhs):
        raise DomainError("matrix and rhs lengths differ")
    if not rows:
        raise SingularSystem("empty system")
    ncols = len(rows[0]) - 1
    if any(len(r) != ncols + 1 for r in rows):
        raise DomainError("ragged matrix")
    if len(rows) < ncols:
        raise SingularSystem(f"{len(rows)} equations for {ncols} unknowns")

    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            raise SingularSystem(f"no pivot available for column {c}")
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    for i in range(ncols, len(rows)):
        if rows[i][ncols] != 0:
            raise Inconsistent(f"row {i} reduces to 0 = {rows[i][ncols]}")
    return [rows[i][ncols] for i in range(ncols)]


def fit(
    family: str,
    power: int,
    ansatz: Ansatz,
    sample_ns: Sequence[int],
    holdout_ns: Sequence[int],
) -> ClosedFormCandidate:
    """Fit the ansatz coefficients to oracle values exactly, then verify.

    The first `ansatz.unknowns` sample points (in increasing order) build a
    square system; remaining samples join the holdout as verification
    points.  Status is ``verified`` only when every verification point
    matches exactly and at least one exists; a mismatch yields ``refuted``
    with the smallest mismatching n recorded.
    """
    samples = sorted(sample_ns)
    holdout = sorted(holdout_ns)
    if len(set(samples)) != len(samples) or len(set(holdout)) != len(holdout):
        raise DomainError("duplicate nodes")
    if set(samples) & set(holdout):
        raise DomainError("holdout nodes must be disjoint from sample nodes")
    excluded = ansatz.excluded_ns()
    for n in samples + holdout:
        if n < 1:
            raise DomainError(f"nodes must be >= 1, got {n}")
        if n in excluded:
            raise DomainError(f"node n={n} hits a denominator root of the ansatz")
    u = ansatz.unknowns
    if len(samples) < u:
        raise DomainError(f"{u} unknowns need at least {u} sample nodes, got {len(samples)}")

    fitted = samples[:u]
    matrix = [ansatz.basis_at(n) for n in fitted]
    rhs = [oracle(MomentQuery(family, power, n)) for n in fitted]
    coeffs = tuple(solve_exact(matrix, rhs))

    verify_pts = sorted(samples[u:] + holdout)
    cand = ClosedFormCandidate(
        family, power, ansatz, coeffs, tuple(fitted), tuple(verify_pts), "underdetermined"
    )
    if not verify_pts:
        return cand
    for n in verify_pts:
        if cand.value_at(n) != oracle(MomentQuery(family, power, n)):
            return ClosedFormCandidate(
                family, power, ansatz, coeffs, tuple(fitted), tuple(verify_pts), "refuted", n
            )
    return ClosedFormCandidate(
        family, power, ansatz, coeffs, tuple(fitted), tuple(verify_pts), "verified"
    )


# ---------------------------------------------------------------------------
# The printed formulas as fitting targets.
# ---------------------------------------------------------------------------


def _odd_roots(count: int, first: int) -> tuple[tuple[int, int], ...]:
    """((2, -first), (2, -first-2), ...) -- denominators (2n-first)(2n-first-2)..."""
    return tuple((2, -(first + 2 * i)) for i in range(count))


def _int_roots(count: int) -> tuple[tuple[int, int], ...]:
    """((1, -1), ..., (1, -count)) -- denominators (n-1)...(n-count)."""
    return tuple((1, -j) for j in range(1, count + 1))


def _P(*coeffs) -> Polynomial:
    return Polynomial([Fraction(c) for c in coeffs])


_N = _P(0, 1)  # the polynomial n


def _pad(p: Polynomial, degree: int) -> tuple[Fraction, ...]:
    if p.degree > degree:
        raise DomainError(f"printed numerator degree {p.degree} exceeds ansatz degree {degree}")
    return tuple(list(p.coeffs) + [Fraction(0)] * (degree - p.degree))


@dataclass(frozen=True)
class PrintedForm:
    """One printed formula in fit-ready shape: ansatz plus expected coefficients."""

    label: str
    family: str
    power: int
    ansatz: Ansatz
    expected: tuple[Fraction, ...]
    region_note: Optional[str] = None


def _printed(label, family, power, term_specs, note=None) -> PrintedForm:
    """term_specs: list of (AnsatzTerm, numerator Polynomial, scale Fraction)."""
    terms = []
    expected: list[Fraction] = []
    for term, numerator, scale in term_specs:
        terms.append(term)
        expected.extend(_pad(numerator * Fraction(scale), term.degree))
    return PrintedForm(label, family, power, Ansatz(tuple(terms)), tuple(expected), note)


# Numerator polynomials of the printed formulas, lowest degree first.
_A_EVEN = {
    1: _P(1),
    2: _P(-1, 3),
    3: _P(4, -15, 15),
    4: _P(-34, 147, -210, 105),
    5: _P(496, -2370, 4095, -3150, 945),
}
_A_ODD = {0: _P(1), 1: _P(1), 2: _P(-1, 2), 3: _P(3, -8, 6), 4: _P(-17, 54, -60, 24)}
_B_ODD = {
    0: _P(0, 1),
    1: _P(0, 0, -1),
    2: _P(0, 0, -1, 4),
    3: _P(0, 0, -5, 24, -34),
    4: _P(0, 0, -63, 344, -672, 496),
}
_C_EVEN = {
    1: _P(1),
    2: _P(1, -5, -1, 2),
    3: _P(5, -31, 40, 30, -25, -8, 4),
    4: _P(63, -443, 855, -175, -847, 231, 301, -62, -36, 8),
    5: _P(1575, -12077, 28666, -19460, -17070, 23466, 4368, -9348, -735, 1680, -8, -128, 16),
}
_C_ODD_SIGN = {
    0: (_P(1), Fraction(1, 8)),
    1: (_P(1, -6, 0, 4), Fraction(1, 32)),
    2: (_P(3, -22, 40, 20, -40, -8, 8), Fraction(1, 64)),
    3: (_P(51, -422, 1068, -532, -1288, 840, 616, -272, -96, 32), Fraction(1, 256)),
    4: (
        _P(465, -4178, 12576, -12532, -7224, 18792, -840, -9744, 864, 2208, -224, -192, 32),
        Fraction(1, 256),
    ),
}
_C_ODD_BRACKET = {
    0: (_P(1), Fraction(1, 8)),
    1: (_P(1), Fraction(-1, 32)),
    2: (_P(-3, 4), Fraction(1, 64)),
    3: (_P(51, -116, 68), Fraction(-1, 256)),
    4: (_P(-465, 1388, -1416, 496), Fraction(1, 256)),
}
_D_ODD_BRACKET = {
    0: (_P(1), Fraction(1, 4)),
    1: (_P(1), Fraction(1, 8)),
    2: (_P(-1, 1), Fraction(1, 4)),
    3: (_P(17, -28, 12), Fraction(1, 16)),
    4: (_P(-31, 66, -48, 12), Fraction(1, 4)),
}
_D_ODD_REST = {
    0: (_P(1), Fraction(1, 4)),
    1: (_P(-1, 4, 2), Fraction(1, 8)),
    2: (_P(1, -5, 3, 4, 1), Fraction(1, 4)),
    3: (_P(-17, 96, -108, -28, 42, 24, 4), Fraction(1, 16)),
    4: (_P(31, -190, 283, -52, -98, 2, 22, 8, 1), Fraction(1, 4)),
}

_TWO_N_MINUS_1 = _P(-1, 2)
_TWO_N_PLUS_1 = _P(1, 2)


def printed_forms() -> list[PrintedForm]:
    """Every printed simplified formula as an exact fitting target."""
    forms: list[PrintedForm] = [
        _printed(
            "A0",
            "A",
            0,
            [
                (AnsatzTerm("power2", 0, shift=-1), _P(1), 1),
                (AnsatzTerm("central", 0), _P(1), Fraction(-1, 2)),
            ],
        ),
        _printed("B0", "B", 0, [(AnsatzTerm("central", 0), _P(1), Fraction(1, 2))]),
        _printed(
            "C0",
            "C",
            0,
            [
                (AnsatzTerm("bracket", 0), _P(1), Fraction(1, 2)),
                (AnsatzTerm("sign", 0, roots=_odd_roots(1, 1)), _P(1), Fraction(1, 2)),
            ],
        ),
    ]
    for t, p in _A_EVEN.items():
        forms.append(
            _printed(
                f"A{2 * t}",
                "A",
                2 * t,
                [(AnsatzTerm("power2", t, shift=-(1 + t)), _N * p, 1)],
            )
        )
    for t, p in _A_ODD.items():
        numerator = _N * p if t == 0 else _N * _N * p
        forms.append(
            _printed(
                f"A{2 * t + 1}",
                "A",
                2 * t + 1,
                [(AnsatzTerm("central", t + 1), numerator, Fraction(1, 2))],
            )
        )
    for t, p in _B_ODD.items():
        forms.append(
            _printed(
                f"B{2 * t + 1}",
                "B",
                2 * t + 1,
                [(AnsatzTerm("central", t + 1, roots=_odd_roots(t + 1, 1)), p, Fraction(1, 2))],
            )
        )
    for t in range(1, 5):
        # The even alternating binomial sums vanish identically for n > t.
        forms.append(
            _printed(
                f"B{2 * t}",
                "B",
                2 * t,
                [(AnsatzTerm("central", 1), _P(0), 1)],
                note=f"value 0, valid for n > {t}",
            )
        )
    for t, p in _C_EVEN.items():
        forms.append(
            _printed(
                f"C{2 * t}",
                "C",
                2 * t,
                [
                    (
                        AnsatzTerm("sign", 3 * t - 1, roots=_odd_roots(t, 3)),
                        _N * _P(1, 1) * p,
                        Fraction(1, 2),
                    )
                ],
            )
        )
    for t in range(5):
        sp, ss = _C_ODD_SIGN[t]
        bp, bs = _C_ODD_BRACKET[t]
        forms.append(
            _printed(
                f"C{2 * t + 1}",
                "C",
                2 * t + 1,
                [
                    (AnsatzTerm("sign", 3 * t + 1, roots=_int_roots(t + 1)), _TWO_N_PLUS_1 * sp, ss),
                    (
                        AnsatzTerm("bracket", t + 1, roots=_int_roots(t + 1)),
                        _TWO_N_MINUS_1 * bp if t == 0 else _TWO_N_MINUS_1 * _TWO_N_MINUS_1 * bp,
                        bs,
                    ),
                ],
                note=f"valid for n > {t + 1}",
            )
        )
    for t in range(5):
        bp, bs = _D_ODD_BRACKET[t]
        rp, rs = _D_ODD_REST[t]
        forms.append(
            _printed(
                f"D{2 * t + 1}",
                "D",
                2 * t + 1,
                [
                    (
                        AnsatzTerm("bracket", t + 1),
                        _TWO_N_MINUS_1 * bp if t == 0 else _TWO_N_MINUS_1 * _TWO_N_MINUS_1 * bp,
                        bs,
                    ),
                    (AnsatzTerm("unit", 2 * t), rp, rs),
                ],
            )
        )
    forms.sort(key=lambda f: (f.family, f.power))
    return forms


@dataclass(frozen=True)
class RediscoveryEntry:
    printed: PrintedForm
    candidate: ClosedFormCandidate

    @property
    def ok(self) -> bool:
        return (
            self.candidate.status == "verified"
            and self.candidate.coefficients == self.printed.expected
        )

    def to_dict(self) -> dict:
        return {
            "label": self.printed.label,
            "family": self.printed.family,
            "power": self.printed.power,
            "status": self.candidate.status,
            "coefficients_match_printed": self.ok,
            "expected": [str(c) for c in self.printed.expected],
            "candidate": self.candidate.to_dict(),
            "note": self.printed.region_note,
        }


@dataclass
class RediscoveryReport:
    entries: list[RediscoveryEntry] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[RediscoveryEntry]:
        return [e for e in self.entries if not e.ok]

    def to_dict(self) -> dict:
        return {
            "all_ok": self.all_ok,
            "entries": [e.to_dict() for e in self.entries],
        }


def fitting_nodes(power: int, ansatz: Ansatz, holdout: int, n_start: Optional[int] = None):
    """Sample/holdout nodes: consecutive integers from power+2 (clears every
    printed guard and denominator root), holdout directly after the samples."""
    n0 = n_start if n_start is not None else power + 2
    excluded = ansatz.excluded_ns()
    if excluded:
        n0 = max(n0, max(excluded) + 1)
    u = ansatz.unknowns
    samples = list(range(n0, n0 + u))
    hold = list(range(n0 + u, n0 + u + holdout))
    return samples, hold


def rediscover_all(holdout: int = 10) -> RediscoveryReport:
    """Refit every printed formula from oracle data; compare coefficients."""
    report = RediscoveryReport()
    for pf in printed_forms():
        samples, hold = fitting_nodes(pf.power, pf.ansatz, holdout)
        cand = fit(pf.family, pf.power, pf.ansatz, samples, hold)
        report.entries.append(RediscoveryEntry(pf, cand))
    return report


# ---------------------------------------------------------------------------
# Search for the open case: even-power D sums.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    """Bounds for the even-D ansatz catalogue."""

    prefactors: tuple[str, ...] = PREFACTORS
    pair_shapes: tuple[tuple[str, str], ...] = (
        ("bracket", "unit"),
        ("sign", "bracket"),
        ("sign", "unit"),
    )
    max_degree: int = 4
    max_roots: int = 2
    holdout: int = 10
    n_start: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_degree < 0 or self.max_roots < 0 or self.holdout < 0:
            raise DomainError("search bounds must be >= 0")


def _root_options(max_roots: int) -> list[tuple[tuple[int, int], ...]]:
    opts: list[tuple[tuple[int, int], ...]] = [()]
    for r in range(1, max_roots + 1):
        opts.append(_odd_roots(r, 3))  # (2n-3)(2n-5)...
        opts.append(_odd_roots(r, 1))  # (2n-1)(2n-3)...
        opts.append(_int_roots(r))  # (n-1)(n-2)...
    return opts


def search_catalogue(config: SearchConfig) -> list[Ansatz]:
    """Deterministic, finite catalogue of candidate shapes."""
    out: list[Ansatz] = []
    roots_menu = _root_options(config.max_roots)
    for pf in config.prefactors:
        for roots in roots_menu:
            for d in range(config.max_degree + 1):
                out.append(Ansatz((AnsatzTerm(pf, d, roots),)))
    for p1, p2 in config.pair_shapes:
        if p1 not in config.prefactors or p2 not in config.prefactors:
            continue
        for roots in roots_menu:
            for d in range(config.max_degree + 1):
                out.append(Ansatz((AnsatzTerm(p1, d, roots), AnsatzTerm(p2, d, roots))))
    return out


def explore_D_even(m: int, config: SearchConfig = SearchConfig()) -> list[ClosedFormCandidate]:
    """Fit every catalogue shape to the even sum D_{2m} and report honestly.

    Returns one candidate per attempted shape, with its exact status;
    shapes that produce a singular system are skipped.  No closed form is
    known for this family/parity, so a ``verified`` candidate would be a
    genuine (conjectural) discovery; an empty or fully refuted list is the
    expected outcome.
    """
    if m < 0:
        raise DomainError(f"half exponent must be >= 0, got {m}")
    power = 2 * m
    out: list[ClosedFormCandidate] = []
    for ansatz in search_catalogue(config):
        samples, hold = fitting_nodes(power, ansatz, config.holdout, config.n_start)
        try:
            cand = fit("D", power, ansatz, samples, hold)
        except (SingularSystem, Inconsistent):
            continue
        out.append(cand)
    return out


def family_ansatz(family: str, parity: str, t: int) -> Optional[Ansatz]:
    """The structural shape of a family's closed forms for half exponent t.

    Extends the printed shapes to any t; returns None for even D (open).
    """
    if family == "A" and parity == "even":
        return Ansatz((AnsatzTerm("power2", t, shift=-(1 + t)),))
    if family == "A" and parity == "odd":
        return Ansatz((AnsatzTerm("central", t + 1),))
    if family == "B" and parity == "even":
        return Ansatz((AnsatzTerm("central", 1),))  # the zero formula for n > t
    if family == "B" and parity == "odd":
        return Ansatz((AnsatzTerm("central", t + 1, roots=_odd_roots(t + 1, 1)),))
    if family == "C" and parity == "even":
        return Ansatz((AnsatzTerm("sign", max(3 * t - 1, 0), roots=_odd_roots(t, 3)),))
    if family == "C" and parity == "odd":
        return Ansatz(
            (
                AnsatzTerm("sign", 3 * t + 1, roots=_int_roots(t + 1)),
                AnsatzTerm("bracket", t + 1, roots=_int_roots(t + 1)),
            )
        )
    if family == "D" and parity == "odd":
        return Ansatz((AnsatzTerm("bracket", t + 1), AnsatzTerm("unit", 2 * t)))
    return None
