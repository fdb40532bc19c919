"""Command line surface: evaluate, verify, discover, tabulate.

Exit codes are stable: 0 success, 1 verification mismatch, 2 usage
error, 3 no closed form known.  Results go to stdout (or ``--out``),
diagnostics to stderr.  Every number printed is an exact rational
string ``p/q`` (``q`` omitted when 1).  The ``--jobs`` flag (or the
``MOMENTS_JOBS`` variable) is a parallelism hint only; output is always
sorted by (family, m, n) and identical for identical config and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .conjecture import (
    SearchConfig,
    explore_D_even,
    family_ansatz,
    fit,
    fitting_nodes,
    printed_forms,
    search_catalogue,
)
from .errors import MomentsError, NoClosedFormKnown
from .moments import COROLLARIES, FAMILIES, METHODS, EvalResult, MomentQuery, evaluate
from .verify import VerifyConfig, run_verification

FORMATS = ("json", "csv", "latex", "markdown")


@dataclass(frozen=True)
class RunConfig:
    """Validated grid/run options shared by the table and verify commands."""

    families: tuple[str, ...] = FAMILIES
    m_max: int = 8
    n_max: int = 30
    methods: tuple[str, ...] = METHODS
    format: str = "csv"
    jobs: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.families or any(f not in FAMILIES for f in self.families):
            raise MomentsError(f"families must be a nonempty subset of {FAMILIES}")
        if not self.methods or any(m not in METHODS for m in self.methods):
            raise MomentsError(f"methods must be a nonempty subset of {METHODS}")
        if self.format not in FORMATS:
            raise MomentsError(f"format must be one of {FORMATS}")
        if self.m_max < 0 or self.n_max < 1 or self.jobs < 1:
            raise MomentsError("require m_max >= 0, n_max >= 1, jobs >= 1")


def _parse_families(text: str) -> tuple[str, ...]:
    raw = [p for chunk in text.upper().split(",") for p in chunk.strip()]
    fams = tuple(f for f in FAMILIES if f in raw)
    unknown = set(raw) - set(FAMILIES)
    if unknown:
        raise MomentsError(f"unknown families: {sorted(unknown)}")
    return fams


def _parse_methods(text: str) -> tuple[str, ...]:
    raw = [p.strip() for p in text.split(",") if p.strip()]
    meths = tuple(m for m in METHODS if m in raw)
    unknown = set(raw) - set(METHODS)
    if unknown:
        raise MomentsError(f"unknown methods: {sorted(unknown)}")
    return meths


def _jobs(args: argparse.Namespace) -> int:
    env = os.environ.get("MOMENTS_JOBS")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise MomentsError(f"MOMENTS_JOBS must be an integer, got {env!r}") from None
    return args.jobs


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


def cmd_eval(args: argparse.Namespace) -> int:
    q = MomentQuery(args.family.upper(), args.m, args.n)
    res: EvalResult = evaluate(q, args.method)
    print(f"method={res.method}", file=sys.stderr)
    if res.validity_note:
        print(f"note={res.validity_note}", file=sys.stderr)
    _emit(str(res.value), args.out)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    run = RunConfig(
        families=_parse_families(args.families),
        m_max=args.m_max,
        n_max=args.n_max,
        jobs=_jobs(args),
        seed=args.seed,
        format="json",
    )
    config = VerifyConfig(run.families, run.m_max, run.n_max, run.seed)
    report = run_verification(config)
    _emit(json.dumps(report.to_dict(), indent=2), args.out)
    if not report.all_pass:
        first = report.first_failure()
        print(f"FAIL {first.name}: {first.witness}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# discover
# ---------------------------------------------------------------------------


def cmd_discover(args: argparse.Namespace) -> int:
    family = args.family.upper()
    parity = args.parity.lower()
    if family not in FAMILIES or parity not in ("even", "odd") or args.m < 0:
        raise MomentsError("discover needs FAMILY in A-D, PARITY even|odd, M >= 0")
    t = args.m
    power = 2 * t if parity == "even" else 2 * t + 1

    if family == "D" and parity == "even":
        config = SearchConfig(
            max_degree=args.max_degree,
            max_roots=args.max_roots,
            holdout=args.holdout,
            n_start=args.n_start,
        )
        catalogue = search_catalogue(config)
        candidates = explore_D_even(t, config)
        verified = [c for c in candidates if c.status == "verified"]
        payload = {
            "family": family,
            "power": power,
            "mode": "open-case-search",
            "attempted": len(catalogue),
            "skipped_singular": len(catalogue) - len(candidates),
            "verified_count": len(verified),
            "candidates": [c.to_dict() for c in candidates],
        }
        _emit(json.dumps(payload, indent=2), args.out)
        return 0

    printed = {(pf.family, pf.power): pf for pf in printed_forms()}.get((family, power))
    ansatz = printed.ansatz if printed else family_ansatz(family, parity, t)
    samples, hold = fitting_nodes(power, ansatz, args.holdout, args.n_start)
    candidate = fit(family, power, ansatz, samples, hold)
    payload = {
        "family": family,
        "power": power,
        "mode": "closed-form-fit",
        "candidate": candidate.to_dict(),
        "expected": [str(c) for c in printed.expected] if printed else None,
        "matches_printed": (
            candidate.status == "verified" and candidate.coefficients == printed.expected
        )
        if printed
        else None,
        "note": printed.region_note if printed else None,
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _table_cells(run: RunConfig) -> list[tuple[str, int, int, dict[str, EvalResult]]]:
    """(family, m, n, per-method results) for cells where every requested
    method is defined; the exact values necessarily agree."""
    cells = []
    for family in run.families:
        for m in range(0, run.m_max + 1):
            for n in range(1, run.n_max + 1):
                q = MomentQuery(family, m, n)
                results: dict[str, EvalResult] = {}
                try:
                    for method in run.methods:
                        results[method] = evaluate(q, method)
                except MomentsError:
                    continue
                values = {r.value for r in results.values()}
                if len(values) != 1:  # impossible unless an evaluator is broken
                    raise MomentsError(f"methods disagree at {family} m={m} n={n}")
                cells.append((family, m, n, results))
    return cells


def _render_values(run: RunConfig, cells) -> str:
    if run.format == "json":
        records = []
        for family, m, n, results in cells:
            for method in run.methods:
                r = results[method]
                records.append(
                    {
                        "family": family,
                        "m": m,
                        "n": n,
                        "method": method,
                        "value": str(r.value),
                        "note": r.validity_note,
                    }
                )
        return json.dumps(records, indent=2)
    if run.format == "csv":
        lines = ["family,m,n,value"]
        for family, m, n, results in cells:
            lines.append(f"{family},{m},{n},{results[run.methods[0]].value}")
        return "\n".join(lines)
    if run.format == "markdown":
        lines = ["| family | m | n | value |", "| --- | --- | --- | --- |"]
        for family, m, n, results in cells:
            lines.append(f"| {family} | {m} | {n} | {results[run.methods[0]].value} |")
        return "\n".join(lines)
    # latex: one tabular per family
    blocks = []
    for family in run.families:
        rows = [c for c in cells if c[0] == family]
        if not rows:
            continue
        lines = [
            f"% family {family}",
            r"\begin{tabular}{rrr}",
            r"$m$ & $n$ & value \\ \hline",
        ]
        for _, m, n, results in rows:
            lines.append(f"{m} & {n} & ${results[run.methods[0]].value}$ " + r"\\")
        lines.append(r"\end{tabular}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def _render_corollaries(run: RunConfig) -> str:
    entries = [
        (family, m, e)
        for (family, m), e in sorted(COROLLARIES.items())
        if family in run.families and m <= run.m_max
    ]
    if run.format == "json":
        records = [
            {"family": family, "m": m, "min_n": e.min_n, "formula": e.formula}
            for family, m, e in entries
        ]
        return json.dumps(records, indent=2)
    if run.format == "csv":
        lines = ["family,m,min_n,formula"]
        for family, m, e in entries:
            lines.append(f'{family},{m},{e.min_n},"{e.formula}"')
        return "\n".join(lines)
    if run.format == "markdown":
        lines = ["| family | m | min n | formula |", "| --- | --- | --- | --- |"]
        for family, m, e in entries:
            lines.append(f"| {family} | {m} | {e.min_n} | `{e.formula}` |")
        return "\n".join(lines)
    blocks = []
    for family in run.families:
        rows = [(m, e) for fam, m, e in entries if fam == family]
        if not rows:
            continue
        lines = [
            f"% family {family}",
            r"\begin{tabular}{rrl}",
            r"$m$ & guard & formula \\ \hline",
        ]
        for m, e in rows:
            guard = f"$n \\ge {e.min_n}$" if e.min_n > 1 else "--"
            lines.append(f"{m} & {guard} & ${e.formula}$ " + r"\\")
        lines.append(r"\end{tabular}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def cmd_table(args: argparse.Namespace) -> int:
    run = RunConfig(
        families=_parse_families(args.families),
        m_max=args.m_max,
        n_max=args.n_max,
        methods=_parse_methods(args.methods),
        format=args.format,
        jobs=_jobs(args),
        seed=args.seed,
    )
    if args.corollaries:
        _emit(_render_corollaries(run), args.out)
    else:
        _emit(_render_values(run, _table_cells(run)), args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moments",
        description="Exact evaluation and verification of binomial moment sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one moment exactly")
    p_eval.add_argument("family", help="A, B, C or D")
    p_eval.add_argument("m", type=int, help="full power exponent, >= 0")
    p_eval.add_argument("n", type=int, help="size parameter, >= 1")
    p_eval.add_argument(
        "method", nargs="?", default="oracle", choices=METHODS, help="evaluation route"
    )
    p_eval.add_argument("--out", help="write the value to this file instead of stdout")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="run the exact invariant suite")
    p_verify.add_argument("--families", default="A,B,C,D")
    p_verify.add_argument("--m-max", type=int, default=8)
    p_verify.add_argument("--n-max", type=int, default=30)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int, default=1, help="parallelism hint")
    p_verify.add_argument("--out", help="write the JSON report to this file")
    p_verify.set_defaults(func=cmd_verify)

    p_disc = sub.add_parser("discover", help="fit closed-form candidates from oracle data")
    p_disc.add_argument("family", help="A, B, C or D")
    p_disc.add_argument("parity", help="even or odd")
    p_disc.add_argument("m", type=int, help="half exponent: power is 2m (even) or 2m+1 (odd)")
    p_disc.add_argument("--max-degree", type=int, default=4)
    p_disc.add_argument("--max-roots", type=int, default=2)
    p_disc.add_argument("--holdout", type=int, default=10)
    p_disc.add_argument("--n-start", type=int, default=None)
    p_disc.add_argument("--out", help="write the JSON report to this file")
    p_disc.set_defaults(func=cmd_discover)

    p_table = sub.add_parser("table", help="value grids or the printed-formula table")
    p_table.add_argument("--families", default="A,B,C,D")
    p_table.add_argument("--m-max", type=int, default=8)
    p_table.add_argument("--n-max", type=int, default=30)
    p_table.add_argument("--methods", default="oracle,theorem,corollary")
    p_table.add_argument("--format", default="csv", choices=FORMATS)
    p_table.add_argument(
        "--corollaries", action="store_true", help="emit the printed-formula table"
    )
    p_table.add_argument("--seed", type=int, default=0)
    p_table.add_argument("--jobs", type=int, default=1, help="parallelism hint")
    p_table.add_argument("--out", help="write the table to this file")
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NoClosedFormKnown as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MomentsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
