"""Command-line front end.

Subcommands: kolakoski, avoided, gf, series, profile, bounds, quasifit,
report, verify.  Results go to standard output, progress to standard error.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cost-ceiling
refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .automaton import DegreeProfile, EmptyLanguageError, degree_profile
from .avoided import CollisionError, avoided_set, read_word_file
from .bounds import best_bound, bound_from_denominator, decimal
from .cluster import weight_gf, weight_series
from .polynomials import Series, format_terms
from .quasipoly import fit_quasipoly, semi_rigorous_bound, successive_maxima
from .verification import DEFAULT_TABLE_TERMS, run_checks, words_for_depth
from .words import kolakoski_prefix

# Refuse series-backend report jobs above this many (terms x words) without
# --force; the automaton backend has no ceiling.
GJ_COST_CEILING = 20_000

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_COST_CEILING = 3


class CostCeilingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ReportRow:
    """One depth of the results table."""

    d: int
    set_size: int
    N: int
    backend: str
    n: int | None = None
    epsilon: Fraction | None = None
    error: str | None = None

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "set_size": self.set_size,
            "N": self.N,
            "n": self.n,
            "epsilon": None if self.epsilon is None else str(self.epsilon),
            "backend": self.backend,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--csv", action="store_true", help="emit CSV")
    parser.add_argument(
        "--threads", type=int, default=1, metavar="K",
        help="worker budget (results are bit-identical for any value)",
    )
    parser.add_argument(
        "--force", action="store_true",
        help="run series-backend jobs above the cost ceiling",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kolafreq",
        description="Bounds on the limiting frequency of 1 in the Kolakoski word.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kolakoski", help="print a prefix of the Kolakoski word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--first", type=int, choices=(1, 2), default=2)
    _common_flags(p)

    p = sub.add_parser("avoided", help="print the avoided words of levels 1..d")
    p.add_argument("--d", type=int, required=True)
    _common_flags(p)

    p = sub.add_parser("gf", help="closed-form weight enumerator for a word set")
    p.add_argument("--words", required=True, metavar="FILE")
    _common_flags(p)

    p = sub.add_parser("series", help="truncated weight series for a word set")
    p.add_argument("--words", required=True, metavar="FILE")
    p.add_argument("--terms", type=int, required=True, metavar="N")
    _common_flags(p)

    p = sub.add_parser("profile", help="per-length min/max ones-counts")
    p.add_argument("--words", required=True, metavar="FILE")
    p.add_argument("--terms", type=int, required=True, metavar="N")
    _common_flags(p)

    p = sub.add_parser("bounds", help="frequency bound for a word set")
    p.add_argument("--words", required=True, metavar="FILE")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--gf", action="store_true",
                       help="bound from the denominator (default)")
    group.add_argument("--profile-terms", type=int, metavar="N",
                       help="best per-term bound over a length-N profile")
    _common_flags(p)

    p = sub.add_parser("quasifit", help="fit a linear quasi-polynomial to a profile")
    p.add_argument("--profile", required=True, metavar="JSON",
                   help="profile file as produced by `profile --json`")
    p.add_argument("--max-modulus", type=int, default=None, metavar="M")
    _common_flags(p)

    p = sub.add_parser("report", help="reproduce the per-depth results table")
    p.add_argument("--d", default="1-6", metavar="SPEC",
                   help="depths, e.g. 3, 1-4, or 1,3,5 (default 1-6)")
    p.add_argument("--terms", default=None, metavar="LIST",
                   help="comma list of N per depth (default: table values)")
    p.add_argument("--backend", choices=("automaton", "gj-series"),
                   default="automaton")
    _common_flags(p)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    _common_flags(p)

    return parser


def _parse_depths(spec: str) -> list[int]:
    depths: list[int] = []
    for part in spec.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            depths.extend(range(int(lo), int(hi) + 1))
        elif part:
            depths.append(int(part))
    if not depths or any(d < 1 for d in depths):
        raise ValueError(f"bad depth spec {spec!r}")
    return depths


def _poly_json(poly) -> list[list]:
    return [[a, b, str(c)] for (a, b), c in poly.sorted_terms()]


def _series_json(series: Series) -> list[list[list]]:
    out = []
    for n, row in enumerate(series.slices):
        out.append([[a, n - a, str(c)] for a, c in enumerate(row) if c])
    return out


def _progress_printer(label: str):
    def hook(done: int, total: int) -> None:
        if total and (done % max(1, total // 20) == 0 or done == total):
            print(f"{label}: {done}/{total}", file=sys.stderr)

    return hook


def cmd_kolakoski(args) -> int:
    print(kolakoski_prefix(args.n, args.first))
    return EXIT_OK


def cmd_avoided(args) -> int:
    for word in avoided_set(args.d).words:
        print(word)
    return EXIT_OK


def cmd_gf(args) -> int:
    gf = weight_gf(read_word_file(args.words))
    if args.json:
        print(json.dumps(
            {"numerator": _poly_json(gf.numerator),
             "denominator": _poly_json(gf.denominator)}))
    else:
        print(f"numerator   = {format_terms(gf.numerator.sorted_terms())}")
        print(f"denominator = {format_terms(gf.denominator.sorted_terms())}")
    return EXIT_OK


def cmd_series(args) -> int:
    series = weight_series(
        read_word_file(args.words), args.terms,
        progress=_progress_printer("series") if args.terms >= 200 else None,
    )
    if args.json:
        print(json.dumps(_series_json(series)))
    else:
        for n in range(series.order + 1):
            print(f"t^{n}: {series.poly(n)}")
    return EXIT_OK


def _print_profile(profile: DegreeProfile, as_json: bool, as_csv: bool) -> None:
    if as_json:
        print(json.dumps({
            "N": profile.N,
            "min_ones": list(profile.min_ones),
            "max_ones": list(profile.max_ones),
        }))
    elif as_csv:
        print("n,min_ones,max_ones")
        for n in range(profile.N + 1):
            print(f"{n},{profile.min_ones[n]},{profile.max_ones[n]}")
    else:
        for n in range(profile.N + 1):
            print(f"n={n}: min_ones={profile.min_ones[n]} max_ones={profile.max_ones[n]}")


def cmd_profile(args) -> int:
    profile = degree_profile(read_word_file(args.words), args.terms)
    _print_profile(profile, args.json, args.csv)
    return EXIT_OK


def cmd_bounds(args) -> int:
    words = read_word_file(args.words)
    if args.profile_terms is not None:
        n, bound = best_bound(degree_profile(words, args.profile_terms))
        extra = {"n": n}
    else:
        bound = bound_from_denominator(weight_gf(words))
        extra = {}
    if args.json:
        print(json.dumps({
            "epsilon": str(bound.epsilon),
            "epsilon_decimal": decimal(bound.epsilon),
            "lower": str(bound.lower),
            "upper": str(bound.upper),
            "rigor": bound.rigor,
            "provenance": bound.provenance,
            **extra,
        }))
    else:
        if extra:
            print(f"best term: n = {extra['n']}")
        print(bound.render())
    return EXIT_OK


def cmd_quasifit(args) -> int:
    with open(args.profile, encoding="utf-8") as fh:
        data = json.load(fh)
    min_ones = data["min_ones"]
    fit = fit_quasipoly(min_ones, args.max_modulus)
    maxima = successive_maxima(min_ones, fit)
    bound = semi_rigorous_bound(fit, maxima)
    print(json.dumps({
        "modulus": fit.modulus,
        "slope": fit.slope,
        "constants": list(fit.constants),
        "onset": fit.onset,
        "limit": f"{fit.slope}/{fit.modulus}",
        "epsilon": str(bound.epsilon),
        "maxima_formula": maxima.formula(),
        "attained": maxima.attained,
    }))
    return EXIT_OK


def cmd_report(args) -> int:
    depths = _parse_depths(args.d)
    if args.terms is None:
        terms = [DEFAULT_TABLE_TERMS.get(d, 200) for d in depths]
    else:
        requested = [int(x) for x in str(args.terms).split(",")]
        terms = requested * len(depths) if len(requested) == 1 else requested
        if len(terms) != len(depths):
            raise ValueError("--terms must list one value, or one per depth")
    rows = []
    for d, N in zip(depths, terms):
        words = words_for_depth(d)
        if args.backend == "gj-series" and N * len(words) > GJ_COST_CEILING and not args.force:
            raise CostCeilingError(
                f"d={d}: N*|S| = {N * len(words)} exceeds the ceiling "
                f"{GJ_COST_CEILING}; pass --force to run anyway"
            )
        try:
            if args.backend == "automaton":
                profile = degree_profile(words, N)
            else:
                series = weight_series(
                    words, N, progress=_progress_printer(f"series d={d}"))
                mins = tuple(series.min_ones(n) for n in range(N + 1))
                maxs = tuple(series.max_ones(n) for n in range(N + 1))
                profile = DegreeProfile(words, N, mins, maxs)
            n, bound = best_bound(profile)
            row = ReportRow(d, len(words), N, args.backend, n, bound.epsilon)
        except ValueError as exc:
            row = ReportRow(d, len(words), N, args.backend, error=str(exc))
        rows.append(row)
    if args.json:
        print(json.dumps([r.to_json() for r in rows]))
    elif args.csv:
        print("d,set_size,N,n,epsilon,backend")
        for r in rows:
            eps = "" if r.epsilon is None else str(r.epsilon)
            n = "" if r.n is None else r.n
            print(f"{r.d},{r.set_size},{r.N},{n},{eps},{r.backend}")
    else:
        print(f"{'d':>2} {'|S_d|':>6} {'N':>5} {'n':>5} {'epsilon':>10} {'decimal':>11}  backend")
        for r in rows:
            if r.epsilon is None:
                print(f"{r.d:>2} {r.set_size:>6} {r.N:>5} {'-':>5} {'-':>10} "
                      f"{'-':>11}  {r.backend} ({r.error or 'no bound'})")
            else:
                print(f"{r.d:>2} {r.set_size:>6} {r.N:>5} {r.n:>5} "
                      f"{str(r.epsilon):>10} {decimal(r.epsilon):>11}  {r.backend}")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_checks(args.level)
    failed = [r for r in results if not r.ok]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{r.name}: {status} ({r.seconds:.2f}s) - {r.detail}")
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed: "
              + ", ".join(r.name for r in failed))
        return EXIT_VERIFY_FAILED
    print(f"all {len(results)} checks passed")
    return EXIT_OK


_COMMANDS = {
    "kolakoski": cmd_kolakoski,
    "avoided": cmd_avoided,
    "gf": cmd_gf,
    "series": cmd_series,
    "profile": cmd_profile,
    "bounds": cmd_bounds,
    "quasifit": cmd_quasifit,
    "report": cmd_report,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CostCeilingError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_COST_CEILING
    except (ValueError, OSError, EmptyLanguageError, CollisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
