"""Command line interface for generation and theorem checking.

Commands::

    gen        write a generated point-set file
    incidence  count point/sphere incidences and check the deviation bound
    lemma-raa  difference-count table of the lifted paraboloid vs closed form
    identities mass and energy identities over seeded random pairs
    pinned     pinned-distance checks, average and fraction forms
    beck       determined-circles lower bound with poor-circle census

Every command emits one report (JSON by default) with the fixed
top-level keys command, q, d, seed, params, results, verdict. All
asserted quantities are exact integers or num/den strings; the theta
field is a display float and never decides a verdict.

Exit codes: 0 when checks hold or are vacuous, 1 when a checker
reports a violation or an internal cross-check fails, 2 for usage and
validation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import BudgetExceededError, InternalCheckError
from .field import make_field
from .generators import all_spheres, generate_points, generate_spheres, parse_shape
from .incidence import ENGINES, count_incidences, lifted_diff_table, rep_sum, additive_energy
from .pointfile import read_set, write_points
from .rng import SplitMix64, derive_seed
from .theorems import (
    check_beck,
    check_incidence_bound,
    check_pinned_average,
    check_pinned_fraction,
)

_TABLE_BUDGET = 100_000_000  # pair enumerations allowed for lemma-raa


class CliError(Exception):
    """Validation failure that should exit with code 2."""


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _parse_fraction(text: str, what: str) -> Fraction:
    try:
        f = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"{what} must be a rational like 1/2, got {text!r}") from None
    if not 0 < f < 1:
        raise CliError(f"{what} must lie strictly between 0 and 1, got {text}")
    return f


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqspheres",
        description="Exact incidence geometry checks over odd prime fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True, out=True):
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        if seed:
            p.add_argument("--seed", type=int, default=0, help="64-bit seed")
        if out:
            p.add_argument("--out", help="report destination (default stdout)")

    def point_source(p):
        p.add_argument("--q", type=int, help="field order, an odd prime")
        p.add_argument("--d", type=int, help="ambient dimension")
        p.add_argument("--points", help="point-set file")
        p.add_argument("--shape", help="generator shape, e.g. random:12")

    p = sub.add_parser("gen", help="generate a point-set file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--shape", required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="point-set file to write")

    p = sub.add_parser("incidence", help="count incidences, check the bound")
    point_source(p)
    p.add_argument("--spheres", required=True, help="file, 'all' or 'random:N'")
    p.add_argument("--engine", choices=ENGINES, default="bucketed")
    common(p)

    p = sub.add_parser(
        "lemma-raa",
        help="paraboloid difference table vs the closed-form counts",
    )
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    common(p, seed=False)

    p = sub.add_parser("identities", help="mass and energy identities")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, default=2, help="vector arity")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-size", type=int, default=32)
    common(p)

    p = sub.add_parser("pinned", help="pinned-distance consequence checks")
    point_source(p)
    p.add_argument("--epsilon", default="1/2", help="average-form parameter")
    p.add_argument("--alpha", default="1/2", help="fraction-form parameter")
    common(p)

    p = sub.add_parser("beck", help="determined-circles lower bound")
    point_source(p)
    common(p)

    return parser


def _field_dims(args) -> tuple:
    if args.q is None:
        raise CliError("--q is required when no points file supplies it")
    try:
        field = make_field(args.q)
    except (ValueError, TypeError) as exc:
        raise CliError(str(exc)) from None
    d = args.d if args.d is not None else 2
    if d < 1:
        raise CliError("--d must be at least 1")
    return field, d


def _load_points(args):
    """PointSet from --points or --shape, plus a provenance string."""
    if args.points and args.shape:
        raise CliError("give either --points or --shape, not both")
    if args.points:
        ps = read_set(args.points, expect_kind="points")
        if args.q is not None and ps.q != args.q:
            raise CliError(
                f"header mismatch: file has q={ps.q}, flags say q={args.q}"
            )
        if args.d is not None and ps.d != args.d:
            raise CliError(
                f"header mismatch: file has d={ps.d}, flags say d={args.d}"
            )
        return ps, args.points
    if args.shape:
        field, d = _field_dims(args)
        shape = parse_shape(args.shape)
        pts = generate_points(field, d, shape, derive_seed(args.seed, "points"))
        return pts, f"shape:{args.shape}"
    raise CliError("one of --points or --shape is required")


def _load_spheres(args, points):
    spec = args.spheres
    if spec == "all":
        return all_spheres(points.field, points.d), "all"
    if spec.startswith("random:"):
        try:
            n = int(spec.split(":", 1)[1])
        except ValueError:
            raise CliError(f"bad sphere spec {spec!r}") from None
        if n < 0:
            raise CliError("sphere count must be nonnegative")
        fam = generate_spheres(
            points.field, points.d, n, derive_seed(args.seed, "spheres")
        )
        return fam, spec
    fam = read_set(spec, expect_kind="spheres")
    if fam.q != points.q or fam.d != points.d:
        raise CliError(
            f"sphere file context (q={fam.q}, d={fam.d}) does not match "
            f"the point context (q={points.q}, d={points.d})"
        )
    return fam, spec


def _cmd_gen(args) -> dict:
    field, d = _field_dims(args)
    shape = parse_shape(args.shape)
    pts = generate_points(field, d, shape, derive_seed(args.seed, "points"))
    write_points(args.out, pts)
    return {
        "command": "gen",
        "q": field.p,
        "d": d,
        "seed": args.seed,
        "params": {"shape": args.shape},
        "results": {"n_points": len(pts), "path": str(args.out)},
        "verdict": "ok",
    }


def _cmd_incidence(args) -> dict:
    points, psrc = _load_points(args)
    spheres, ssrc = _load_spheres(args, points)
    rep = check_incidence_bound(points, spheres, engine=args.engine)
    return {
        "command": "incidence",
        "q": rep.q,
        "d": rep.d,
        "seed": args.seed,
        "params": {"engine": args.engine, "points": psrc, "spheres": ssrc},
        "results": {
            "n_points": rep.n_points,
            "n_spheres": rep.n_spheres,
            "incidences": rep.incidences,
            "main_term": _frac(rep.main_term),
            "error_bound_sq": rep.error_bound_sq,
            "theta": f"{rep.theta:+.12f}",
            "status": rep.status,
        },
        "verdict": rep.status,
    }


def _cmd_lemma_raa(args) -> dict:
    field, d = _field_dims(args)
    q = field.p
    if q ** (2 * d) > _TABLE_BUDGET:
        raise CliError(
            f"table needs {q ** (2 * d)} pair enumerations, over the budget"
        )
    table = lifted_diff_table(q, d)
    mismatches = 0
    max_nonzero = 0
    for idx, got in enumerate(table):
        if idx == 0:
            expected = q**d
        elif idx < q:
            # only the last coordinate is nonzero
            expected = 0
        else:
            expected = q ** (d - 1)
        if got != expected:
            mismatches += 1
        if idx and got > max_nonzero:
            max_nonzero = got
    results = {
        "cells": len(table),
        "value_at_zero": table[0],
        "value_at_zero_expected": q**d,
        "max_nonzero": max_nonzero,
        "max_nonzero_expected": q ** (d - 1),
        "mismatches": mismatches,
    }
    verdict = "holds" if mismatches == 0 and table[0] == q**d else "violated"
    return {
        "command": "lemma-raa",
        "q": q,
        "d": d,
        "seed": None,
        "params": {},
        "results": results,
        "verdict": verdict,
    }


def _cmd_identities(args) -> dict:
    field, k = _field_dims(args)
    q = field.p
    if args.trials < 1:
        raise CliError("--trials must be positive")
    if args.max_size < 1:
        raise CliError("--max-size must be positive")
    rng = SplitMix64(derive_seed(args.seed, "identities"))
    total = q**k
    cap = min(total, args.max_size)

    def draw():
        n = 1 + rng.randbelow(cap)
        ids = rng.sample(total, n)
        out = []
        for i in ids:
            v = []
            for _ in range(k):
                v.append(i % q)
                i //= q
            out.append(tuple(v))
        return out

    mass_failures = 0
    energy_failures = 0
    for _ in range(args.trials):
        A = draw()
        B = draw()
        r = rep_sum(A, B, q)
        if r.total() != len(A) * len(B):
            mass_failures += 1
        if additive_energy(A, B, q, side="lhs") != additive_energy(
            A, B, q, side="rhs"
        ):
            energy_failures += 1
    verdict = "holds" if mass_failures == 0 and energy_failures == 0 else "violated"
    return {
        "command": "identities",
        "q": q,
        "d": k,
        "seed": args.seed,
        "params": {"trials": args.trials, "max_size": args.max_size},
        "results": {
            "trials": args.trials,
            "mass_identity_failures": mass_failures,
            "energy_identity_failures": energy_failures,
        },
        "verdict": verdict,
    }


def _pinned_results(rep) -> dict:
    return {
        "parameter": _frac(rep.parameter),
        "hypothesis_met": rep.hypothesis_met,
        "conclusion_holds": rep.conclusion_holds,
        "average": _frac(rep.average),
        "rich_pins": rep.rich_pins,
        "per_pin": {
            ",".join(str(c) for c in p.coords): n for p, n in rep.per_pin.items()
        },
    }


def _cmd_pinned(args) -> dict:
    eps = _parse_fraction(args.epsilon, "--epsilon")
    alpha = _parse_fraction(args.alpha, "--alpha")
    points, psrc = _load_points(args)
    if len(points) == 0:
        raise CliError("pinned checks need a nonempty point set")
    avg = check_pinned_average(points, eps)
    frac = check_pinned_fraction(points, alpha)
    breached = (avg.hypothesis_met and not avg.conclusion_holds) or (
        frac.hypothesis_met and not frac.conclusion_holds
    )
    return {
        "command": "pinned",
        "q": points.q,
        "d": points.d,
        "seed": args.seed,
        "params": {
            "epsilon": _frac(eps),
            "alpha": _frac(alpha),
            "points": psrc,
        },
        "results": {
            "n_points": len(points),
            "average_form": _pinned_results(avg),
            "fraction_form": _pinned_results(frac),
        },
        "verdict": "violated" if breached else "holds",
    }


def _cmd_beck(args) -> dict:
    points, psrc = _load_points(args)
    if points.d != 2:
        raise CliError("beck requires d = 2")
    rep = check_beck(points)
    breached = rep.hypothesis_met and not (
        rep.conclusion_holds and rep.poor_bound_holds
    )
    return {
        "command": "beck",
        "q": rep.q,
        "d": 2,
        "seed": args.seed,
        "params": {"points": psrc},
        "results": {
            "n_points": rep.n_points,
            "hypothesis_met": rep.hypothesis_met,
            "determined_count": rep.determined_count,
            "determined_degenerate_count": rep.determined_degenerate_count,
            "bound": rep.bound,
            "conclusion_holds": rep.conclusion_holds,
            "poor_circle_count": rep.poor_circle_count,
            "poor_bound_holds": rep.poor_bound_holds,
        },
        "verdict": "violated" if breached else "holds",
    }


_HANDLERS = {
    "gen": _cmd_gen,
    "incidence": _cmd_incidence,
    "lemma-raa": _cmd_lemma_raa,
    "identities": _cmd_identities,
    "pinned": _cmd_pinned,
    "beck": _cmd_beck,
}


def _flatten(obj, prefix: str = "") -> list[tuple[str, str]]:
    rows = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            rows.extend(_flatten(obj[key], f"{prefix}{key}."))
    else:
        rows.append((prefix[:-1], "" if obj is None else str(obj)))
    return rows


def render(report: dict, fmt: str) -> str:
    """Deterministic serialization of a report."""
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    rows = _flatten(report)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        return buf.getvalue()
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = _HANDLERS[args.command](args)
    except (CliError, ValueError, BudgetExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    text = render(report, args.format)
    if args.command != "gen" and args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 1 if report["verdict"] == "violated" else 0


def run() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
