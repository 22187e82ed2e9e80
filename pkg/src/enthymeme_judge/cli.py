"""Command-line interface.

Subcommands:

- score: rank the candidate decodings of a problem file;
- normalize: show the canonical weighted clause forms of a problem file or a
  single formula;
- check-axioms: run the randomized axiom-conformance harness.

Exit codes: 0 success; 1 input error (bad JSON, syntax, limits); 2 the score
filter left no candidates; 3 an expected axiom-conformance cell was violated;
4 the harness was inconclusive (a non-vacuous cell was never exercised
enough).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .axioms import (
    AXIOM_BY_NAME,
    EXPECTED_MATRIX,
    check_matrix,
    default_rows,
    harness_context,
)
from .language import LogicConfig, ParseError, parse_formula, parse_weight, render
from .measures import Context, make_measure
from .normalize import dn, dn_single, fdn, render_clause
from .problem import ProblemError, load_problem
from .quality import AGGREGATORS, preset_sequence, rank_decodings
from .report import RENDERERS, build_report, format_fraction

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_EMPTY = 2
EXIT_VIOLATION = 3
EXIT_INCONCLUSIVE = 4


def _config_from_args(args) -> LogicConfig:
    overrides = {}
    if getattr(args, "max_atoms", None) is not None:
        overrides["max_atoms"] = args.max_atoms
    if getattr(args, "max_premises", None) is not None:
        overrides["max_premises"] = args.max_premises
    return LogicConfig.from_env(**overrides)


def _load_measures(args):
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
        if not isinstance(spec, list) or not all(isinstance(m, dict) and "kind" in m
                                                 for m in spec):
            raise ProblemError(
                "measure config must be a JSON list of objects with a 'kind'")
        measures = tuple(make_measure(m["kind"], **{k: v for k, v in m.items()
                                                    if k != "kind"})
                         for m in spec)
        return measures, None
    return preset_sequence(args.preset), args.preset


def _cmd_score(args) -> int:
    config = _config_from_args(args)
    problem = load_problem(args.file, config)
    measures, preset = _load_measures(args)
    threshold = Fraction(args.threshold) if args.threshold is not None else None
    ctx = Context(atoms=problem.atoms, config=config)
    ranked = rank_decodings(problem.enthymeme, problem.decodings, measures,
                            args.agg, ctx, threshold=threshold, top_k=args.top_k)
    report = build_report(problem, ranked, measures, args.agg, config,
                          preset=preset, threshold=threshold, top_k=args.top_k)
    print(RENDERERS[args.format](report), end="")
    if args.plot:
        from .plotting import save_plots

        for path in save_plots(report, args.plot):
            print(f"wrote {path}", file=sys.stderr)
    if not ranked:
        print("no decoding passed the filter", file=sys.stderr)
        return EXIT_EMPTY
    return EXIT_OK


def _normalized_side(side, atoms) -> dict:
    return {
        "premises": [{"clause": render_clause(c.clause, atoms), "weight": str(c.weight)}
                     for c in sorted(dn(side.premises, atoms), key=repr)],
        "claim": [{"clause": render_clause(c.clause, atoms), "weight": str(c.weight)}
                  for c in sorted(dn_single(side.claim, atoms), key=repr)],
    }


def _cmd_normalize(args) -> int:
    if args.formula is not None:
        if not args.atoms:
            raise ProblemError("--formula requires --atoms")
        atoms = tuple(a.strip() for a in args.atoms.split(",") if a.strip())
        formula = parse_formula(args.formula)
        clauses = fdn(formula, atoms)
        if args.weight is not None:
            w = parse_weight(args.weight)
            out = {"formula": render(formula),
                   "clauses": [{"clause": render_clause(c, atoms), "weight": str(w)}
                               for c in clauses]}
        else:
            out = {"formula": render(formula),
                   "clauses": [render_clause(c, atoms) for c in clauses]}
        if args.format == "json":
            print(json.dumps(out, indent=2))
        else:
            for c in clauses:
                print(render_clause(c, atoms))
        return EXIT_OK

    if args.file is None:
        raise ProblemError("normalize needs a problem file or --formula")
    config = _config_from_args(args)
    problem = load_problem(args.file, config)
    atoms = problem.atoms
    out = {
        "atoms": list(atoms),
        "enthymeme": _normalized_side(problem.enthymeme, atoms),
        "decodings": {cid: _normalized_side(side, atoms)
                      for cid, side in problem.decodings},
    }
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        def show(label, side):
            print(label)
            for item in side["premises"]:
                print(f"  premise  <{item['clause']}, {item['weight']}>")
            for item in side["claim"]:
                print(f"  claim    <{item['clause']}, {item['weight']}>")
        show("enthymeme", out["enthymeme"])
        for cid, side in out["decodings"].items():
            show(f"decoding {cid}", side)
    return EXIT_OK


def _cmd_check_axioms(args) -> int:
    ctx = harness_context(max_atoms=args.max_atoms or 4,
                          max_premises=args.max_premises or 4)
    rows = default_rows()
    if args.rows:
        wanted = {r.strip() for r in args.rows.split(",")}
        unknown = wanted - set(EXPECTED_MATRIX)
        if unknown:
            raise ProblemError(f"unknown matrix rows: {sorted(unknown)}")
        rows = tuple((k, m) for k, m in rows if k in wanted)
    axiom_names = None
    if args.axioms:
        axiom_names = [a.strip() for a in args.axioms.split(",")]
        unknown = set(axiom_names) - set(AXIOM_BY_NAME)
        if unknown:
            raise ProblemError(f"unknown axioms: {sorted(unknown)}")
    report = check_matrix(ctx=ctx, samples=args.samples, seed=args.seed,
                          rows=rows, axiom_names=axiom_names)

    cells = sorted(report.cells.values(), key=lambda c: (c.row, c.axiom))
    records = []
    for c in cells:
        if c.violations:
            status = "violated"
        elif c.vacuous:
            status = "vacuous"
        elif c.exercised >= args.min_exercised:
            status = "ok"
        else:
            status = "inconclusive"
        records.append({"row": c.row, "axiom": c.axiom, "samples": c.samples,
                        "exercised": c.exercised, "violations": len(c.violations),
                        "status": status})
    if args.format == "json":
        print(json.dumps({"samples": args.samples, "seed": args.seed,
                          "cells": records}, indent=2))
    else:
        width_row = max((len(r["row"]) for r in records), default=3)
        width_ax = max((len(r["axiom"]) for r in records), default=5)
        print(f"{'row'.ljust(width_row)}  {'axiom'.ljust(width_ax)}  "
              f"exercised  violations  status")
        for r in records:
            print(f"{r['row'].ljust(width_row)}  {r['axiom'].ljust(width_ax)}  "
                  f"{r['exercised']:>9}  {r['violations']:>10}  {r['status']}")
    if any(r["status"] == "violated" for r in records):
        return EXIT_VIOLATION
    if any(r["status"] == "inconclusive" for r in records):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enthymeme-judge",
        description="Rank candidate decodings of an enthymeme under weighted "
                    "propositional logic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="score and rank the decodings of a problem file")
    p.add_argument("file", help="problem JSON file")
    p.add_argument("--preset", choices=("ld", "sd"), default="ld",
                   help="shipped measure sequence (default: ld)")
    p.add_argument("--config", help="JSON file with a custom measure sequence")
    p.add_argument("--agg", choices=sorted(AGGREGATORS), default="average",
                   help="aggregation function (default: average)")
    p.add_argument("--threshold", help="drop candidates scoring below this "
                                       "value (decimal or fraction)")
    p.add_argument("--top-k", type=int, help="keep only the k best candidates")
    p.add_argument("--format", choices=("json", "table", "csv"), default="table")
    p.add_argument("--plot", metavar="DIR",
                   help="also render ranking and heatmap figures into DIR")
    p.add_argument("--max-atoms", type=int)
    p.add_argument("--max-premises", type=int)
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("normalize",
                       help="show canonical weighted clause forms")
    p.add_argument("file", nargs="?", help="problem JSON file")
    p.add_argument("--formula", help="normalize a single formula instead")
    p.add_argument("--atoms", help="comma-separated atom order for --formula")
    p.add_argument("--weight", help="optional weight for --formula")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--max-atoms", type=int)
    p.add_argument("--max-premises", type=int)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("check-axioms",
                       help="randomized axiom-conformance check of the "
                            "expected matrix")
    p.add_argument("--samples", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-exercised", type=int, default=50)
    p.add_argument("--rows", help="comma-separated matrix rows to check")
    p.add_argument("--axioms", help="comma-separated axioms to check")
    p.add_argument("--max-atoms", type=int)
    p.add_argument("--max-premises", type=int)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=_cmd_check_axioms)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProblemError, ParseError, ValueError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
