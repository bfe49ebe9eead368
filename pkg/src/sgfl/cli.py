"""Command-line front end with JSON/TSV/pretty output.

Subcommands: analyze, minrepl, verdict, oracle, kunz, paper-examples.
All reports carry the schema tag "sgfl/1" and are byte-deterministic for
a fixed argv and seed; list-valued output is always canonically sorted.
Exit codes: 0 success, 1 a requested verdict failed under --assert-holds
(or an example row mismatched), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .budget import DEFAULT_BUDGET
from .errors import SgflError
from .examples_suite import run_rows
from .lengths import length_summary
from .kunz import (
    cominimal,
    kunz_point,
    main_verdict,
    numerical_context,
    pseudomin,
    semigroup_of_point,
)
from .minrepl import candidate_sets, min_repl
from .semigroups import new_semigroup
from .verdicts import (
    Formula,
    candidate_atoms,
    check_formula,
    embdim3_check,
    oracle_scan,
)

SCHEMA = "sgfl/1"


@dataclass(frozen=True)
class RunConfig:
    budget: int = DEFAULT_BUDGET
    output: str = "json"
    parallelism: int = 1
    seed: int = 0

    def validate(self):
        if self.budget <= 0:
            raise SgflError("budget must be positive")
        if self.parallelism < 1:
            raise SgflError("parallelism must be at least 1")
        if self.output not in ("json", "tsv", "pretty"):
            raise SgflError(f"unknown output format {self.output!r}")


# -- input grammar ----------------------------------------------------------

def parse_generators(text, dim=None):
    """Parse `10,12,21,38` or `(2,0),(3,1),(0,5)` into a generator list."""
    text = text.strip()
    if "(" in text:
        tuples = re.findall(r"\(([^()]*)\)", text)
        if not tuples:
            raise SgflError(f"could not parse generators from {text!r}")
        gens = [tuple(int(p) for p in t.split(",") if p.strip()) for t in tuples]
        inferred = len(gens[0])
    else:
        gens = [int(p) for p in text.split(",") if p.strip()]
        inferred = 1
    if dim is not None and dim != inferred:
        raise SgflError(f"generators look {inferred}-dimensional, --dim says {dim}")
    return gens, inferred


def parse_element(text, dim):
    text = text.strip()
    if "(" in text:
        inner = text.strip("()")
        vec = tuple(int(p) for p in inner.split(",") if p.strip())
        return vec
    if dim == 1:
        return int(text)
    return tuple(int(p) for p in text.split(",") if p.strip())


def parse_semigroup_line(line):
    """One semigroup per line: `dim=<d>; gens=(a,b),(c,d)` or `gens=...`."""
    dim = None
    gens_text = None
    for part in line.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        key = key.strip().lower()
        if key == "dim":
            dim = int(value)
        elif key == "gens":
            gens_text = value.strip()
        else:
            raise SgflError(f"unknown field {key!r} in input line {line!r}")
    if gens_text is None:
        raise SgflError(f"input line {line!r} has no gens= field")
    gens, inferred = parse_generators(gens_text, dim)
    return new_semigroup(gens, dim=dim or inferred)


# -- serialization ----------------------------------------------------------

def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, (list, set, frozenset)):
        return [_jsonable(v) for v in sorted(value)]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, Formula):
        return value.value
    return value


def verdict_json(v):
    return {
        "formula": v.formula.value,
        "m": _jsonable(v.m),
        "holds": v.holds,
        "method": v.method,
        "exact": v.exact,
        "bound": v.bound,
        "checked": [
            {"element": _jsonable(c.element), "value": c.value, "shifted": c.shifted}
            for c in v.checked
        ],
        "counterexamples": [
            {"element": _jsonable(c.element), "value": c.value, "shifted": c.shifted}
            for c in v.counterexamples
        ],
    }


def length_summary_json(summary):
    return {
        "element": _jsonable(summary.element),
        "longest": summary.longest,
        "shortest": summary.shortest,
        "lengths": list(summary.lengths),
        "witness_longest": list(summary.witness_longest),
        "witness_shortest": list(summary.witness_shortest),
    }


def minrepl_json(report):
    vectors = list(report.minimal_vectors)
    return {
        "m": _jsonable(report.m),
        "atom_index": _jsonable(report.atom_index),
        "min_repl": [_jsonable(v) for v in vectors],
        "evaluations": [_jsonable(report.evaluations[v]) for v in vectors],
        "M1": _jsonable(report.m1) if report.m1 is not None else None,
        "M2": _jsonable(report.m2) if report.m2 is not None else None,
        "N1": _jsonable(report.n1) if report.n1 is not None else None,
        "N2": _jsonable(report.n2) if report.n2 is not None else None,
    }


def kunz_verdict_json(v):
    return {
        "formula": v.formula.value,
        "m": v.m,
        "holds": v.holds,
        "method": v.method,
        "inequalities": [
            {
                "c": _jsonable(c.c),
                "beta": c.beta,
                "coeffs": _jsonable(c.coeffs),
                "relation": c.relation,
                "rhs": c.rhs,
                "lhs_value": c.lhs_value,
                "ok": c.ok,
            }
            for c in v.checks
        ],
    }


def _emit(payload, config):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _envelope(command, config, result):
    return {
        "schema": SCHEMA,
        "command": command,
        "config": {
            "budget": config.budget,
            "parallelism": config.parallelism,
            "seed": config.seed,
        },
        "result": result,
    }


def _verdict_rows_tsv(rows):
    header = "formula\tm\tholds\tmethod\texact\tcounterexamples"
    lines = [header]
    for r in rows:
        cex = ";".join(str(_jsonable(c["element"])) for c in r["counterexamples"])
        lines.append(
            f"{r['formula']}\t{r['m']}\t{str(r['holds']).lower()}"
            f"\t{r['method']}\t{str(r['exact']).lower()}\t{cex}"
        )
    return "\n".join(lines) + "\n"


def _verdict_rows_pretty(rows):
    lines = []
    for r in rows:
        status = "holds" if r["holds"] else "FAILS"
        extra = ""
        if r["counterexamples"]:
            first = r["counterexamples"][0]
            extra = (
                f" (first counterexample {first['element']}: "
                f"{first['value']} != {first['shifted']})"
            )
        if not r["exact"]:
            extra += " [evidence only: bounded scan]"
        lines.append(f"{r['formula']} formula at m={r['m']}: {status}{extra}")
    return "\n".join(lines) + "\n"


# -- subcommands ------------------------------------------------------------

def _cmd_analyze(args, config):
    semigroups = []
    if args.file:
        with open(args.file) as handle:
            for line in handle:
                line = line.strip()
                if line and not line.startswith("#"):
                    semigroups.append(parse_semigroup_line(line))
    if args.gens:
        gens, inferred = parse_generators(args.gens, args.dim)
        semigroups.append(new_semigroup(gens, dim=args.dim or inferred))
    if not semigroups:
        raise SgflError("analyze needs --gens or --file")

    def verdicts_for(S):
        jobs = [
            (formula, m)
            for formula in (Formula.LONGEST, Formula.SHORTEST)
            for m in candidate_atoms(S, formula)
        ]

        def run(job):
            formula, m = job
            return check_formula(S, m, formula, budget=config.budget)

        if config.parallelism > 1:
            with ThreadPoolExecutor(max_workers=config.parallelism) as pool:
                verdicts = list(pool.map(run, jobs))
        else:
            verdicts = [run(job) for job in jobs]
        verdicts.sort(key=lambda v: (v.formula.value, str(_jsonable(v.m))))
        return verdicts

    result = []
    rows = []
    for S in semigroups:
        vs = verdicts_for(S)
        entry = {
            "generators": _jsonable(S.atoms),
            "dim": S.dim,
            "verdicts": [verdict_json(v) for v in vs],
        }
        if args.element:
            entry["elements"] = [
                length_summary_json(
                    length_summary(
                        S, parse_element(text, S.dim), budget=config.budget
                    )
                )
                for text in args.element
            ]
        result.append(entry)
        rows.extend(verdict_json(v) for v in vs)
    all_hold = all(r["holds"] for r in rows)
    exit_code = 0 if (all_hold or not args.assert_holds) else 1
    if config.output == "tsv":
        return _verdict_rows_tsv(rows), exit_code
    if config.output == "pretty":
        return _verdict_rows_pretty(rows), exit_code
    return _emit(_envelope("analyze", config, result), config), exit_code


def _cmd_minrepl(args, config):
    gens, inferred = parse_generators(args.gens, args.dim)
    S = new_semigroup(gens, dim=args.dim or inferred)
    m = parse_element(args.m, S.dim)
    report = candidate_sets(S, m, min_repl(S, m, budget=config.budget))
    if config.output == "tsv":
        raise SgflError("minrepl reports are not flat; use json or pretty")
    if config.output == "pretty":
        lines = [f"minimal replaceable vectors over {_jsonable(report.atom_index)}:"]
        for v in report.minimal_vectors:
            lines.append(f"  {_jsonable(v)} -> {_jsonable(report.evaluations[v])}")
        lines.append(f"M1={_jsonable(report.m1)} M2={_jsonable(report.m2)}")
        lines.append(f"N1={_jsonable(report.n1)} N2={_jsonable(report.n2)}")
        return "\n".join(lines) + "\n", 0
    return _emit(_envelope("minrepl", config, minrepl_json(report)), config), 0


def _cmd_verdict(args, config):
    gens, inferred = parse_generators(args.gens, args.dim)
    S = new_semigroup(gens, dim=args.dim or inferred)
    m = parse_element(args.m, S.dim)
    if args.method == "embdim3":
        verdict = embdim3_check(S, args.formula, budget=config.budget)
    elif args.method == "oracle":
        verdict = oracle_scan(
            S,
            m,
            args.formula,
            bound=args.bound,
            allow_default=args.allow_default,
            all_counterexamples=args.all,
        )
    else:
        verdict = check_formula(S, m, args.formula, budget=config.budget)
    exit_code = 0 if (verdict.holds or not args.assert_holds) else 1
    row = verdict_json(verdict)
    if config.output == "tsv":
        return _verdict_rows_tsv([row]), exit_code
    if config.output == "pretty":
        return _verdict_rows_pretty([row]), exit_code
    return _emit(_envelope("verdict", config, row), config), exit_code


def _cmd_oracle(args, config):
    args.method = "oracle"
    return _cmd_verdict(args, config)


def _cmd_kunz(args, config):
    if args.kunz_command != "point":
        raise SgflError("the kunz subcommand is `kunz point`")
    ctx = numerical_context(args.m)
    coords = [int(p) for p in args.x.split(",") if p.strip()]
    point = kunz_point(ctx, coords)
    S = semigroup_of_point(ctx, point)
    result = {
        "m": args.m,
        "x": list(point.x),
        "semigroup": _jsonable(S.atoms),
        "atoms": _jsonable(point.atoms),
        "nontrivial_relations": _jsonable(
            sorted((a, b) for (a, b) in point.relations if a != b)
        ),
        "min_inf": [_jsonable(f.c) for f in point.min_inf],
        "pseudomin": [_jsonable(f.c) for f in pseudomin(point)],
    }
    exit_code = 0
    if args.verdict:
        v = main_verdict(point, args.verdict)
        result["verdict"] = kunz_verdict_json(v)
        if args.assert_holds and not v.holds:
            exit_code = 1
    if args.cominimal:
        other = kunz_point(ctx, [int(p) for p in args.cominimal.split(",")])
        result["cominimal"] = cominimal(point, other)
    if config.output != "json":
        raise SgflError("kunz reports are not flat; use json output")
    return _emit(_envelope("kunz", config, result), config), exit_code


def _cmd_paper_examples(args, config):
    rows = run_rows(budget=config.budget)
    result = [
        {
            "id": r.id,
            "status": r.status,
            "expected": _jsonable(r.expected),
            "got": _jsonable(r.got),
        }
        for r in rows
    ]
    if any(r.status == "error" for r in rows):
        exit_code = 2
    elif any(r.status == "fail" for r in rows):
        exit_code = 1
    else:
        exit_code = 0
    if config.output == "pretty":
        lines = [f"{r.id}: {r.status.upper()}" for r in rows]
        counts = (
            f"{sum(r.status == 'pass' for r in rows)} passed, "
            f"{sum(r.status == 'fail' for r in rows)} failed, "
            f"{sum(r.status == 'error' for r in rows)} errored"
        )
        return "\n".join(lines + [counts]) + "\n", exit_code
    if config.output == "tsv":
        raise SgflError("example reports are not flat; use json or pretty")
    return _emit(_envelope("paper-examples", config, result), config), exit_code


def _add_run_options(parser, suppress=False):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--budget", type=int,
                        default=default if suppress else None,
                        help="node budget for searches (env SGFL_BUDGET)")
    parser.add_argument("--output", choices=("json", "tsv", "pretty"),
                        default=default if suppress else "json")
    parser.add_argument("--parallelism", type=int,
                        default=default if suppress else 1)
    parser.add_argument("--seed", type=int, default=default if suppress else 0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sgfl",
        description=(
            "Decide whether adding a fixed atom always increments the "
            "longest (or shortest) factorization length of a semigroup."
        ),
    )
    _add_run_options(parser)
    # The same options are accepted after the subcommand name.
    common = argparse.ArgumentParser(add_help=False)
    _add_run_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_gens(p):
        p.add_argument("--gens", help="10,12,21,38 or (2,0),(3,1),(0,5)")
        p.add_argument("--dim", type=int, default=None)

    p = sub.add_parser("analyze", parents=[common],
                       help="verdicts for every candidate atom")
    add_gens(p)
    p.add_argument("--file", help="one semigroup per line: dim=..; gens=..")
    p.add_argument("--element", action="append",
                   help="also report the length summary of this element")
    p.add_argument("--assert-holds", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("minrepl", parents=[common],
                       help="minimal replaceable factorizations")
    add_gens(p)
    p.add_argument("--m", required=True)
    p.set_defaults(func=_cmd_minrepl)

    p = sub.add_parser("verdict", parents=[common],
                       help="decide one formula at one atom")
    add_gens(p)
    p.add_argument("--m", required=True)
    p.add_argument("--formula", required=True, choices=("longest", "shortest"))
    p.add_argument("--method", choices=("minrepl", "embdim3", "oracle"),
                   default="minrepl")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--all", action="store_true",
                   help="report every counterexample in range, not the first")
    p.add_argument("--allow-default", action="store_true",
                   help="permit the default bound for evidence-only scans")
    p.add_argument("--assert-holds", action="store_true")
    p.set_defaults(func=_cmd_verdict)

    p = sub.add_parser("oracle", parents=[common],
                       help="brute-force scan of one formula")
    add_gens(p)
    p.add_argument("--m", required=True)
    p.add_argument("--formula", required=True, choices=("longest", "shortest"))
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--allow-default", action="store_true")
    p.add_argument("--assert-holds", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("kunz", parents=[common], help="polytope-point reports")
    kunz_sub = p.add_subparsers(dest="kunz_command", required=True)
    kp = kunz_sub.add_parser("point", parents=[common],
                                  help="analyze one integer point")
    kp.add_argument("--m", type=int, required=True)
    kp.add_argument("--x", required=True, help="0,1,2,1,2")
    kp.add_argument("--verdict", choices=("longest", "shortest"))
    kp.add_argument("--cominimal", help="second point to compare against")
    kp.add_argument("--assert-holds", action="store_true")
    kp.set_defaults(func=_cmd_kunz)

    p = sub.add_parser("paper-examples", parents=[common],
                       help="re-run the bundled worked-example suite")
    p.set_defaults(func=_cmd_paper_examples)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get("SGFL_BUDGET", DEFAULT_BUDGET))
    config = RunConfig(
        budget=budget,
        output=args.output,
        parallelism=args.parallelism,
        seed=args.seed,
    )
    try:
        config.validate()
        text, exit_code = args.func(args, config)
    except SgflError as exc:
        sys.stderr.write(
            json.dumps(
                {"schema": SCHEMA, "error": type(exc).__name__, "detail": str(exc)},
                sort_keys=True,
            )
            + "\n"
        )
        return 2
    sys.stdout.write(text)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
