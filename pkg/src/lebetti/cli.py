"""Command-line entry point.

Subcommands: le (polar/Le cascade), bounds (betti and image windows),
corpus (built-in example suite), perv (random quadruple verification).

Exit codes: 0 all checks pass, 1 assertion failure, 2 input or parse error,
3 step-budget exhaustion.  With --format json a single self-describing
document is printed; identical configuration (and seed) gives byte-identical
output.  The LEBETTI_BUDGET environment variable sets the default step
budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bounds import main_theorem_bounds, monodromy_image_window
from .corpus import load_entries, run_all
from .errors import Budget, BudgetExceededError, LebettiError
from .fields import GF, QQ
from .lenumbers import LeInput, le_cascade
from .perv import sandwich_trials
from .poly import Ring, parse

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _field_from_spec(spec: str):
    if spec == "rational":
        return QQ
    if spec.startswith("prime:"):
        return GF(int(spec.split(":", 1)[1]))
    raise LebettiError(f"unknown field {spec!r} (use 'rational' or 'prime:P')")


def _document(command: str, config: dict, result: dict) -> str:
    doc = {
        "schema_version": 1,
        "tool": {"name": "lebetti", "version": __version__},
        "command": command,
        "config": config,
        "result": result,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _cycle_json(cycle) -> list:
    return [
        {"ideal": list(K.render_gens()), "mult": m} for K, m in cycle.components
    ]


def _cmd_le(args) -> int:
    field = _field_from_spec(args.field)
    variables = tuple(name.strip() for name in args.vars.split(","))
    ring = Ring(variables, field)
    f = parse(args.f, ring)
    coords = (
        tuple(name.strip() for name in args.coords.split(","))
        if args.coords
        else variables
    )
    budget = Budget(args.budget) if args.budget else Budget()
    result = le_cascade(
        LeInput(f, coords), budget, coord_change_seed=args.coord_change_seed
    )
    if args.format == "json":
        payload = {
            "f": f.render(),
            "vars": list(variables),
            "coords": list(coords),
            "field": args.field,
            "coordinate_change": [list(row) for row in result.coordinate_change]
            if result.coordinate_change
            else None,
            "sigma_dim": result.sigma_dim,
            "lambdas": list(result.lambdas),
            "gamma": {str(k): _cycle_json(c) for k, c in sorted(result.gamma.items())},
            "le": {str(k): _cycle_json(c) for k, c in sorted(result.le.items())},
            "proxies": result.proxies,
            "diagnostics": result.diagnostics,
            "budget": {"limit": budget.limit, "used": result.budget_used},
        }
        config = {
            "f": args.f,
            "vars": list(variables),
            "coords": list(coords),
            "field": args.field,
            "coord_change_seed": args.coord_change_seed,
            "budget": budget.limit,
        }
        sys.stdout.write(_document("le", config, payload))
    else:
        print(f"f = {f.render()}")
        print(f"coordinates: {', '.join(coords)}")
        if result.coordinate_change:
            print(f"coordinate change matrix: {result.coordinate_change}")
        print(f"critical dimension at origin: {result.sigma_dim}")
        print(f"lambda: {list(result.lambdas)}")
        for k in sorted(result.gamma, reverse=True):
            print(f"Gamma[{k}] = {result.gamma[k].render()}")
        for k in sorted(result.le, reverse=True):
            print(f"Le[{k}] = {result.le[k].render()}")
        proxies = "ok" if all(result.proxies.values()) else "FAILED"
        print(f"genericity proxies: {proxies}")
        for note in result.diagnostics:
            print(f"note: {note}")
        print(f"budget: {result.budget_used}/{budget.limit} steps")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    if args.imdim is None and args.betti is None:
        raise LebettiError("supply --imdim and/or --betti")
    result: dict = {"lambda0": args.lambda0}
    verdict_ok = True
    lines = [f"lambda0 = {args.lambda0}"]
    if args.imdim is not None:
        window = main_theorem_bounds(args.lambda0, args.imdim)
        result["imdim"] = args.imdim
        result["imdim_source"] = "supplied"
        result["betti_window"] = {
            "lower": window.lower,
            "upper": window.upper,
            "exact_lower": str(window.exact_lower),
        }
        lines.append(f"imdim = {args.imdim} (supplied)")
        lines.append(
            f"betti_n window: [{window.lower}, {window.upper}] "
            f"(exact lower bound {window.exact_lower})"
        )
        if args.betti is not None:
            inside = window.contains(args.betti)
            verdict_ok &= inside
            result["betti_in_window"] = inside
            lines.append(f"betti_n = {args.betti} in window: {inside}")
    if args.betti is not None:
        window = monodromy_image_window(args.lambda0, args.betti)
        result["betti"] = args.betti
        result["imdim_window"] = {"lower": window.lower, "upper": window.upper}
        lines.append(f"betti_n = {args.betti}")
        lines.append(f"imdim window: [{window.lower}, {window.upper}]")
        if args.imdim is not None:
            inside = window.contains(args.imdim)
            verdict_ok &= inside
            result["imdim_in_window"] = inside
            lines.append(f"imdim = {args.imdim} in window: {inside}")
    if args.format == "json":
        config = {
            "lambda0": args.lambda0,
            "imdim": args.imdim,
            "betti": args.betti,
        }
        result["all_ok"] = verdict_ok
        sys.stdout.write(_document("bounds", config, result))
    else:
        for line in lines:
            print(line)
    return EXIT_OK if verdict_ok else EXIT_ASSERTION


def _cmd_corpus(args) -> int:
    if args.action == "list":
        entries = load_entries()
        if args.format == "json":
            payload = {
                "entries": [
                    {
                        "name": e.name,
                        "f": e.f_text,
                        "vars": list(e.variables),
                        "coords": list(e.coords),
                        "notes": e.notes,
                    }
                    for e in entries
                ]
            }
            sys.stdout.write(_document("corpus-list", {}, payload))
        else:
            for e in entries:
                print(f"{e.name}: f = {e.f_text} over {e.field_name}")
        return EXIT_OK
    report = run_all(args.filter, budget_limit=args.budget)
    if args.format == "json":
        config = {"filter": args.filter, "budget": args.budget}
        sys.stdout.write(_document("corpus-run", config, report.to_json()))
    else:
        for r in report.results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"{mark} {r.name}: lambdas={list(r.lambdas) if r.lambdas else r.lambdas}")
            if r.error:
                print(f"     error: {r.error}")
            for c in r.checks:
                if not c.ok():
                    print(f"     {c.name}: {c.status} ({c.detail})")
        print(f"{report.total - report.failures}/{report.total} entries passed")
    return EXIT_OK if report.all_passed() else EXIT_ASSERTION


def _cmd_perv(args) -> int:
    field = GF(args.prime) if args.prime else QQ
    report = sandwich_trials(args.trials, args.seed, field, max_dim=args.max_dim)
    if args.format == "json":
        config = {
            "trials": args.trials,
            "seed": args.seed,
            "field": field.name,
            "max_dim": args.max_dim,
        }
        payload = {
            "passed": report.passed,
            "trials": report.trials,
            "failures": report.failures,
        }
        sys.stdout.write(_document("perv-verify", config, payload))
    else:
        print(
            f"{report.passed}/{report.trials} quadruple trials passed "
            f"(field {field.name}, seed {args.seed})"
        )
        for failure in report.failures:
            print(f"FAIL {failure}")
    return EXIT_OK if report.all_passed() else EXIT_ASSERTION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lebetti",
        description="Le cycles, Le numbers and Milnor-fiber betti windows",
    )
    parser.add_argument("--version", action="version", version=f"lebetti {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_le = sub.add_parser("le", help="run the polar/Le cascade for a polynomial")
    p_le.add_argument("--f", required=True, help="polynomial text")
    p_le.add_argument("--vars", required=True, help="comma-separated variables")
    p_le.add_argument("--coords", help="cascade coordinate order (default: --vars)")
    p_le.add_argument("--field", default="rational", help="rational | prime:P")
    p_le.add_argument("--budget", type=int, help="step budget override")
    p_le.add_argument("--coord-change-seed", type=int, dest="coord_change_seed")
    p_le.add_argument("--format", choices=("text", "json"), default="text")
    p_le.set_defaults(func=_cmd_le)

    p_bounds = sub.add_parser("bounds", help="betti / monodromy-image windows")
    p_bounds.add_argument("--lambda0", type=int, required=True)
    p_bounds.add_argument("--imdim", type=int, help="dim im(id - T), supplied")
    p_bounds.add_argument("--betti", type=int, help="top reduced betti number")
    p_bounds.add_argument("--format", choices=("text", "json"), default="text")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_corpus = sub.add_parser("corpus", help="run or list the built-in examples")
    p_corpus.add_argument("action", choices=("run", "list"))
    p_corpus.add_argument("--filter", help="substring filter on entry names")
    p_corpus.add_argument("--budget", type=int, help="step budget per entry")
    p_corpus.add_argument("--format", choices=("text", "json"), default="text")
    p_corpus.set_defaults(func=_cmd_corpus)

    p_perv = sub.add_parser("perv", help="verify quadruple properties on random trials")
    p_perv.add_argument("action", choices=("verify",))
    p_perv.add_argument("--trials", type=int, required=True)
    p_perv.add_argument("--seed", type=int, default=0)
    p_perv.add_argument("--prime", type=int, help="use GF(p) instead of QQ")
    p_perv.add_argument("--max-dim", type=int, default=6, dest="max_dim")
    p_perv.add_argument("--format", choices=("text", "json"), default="text")
    p_perv.set_defaults(func=_cmd_perv)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except LebettiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
