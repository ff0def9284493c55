"""Command-line interface.

Exit codes: 0 affirmative result, 1 negative result, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import report as rep
from .coloring import ColoringError, is_rainbow_connected, las_vegas_color
from .exact import BudgetExceeded, SearchBudget, rc_exact
from .experiments import ExperimentConfig, run_trials, sweep, to_csv
from .generators import FAMILIES, SEEDED, FamilySpec, generate
from .graph import GraphError, is_connected
from .io import FormatError, read_coloring, read_graph, write_text
from .theorems import PRIOR_WORK, THEOREMS, bound_report, check_theorem, required_threshold

SEED_ENV = "RAINBOW_SEED"


class UsageError(Exception):
    pass


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is None:
        raise UsageError(f"--seed is required (or set {SEED_ENV})")
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _family_spec(args) -> FamilySpec:
    seed = None
    if args.family in SEEDED:
        seed = args.graph_seed if getattr(args, "graph_seed", None) is not None else _seed(args)
    return FamilySpec(family=args.family, n=args.n, s=args.s, delta_target=args.delta, seed=seed)


def _human(report: rep.Report) -> str:
    """Stable text layout: 'key: value' lines, nested keys joined by dots."""
    lines = [f"command: {report.command}"]

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for key in sorted(obj):
                walk(f"{prefix}.{key}" if prefix else key, obj[key])
        elif isinstance(obj, list) and obj and isinstance(obj[0], dict):
            for i, item in enumerate(obj):
                walk(f"{prefix}[{i}]", item)
        else:
            lines.append(f"{prefix}: {obj}")

    walk("", report.result)
    if report.timing:
        lines.append(f"seconds: {report.timing['seconds']:.3f}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args):
    g = read_graph(args.graph)
    c = read_coloring(args.coloring, g)
    ver = is_rainbow_connected(c, g)
    return rep.verification_result(ver, c.k), 0 if ver.connected else 1


def _cmd_color(args):
    g = read_graph(args.graph)
    seed = _seed(args)
    args.seed = seed
    r = las_vegas_color(g, args.k, args.max_iters, seed, workers=args.workers)
    if r.success and args.out:
        write_text(args.out, r.coloring.to_text(g))
    return rep.las_vegas_result(r), 0 if r.success else 1


def _cmd_rc(args):
    g = read_graph(args.graph)
    if g.n < 2 or not is_connected(g):
        raise GraphError("rc is undefined for disconnected graphs")
    if g.m > args.max_edges:
        raise UsageError(f"graph has {g.m} edges; --max-edges is {args.max_edges}")
    budget = SearchBudget(args.max_edges, args.max_nodes, args.max_seconds)
    try:
        r = rc_exact(g, budget=budget, workers=args.workers)
    except BudgetExceeded as exc:
        return {"kind": "rc", "outcome": "budget_exceeded", "message": str(exc)}, 1
    if args.out:
        write_text(args.out, r.certificate.to_text(g))
    return rep.rc_result(r), 0


def _cmd_check(args):
    g = read_graph(args.graph)
    ids = THEOREMS if args.theorem == "all" else (args.theorem,)
    checks = [check_theorem(g, args.k, t) for t in ids]
    ok = any(c.satisfied for c in checks)
    return {"kind": "theorem_checks", "checks": [rep.check_dict(c) for c in checks]}, 0 if ok else 1


def _cmd_bounds(args):
    ids = THEOREMS if args.theorem == "all" else (args.theorem,)
    entries = []
    for t in ids:
        try:
            thr = required_threshold(t, args.k, args.n)
        except ValueError as exc:
            if args.theorem != "all":
                raise
            entries.append({"theorem_id": t, "threshold": None, "bound_report": None,
                            "note": str(exc)})
            continue
        br = None if t in PRIOR_WORK else rep.bound_dict(bound_report(t, args.k, args.n))
        entries.append({"theorem_id": t, "threshold": thr, "bound_report": br, "note": None})
    return {"kind": "bounds", "k": args.k, "n": args.n, "entries": entries}, 0


def _cmd_gen(args):
    spec = _family_spec(args)
    g = generate(spec)
    write_text(args.out, g.to_text())
    return {"kind": "generated", "family": spec.family, "n": g.n, "m": g.m,
            "seed": spec.seed, "out": args.out}, 0


def _experiment_config(args) -> ExperimentConfig:
    seed = _seed(args)
    args.seed = seed
    if (args.graph is None) == (args.family is None):
        raise UsageError("give exactly one of --graph or --family")
    graph = read_graph(args.graph) if args.graph else None
    family = _family_spec(args) if args.family else None
    return ExperimentConfig(k=args.k, trials=args.trials, master_seed=seed, graph=graph,
                            family=family, theorem_id=args.theorem, workers=args.workers)


def _cmd_experiment(args):
    stats = run_trials(_experiment_config(args))
    ok = stats.consistent_with_theory is not False
    return {"kind": "trial_stats", "stats": stats.as_dict()}, 0 if ok else 1


def _cmd_sweep(args):
    try:
        values = [int(v) for v in args.values.split(",") if v.strip()]
    except ValueError:
        raise UsageError("--values must be comma-separated integers") from None
    rows = sweep(_experiment_config(args), args.param, values)
    ok = all(r.consistent_with_theory is not False for r in rows)
    return {"kind": "sweep", "parameter": args.param, "rows": [r.as_dict() for r in rows]}, (
        0 if ok else 1
    )


def _add_output(p, csv=False):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="emit the JSON report")
    if csv:
        g.add_argument("--csv", action="store_true", help="emit one CSV row per trial stats")
    p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")


def _add_family(p):
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("-n", type=int)
    p.add_argument("--s", type=int, help="first class size for bipartite families")
    p.add_argument("--delta", type=int, help="minimum degree target for random families")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rainbowrc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a coloring for rainbow connectivity")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    _add_output(p)

    p = sub.add_parser("color", help="Las Vegas rainbow k-coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-iters", type=int, default=1000)
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=1)
    _add_output(p)

    p = sub.add_parser("rc", help="exact rainbow connection number")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-edges", type=int, default=16)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--out", help="write the certificate coloring here")
    p.add_argument("--workers", type=int, default=1)
    _add_output(p)

    p = sub.add_parser("check", help="evaluate theorem hypotheses on a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--theorem", choices=THEOREMS + ("all",), default="all")
    _add_output(p)

    p = sub.add_parser("bounds", help="thresholds and union-bound arithmetic")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--theorem", choices=THEOREMS + ("all",), default="all")
    _add_output(p)

    p = sub.add_parser("gen", help="generate a graph family")
    _add_family(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)
    _add_output(p)

    for name in ("experiment", "sweep"):
        p = sub.add_parser(name, help="Monte Carlo trials" if name == "experiment"
                           else "trials across parameter values")
        p.add_argument("--graph")
        _add_family(p)
        p.add_argument("--graph-seed", type=int, help="seed for random families (default --seed)")
        p.add_argument("-k", type=int, required=True)
        p.add_argument("--trials", type=int, required=True)
        p.add_argument("--seed", type=int)
        p.add_argument("--theorem", choices=THEOREMS)
        p.add_argument("--workers", type=int, default=1)
        if name == "sweep":
            p.add_argument("--param", required=True, choices=("delta_target", "k", "n"))
            p.add_argument("--values", required=True)
        _add_output(p, csv=True)
    return ap


COMMANDS = {
    "verify": _cmd_verify,
    "color": _cmd_color,
    "rc": _cmd_rc,
    "check": _cmd_check,
    "bounds": _cmd_bounds,
    "gen": _cmd_gen,
    "experiment": _cmd_experiment,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "gen" and args.family is None:
        print("rainbowrc gen: --family is required", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        result, code = COMMANDS[args.command](args)
    except (UsageError, GraphError, FormatError, ColoringError, ValueError, OSError) as exc:
        print(f"rainbowrc {args.command}: {exc}", file=sys.stderr)
        return 2
    inputs = {k: v for k, v in sorted(vars(args).items())
              if k not in ("json", "csv", "timing", "command")}
    timing = {"seconds": time.perf_counter() - start} if args.timing else None
    report = rep.Report(args.command, inputs, result, timing)
    if getattr(args, "csv", False):
        rows = result["rows"] if args.command == "sweep" else [result["stats"]]
        sys.stdout.write(to_csv(rows))
    elif args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(_human(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
