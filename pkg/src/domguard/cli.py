"""Command-line front end: analysis, reduction builders, strategy
verification, raw oracle queries, the HTTP service, and a selftest.

Exit codes: 0 success / proven, 1 negative verdict, 2 usage or input
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .graph import Graph, GraphError, NotApplicableError, parse_graph, split_partition
from .oracle import (
    Budget,
    BudgetExceededError,
    DEFAULT_BUDGET,
    alpha_exact,
    edn_oracle,
    gamma_exact,
    medn_feasible,
    medn_oracle,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

PARAMS = ("gamma", "alpha", "medn", "edn")


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read_graph(path):
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}")
    except GraphError as e:
        raise CliError(f"{path}: {e}")


def _medn_with_method(g, method, budget):
    """(value, method tag) honoring a forced method."""
    from .splitsolve import (
        solve_k13_free,
        solve_k14_2split,
        solve_k14_3split,
        solve_split_auto,
    )

    if method == "oracle":
        return medn_oracle(g, budget), "oracle"
    if method in ("k13", "k14-2", "k14-3"):
        p = split_partition(g)
        if p is None:
            raise NotApplicableError("not a split graph")
        if method == "k13":
            return solve_k13_free(g, p), "k13"
        if method == "k14-2":
            return solve_k14_2split(g, p, budget)[0], "k14-2"
        return solve_k14_3split(g, p, budget=budget)[0], "k14-3"
    # auto: polynomial split solvers when applicable, oracle otherwise
    p = split_partition(g)
    if p is not None:
        try:
            return solve_split_auto(g, budget)
        except NotApplicableError:
            pass
    return medn_oracle(g, budget), "oracle"


def analyze_graph(g, params, method="auto", budget=None):
    """AnalysisReport as a plain dict."""
    budget = budget or Budget()
    report = {"n": g.n, "values": {}, "methods": {}, "timings": {},
              "budgetExceeded": False}
    for param in params:
        t0 = time.monotonic()
        try:
            if param == "gamma":
                value, tag = gamma_exact(g), "exact"
            elif param == "alpha":
                value, tag = alpha_exact(g), "exact"
            elif param == "medn":
                value, tag = _medn_with_method(g, method, budget)
            elif param == "edn":
                value, tag = edn_oracle(g, budget), "oracle"
            else:
                raise CliError(f"unknown parameter {param!r}")
        except BudgetExceededError:
            report["budgetExceeded"] = True
            value, tag = None, "budget-exceeded"
        report["values"][param] = value
        report["methods"][param] = tag
        report["timings"][param] = round(time.monotonic() - t0, 6)
    vals = report["values"]
    if vals.get("gamma") is not None and vals.get("medn") is not None:
        if not vals["gamma"] <= vals["medn"]:
            raise AssertionError("sandwich bound violated")
    if vals.get("edn") is not None and vals.get("alpha") is not None:
        if not vals["edn"] >= vals["alpha"]:
            raise AssertionError("sandwich bound violated")
    return report


def cmd_analyze(args):
    g = _read_graph(args.graph)
    params = [p.strip() for p in args.param.split(",") if p.strip()]
    for p in params:
        if p not in PARAMS:
            raise CliError(f"unknown parameter {p!r} (choose from {', '.join(PARAMS)})")
    budget = Budget(args.budget)
    try:
        report = analyze_graph(g, params, args.method, budget)
    except NotApplicableError as e:
        raise CliError(str(e))
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for p in params:
            print(f"{p} = {report['values'][p]}  [{report['methods'][p]}]")
    if report["budgetExceeded"]:
        return EXIT_BUDGET if args.strict else EXIT_OK
    return EXIT_OK


def cmd_reduce(args):
    from .reductions import (
        ThreeDMInstance,
        X3CInstance,
        build_gp2,
        build_gp3,
        build_gp5,
        reduce_3dm,
        reduce_x3c,
    )

    try:
        with open(args.input) as fh:
            raw = fh.read()
    except OSError as e:
        raise CliError(f"cannot read {args.input}: {e}")
    ct = None
    try:
        if args.kind in ("gp2", "gp3", "gp5"):
            g = parse_graph(raw)
            built = {"gp2": build_gp2, "gp3": build_gp3, "gp5": build_gp5}[args.kind](g)
        elif args.kind == "x3c":
            built = reduce_x3c(X3CInstance.from_json(json.loads(raw)))
        else:
            built, ct = reduce_3dm(ThreeDMInstance.from_json(json.loads(raw)))
    except (GraphError, ValueError, KeyError, TypeError) as e:
        raise CliError(f"invalid {args.kind} input: {e}")
    out = {"graph": json.loads(built.graph.to_json()),
           "roles": {str(v): r for v, r in sorted(built.vertexRoles.items())},
           "predictions": built.predictions}
    if ct is not None:
        out["cliqueTree"] = {"nodes": [sorted(c) for c in ct.nodes],
                             "treeEdges": sorted(map(list, ct.tree_edges)),
                             "pathProperty": ct.path_property}
    text = json.dumps(out, sort_keys=True, indent=None if args.json else 1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out} ({built.graph.n} vertices)")
    else:
        print(text)
    return EXIT_OK


def cmd_verify_strategy(args):
    from .strategy import strategy_from_json, verify_closure

    g = _read_graph(args.graph)
    try:
        with open(args.strategy) as fh:
            obj = json.load(fh)
        strat = strategy_from_json(g, obj)
    except OSError as e:
        raise CliError(f"cannot read {args.strategy}: {e}")
    except (GraphError, ValueError, KeyError, TypeError) as e:
        raise CliError(f"bad strategy file: {e}")
    report = verify_closure(g, strat)
    if args.json:
        out = {"proven": report.proven, "visitedConfigs": report.visited}
        if report.counterexample:
            cfg, r, reason = report.counterexample
            out["counterexample"] = {"config": cfg, "attackVertex": r,
                                     "reason": reason}
        print(json.dumps(out, sort_keys=True))
    elif report.proven:
        print(f"proven, {report.visited} configs")
    else:
        cfg, r, reason = report.counterexample
        print(f"counterexample: config {cfg}, attack on {r}: {reason}")
    return EXIT_OK if report.proven else EXIT_NEGATIVE


def cmd_oracle(args):
    g = _read_graph(args.graph)
    budget = Budget(args.budget)
    try:
        if args.k is not None:
            if args.mode == "edn":
                raise CliError("--k is only supported for medn")
            ws = medn_feasible(g, args.k, budget)
            ok = ws is not None
            if args.json:
                print(json.dumps({"k": args.k, "feasible": ok,
                                  "configs": len(ws) if ok else 0}))
            else:
                print(f"k={args.k}: {'feasible' if ok else 'infeasible'}"
                      + (f" ({len(ws)} winning configs)" if ok else ""))
            return EXIT_OK if ok else EXIT_NEGATIVE
        value = medn_oracle(g, budget) if args.mode == "medn" else edn_oracle(g, budget)
        if args.json:
            print(json.dumps({"mode": args.mode, "value": value}))
        else:
            print(f"{args.mode} = {value}")
        return EXIT_OK
    except NotApplicableError as e:
        raise CliError(str(e))
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    app = create_app(budget_limit=args.budget)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def cmd_selftest(args):
    """Quick deterministic battery over the main code paths."""
    import random

    from .families import random_2split, random_3split_k14free, random_claw_free_split
    from .splitsolve import solve_k13_free, solve_k14_2split, solve_k14_3split
    from .strategy import (
        strategy_k13,
        strategy_k14_2split,
        strategy_k14_3split,
        verify_closure,
    )

    rng = random.Random(args.seed if args.seed is not None else 0)
    failures = []
    checks = 0

    def check(name, cond):
        nonlocal checks
        checks += 1
        if not cond:
            failures.append(name)

    p5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    check("P5 gamma", gamma_exact(p5) == 2)
    check("P5 medn", medn_oracle(p5) == 3)
    check("P5 edn", edn_oracle(p5) == 3)
    star = Graph(5, [(0, i) for i in range(1, 5)])
    check("star medn", medn_oracle(star) == 2)
    for _ in range(3):
        g = random_claw_free_split(rng.randint(4, 8), rng)
        p = split_partition(g)
        check("k13 value", solve_k13_free(g, p) == medn_oracle(g))
        check("k13 strategy", verify_closure(g, strategy_k13(g, p)).proven)
    for _ in range(3):
        g = random_2split(rng.randint(6, 9), rng)
        p = split_partition(g)
        check("2split value", solve_k14_2split(g, p)[0] == medn_oracle(g))
        check("2split strategy", verify_closure(g, strategy_k14_2split(g, p)).proven)
    for _ in range(2):
        g = random_3split_k14free(rng.randint(7, 9), rng)
        p = split_partition(g)
        check("3split value", solve_k14_3split(g, p)[0] == medn_oracle(g))
        check("3split strategy", verify_closure(g, strategy_k14_3split(g, p)).proven)
    if args.json:
        print(json.dumps({"checks": checks, "failures": failures}))
    else:
        print(f"{checks} checks, {len(failures)} failures"
              + (": " + ", ".join(failures) if failures else ""))
    return EXIT_OK if not failures else EXIT_NEGATIVE


def build_parser():
    ap = argparse.ArgumentParser(
        prog="domguard",
        description="domination and eternal-domination toolkit")
    ap.add_argument("--json", action="store_true", help="JSON output")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                    help="config-pair test budget for oracle work")
    ap.add_argument("--seed", type=int, default=None, help="RNG seed")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="compute domination parameters")
    a.add_argument("graph")
    a.add_argument("--param", default="medn",
                   help="comma-separated: gamma, alpha, medn, edn")
    a.add_argument("--method", default="auto",
                   choices=["auto", "k13", "k14-2", "k14-3", "oracle"])
    a.add_argument("--strict", action="store_true",
                   help="exit 3 when the budget runs out")
    a.set_defaults(fn=cmd_analyze)

    r = sub.add_parser("reduce", help="run a construction / reduction")
    r.add_argument("kind", choices=["x3c", "3dm", "gp2", "gp3", "gp5"])
    r.add_argument("input")
    r.add_argument("-o", "--out", default=None)
    r.set_defaults(fn=cmd_reduce)

    v = sub.add_parser("verify-strategy", help="closure-verify a strategy file")
    v.add_argument("graph")
    v.add_argument("strategy")
    v.set_defaults(fn=cmd_verify_strategy)

    o = sub.add_parser("oracle", help="exact configuration-game oracle")
    o.add_argument("graph")
    o.add_argument("--mode", default="medn", choices=["medn", "edn"])
    o.add_argument("--k", type=int, default=None,
                   help="test feasibility at a fixed guard count")
    o.set_defaults(fn=cmd_oracle)

    s = sub.add_parser("serve", help="run the session API")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=8128)
    s.set_defaults(fn=cmd_serve)

    t = sub.add_parser("selftest", help="quick deterministic self-check")
    t.set_defaults(fn=cmd_selftest)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
