"""Command-line interface.

Exit codes: 0 = success/verified, 1 = property refuted (a counterexample
where forcing was expected, or a failed verification), 2 = usage error,
3 = indeterminate (search budget exhausted).  All randomized subcommands
take an explicit --seed; there is no hidden entropy.  A --workers flag is
accepted for interface stability; execution is deterministic and results
do not depend on it.  MINOR_RAMSEY_BUDGET overrides the default search
budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import acceptance, asymptotics, gamma, minors, ramsey
from . import graph as gr

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3


def default_budget() -> int:
    env = os.environ.get("MINOR_RAMSEY_BUDGET")
    return int(env) if env else minors.DEFAULT_BUDGET


def load_graph(path: str) -> gr.Graph:
    """Graph from file: edge-list format if the first data line is a pair of
    integers, graph6 otherwise (or always graph6 for .g6 files)."""
    text = Path(path).read_text()
    if path.endswith(".g6"):
        return gr.parse_graph6(text.strip().splitlines()[0])
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError(f"{path}: empty graph file")
    head = lines[0].split()
    if len(head) == 2 and all(tok.lstrip("-").isdigit() for tok in head):
        return gr.parse_edge_list(text)
    return gr.parse_graph6(lines[0])


def _model_json(model: minors.MinorModel) -> list[list[int]]:
    return [sorted(bs) for bs in model.branch_sets]


def cmd_minor(args) -> int:
    host = load_graph(args.host)
    target = load_graph(args.target)
    res = minors.find_minor(host, target, args.budget)
    if args.json:
        print(json.dumps({"status": res.status, "nodes": res.nodes,
                          "model": _model_json(res.model) if res.model else None}))
    elif res.status == minors.FOUND:
        print(minors.serialize_model(res.model), end="")
    else:
        print("none" if res.status == minors.ABSENT else "indeterminate")
    return EXIT_INDETERMINATE if res.status == minors.INDETERMINATE else EXIT_OK


def cmd_hadwiger(args) -> int:
    g = load_graph(args.graph)
    mode = "heuristic" if args.heuristic else "exact"
    res = minors.hadwiger_number(g, mode=mode, seed=args.seed,
                                 restarts=args.restarts, budget=args.budget)
    if args.json:
        print(json.dumps({"value": res.value, "exact": res.exact,
                          "witness": _model_json(res.witness)}))
    else:
        kind = "exact" if res.exact else "lower bound"
        print(f"hadwiger {res.value} ({kind})")
        print(minors.serialize_model(res.witness), end="")
    if mode == "exact" and not res.exact:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_gamma(args) -> int:
    g = load_graph(args.graph)
    if args.method == "uniform":
        res = gamma.gamma_uniform(g)
    elif args.method == "grid":
        res = gamma.gamma_grid_oracle(g, args.resolution, args.wmax)
    else:
        res = gamma.gamma_solve(g, gamma.SolverConfig(seed=args.seed))
    print(json.dumps({
        "value": res.value,
        "weights": list(res.weights),
        "constraint_value": g.n - res.constraint_slack,
        "method": res.method,
        "warnings": list(res.warnings),
    }))
    return EXIT_OK


def _target_from_args(args) -> ramsey.Target:
    if args.k is not None:
        return ramsey.clique_target(args.k)
    return ramsey.minor_target(load_graph(args.target))


def cmd_ramsey(args) -> int:
    target = _target_from_args(args)
    start = time.perf_counter()
    verdict = ramsey.exhaustive_check(args.n, args.ell, target, args.budget)
    out = {
        "n": verdict.n,
        "ell": verdict.ell,
        "target": verdict.target,
        "outcome": verdict.outcome,
        "colorings_examined": verdict.colorings_examined,
        "seconds": round(time.perf_counter() - start, 3),
    }
    if verdict.counterexample is not None and args.out:
        Path(args.out).write_text(ramsey.write_coloring(verdict.counterexample))
        out["counterexample_file"] = args.out
    print(json.dumps(out))
    if verdict.outcome == ramsey.ALL_FORCED:
        return EXIT_OK
    if verdict.outcome == ramsey.COUNTEREXAMPLE:
        return EXIT_REFUTED
    return EXIT_INDETERMINATE


def cmd_construct(args) -> int:
    if args.kind in ("two_cliques", "walecki"):
        if args.param is None:
            raise ValueError(f"--param required for {args.kind}")
        coloring = ramsey.construct(args.kind, args.param)
    else:
        coloring = ramsey.construct(args.kind)
    text = ramsey.write_coloring(coloring)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return EXIT_OK


def cmd_verify_coloring(args) -> int:
    coloring = ramsey.parse_coloring(Path(args.coloring).read_text())
    target = _target_from_args(args)
    ok = ramsey.verify_lower_bound(coloring, target, args.budget)
    if args.json:
        print(json.dumps({"verified": ok, "target": target.name}))
    else:
        print("verified: no color class contains the target" if ok
              else "refuted: some color class contains the target")
    return EXIT_OK if ok else EXIT_REFUTED


def cmd_experiment(args) -> int:
    if args.name == "bce":
        n_values = [int(x) for x in args.n_values.split(",")]
        report = asymptotics.bce_experiment(n_values, args.p, args.trials,
                                            args.seed, args.mode)
    elif args.name == "density":
        report = asymptotics.density_threshold_experiment(
            args.k, args.n, args.trials, args.seed)
    else:
        k_values = [int(x) for x in args.k_values.split(",")]
        report = asymptotics.star_ramsey_experiment(
            k_values, args.epsilon, args.trials, args.seed)
    csv_path, json_path = report.write(args.out_dir)
    print(json.dumps({"csv": str(csv_path), "json": str(json_path)}))
    return EXIT_OK


def cmd_find_mono(args) -> int:
    coloring = ramsey.parse_coloring(Path(args.coloring).read_text())
    target = load_graph(args.target)
    witness = ramsey.proof_guided_finder(coloring, target, args.eps_prime,
                                         args.budget)
    if witness is None:
        print("none")
    elif args.json:
        print(json.dumps({"color": witness.color,
                          "model": _model_json(witness.model)}))
    else:
        print(f"color {witness.color}")
        print(minors.serialize_model(witness.model), end="")
    return EXIT_OK


def cmd_repro(args) -> int:
    results = acceptance.run_all(args.only)
    width = max(len(r.name) for r in results)
    all_ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        all_ok &= r.passed
        print(f"{status}  {r.name:<{width}}  {r.seconds:8.2f}s  {r.detail}")
    print("result:", "PASS" if all_ok else "FAIL")
    return EXIT_OK if all_ok else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minor-ramsey",
        description="Exact minor containment, Hadwiger numbers, and "
                    "minor-Ramsey searches.")
    parser.add_argument("--workers", type=int, default=None,
                        help="parallelism cap (results are independent of it)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minor", help="decide minor containment")
    p.add_argument("--host", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--budget", type=int, default=default_budget())
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_minor)

    p = sub.add_parser("hadwiger", help="largest clique minor")
    p.add_argument("--graph", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--heuristic", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--budget", type=int, default=default_budget())
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_hadwiger)

    p = sub.add_parser("gamma", help="vertex-weighting optimum")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=["solver", "uniform", "grid"],
                   default="solver")
    p.add_argument("--resolution", type=float, default=0.05)
    p.add_argument("--wmax", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_gamma)

    p = sub.add_parser("ramsey", help="exhaustive coloring search")
    tgt = p.add_mutually_exclusive_group(required=True)
    tgt.add_argument("--k", type=int)
    tgt.add_argument("--target")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", help="write a counterexample coloring here")
    p.set_defaults(fn=cmd_ramsey)

    p = sub.add_parser("construct", help="emit a lower-bound coloring")
    p.add_argument("--kind", required=True,
                   choices=sorted(ramsey.CONSTRUCTIONS))
    p.add_argument("--param", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify-coloring",
                       help="check a coloring avoids a monochromatic target")
    p.add_argument("--coloring", required=True)
    tgt = p.add_mutually_exclusive_group(required=True)
    tgt.add_argument("--k", type=int)
    tgt.add_argument("--target")
    p.add_argument("--budget", type=int, default=default_budget())
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify_coloring)

    p = sub.add_parser("experiment", help="seeded Monte Carlo reports")
    p.add_argument("--name", required=True, choices=["bce", "density", "star"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out-dir", default=".")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--n-values", default="10,12,14")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--mode", choices=["exact", "heuristic"], default="exact")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--k-values", default="20,40")
    p.add_argument("--epsilon", type=float, default=0.2)
    p.set_defaults(fn=cmd_experiment)

    p = sub.add_parser("find-mono",
                       help="proof-guided monochromatic minor search")
    p.add_argument("--coloring", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--eps-prime", type=float, default=0.05)
    p.add_argument("--budget", type=int, default=default_budget())
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_find_mono)

    p = sub.add_parser("repro", help="run the acceptance suite")
    p.add_argument("--only", nargs="*", help="substring filters on criteria")
    p.set_defaults(fn=cmd_repro)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE


if __name__ == "__main__":
    sys.exit(main())
