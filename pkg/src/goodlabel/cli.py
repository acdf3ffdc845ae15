"""Command-line front end.

Every command prints one report. ``--format json`` (default) emits
sorted-key JSON; ``--format text`` emits the same fields as flattened
``key: value`` lines. Rationals are always written as ``"p/q"`` strings.

Exit codes: 0 success, 1 invalid input or usage, 2 inconclusive result
(cap, budget or round limit reached).
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import math
import secrets
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import bounds
from .graph import Graph, GraphError, GenerationError, degree_stats, forbidden_screen, generate, girth, parse_graph, write_graph
from .labeller import (
    PreconditionError,
    exhaustive_decide_good,
    gamma,
    hypercube_labelling,
    mt_label,
    random_labelling,
    write_gamma_table,
)
from .walks import (
    Labelling,
    LabellingError,
    WalkBudgetExceeded,
    count_nice_walks,
    find_duplicate_nice_walks,
    is_good,
    parse_labelling,
    write_labelling,
)

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE = 0, 1, 2
MAX_SEED = 2**64 - 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        raise TypeError("floats are not serialized")
    if isinstance(x, Graph):
        return write_graph(x).splitlines()
    if isinstance(x, Labelling):
        return write_labelling(x).splitlines()
    if dataclasses.is_dataclass(x):
        return {f.name: jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _flatten(prefix, x, out):
    if isinstance(x, dict):
        for k in sorted(x):
            _flatten(f"{prefix}.{k}" if prefix else k, x[k], out)
    elif isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
        for i, v in enumerate(x):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append(f"{prefix}: {json.dumps(x)}")
    return out


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    return "\n".join(_flatten("", report, []))


# -- input helpers ---------------------------------------------------------------

class _Inputs:
    def __init__(self):
        self.digests = {}

    def read(self, role: str, path: str) -> str:
        data = Path(path).read_bytes()
        self.digests[role] = {"path": path, "sha256": hashlib.sha256(data).hexdigest()}
        return data.decode()


def _seed(value: str) -> int:
    s = int(value)
    if not 0 <= s <= MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return s


def _positive(value: str) -> int:
    x = int(value)
    if x < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return x


def _resolve_seed(args) -> int:
    if args.seed is None:
        args.seed = secrets.randbits(64)
    return args.seed


def _write_out(path, text):
    if path:
        Path(path).write_text(text + "\n")


# -- commands -------------------------------------------------------------------

def cmd_gen(args, inputs):
    params = {k: getattr(args, k) for k in ("n", "d", "a", "b") if getattr(args, k) is not None}
    seed = _resolve_seed(args) if args.family == "random_regular" else None
    g = generate(args.family, seed=seed, **params)
    _write_out(args.out, write_graph(g))
    return {"family": args.family, "params": params, "n": g.n, "m": g.m, "graph": g}, EXIT_OK


def _load_graph_and_labelling(args, inputs):
    g = parse_graph(inputs.read("graph", args.graph))
    phi = parse_labelling(inputs.read("labelling", args.labelling), g)
    return g, phi


def cmd_verify(args, inputs):
    g, phi = _load_graph_and_labelling(args, inputs)
    verdict = is_good(g, phi, cap=args.cap)
    code = EXIT_INCONCLUSIVE if verdict.status == "inconclusive" else EXIT_OK
    return {"verdict": verdict}, code


def cmd_count(args, inputs):
    g, phi = _load_graph_and_labelling(args, inputs)
    return {"k": args.k, "nice_walks": count_nice_walks(g, phi, args.k)}, EXIT_OK


def cmd_duplicates(args, inputs):
    g, phi = _load_graph_and_labelling(args, inputs)
    try:
        found = find_duplicate_nice_walks(g, phi, args.k, budget=args.budget)
    except WalkBudgetExceeded as exc:
        return {"k": args.k, "status": "budget_exceeded", "detail": str(exc)}, EXIT_INCONCLUSIVE
    if found is None:
        return {"k": args.k, "status": "none"}, EXIT_OK
    u, v, w1, w2 = found
    return {"k": args.k, "status": "found", "u": u, "v": v, "walks": [w1, w2]}, EXIT_OK


def cmd_stats(args, inputs):
    g = parse_graph(inputs.read("graph", args.graph))
    return {
        "n": g.n,
        "degree_stats": degree_stats(g),
        "girth": girth(g),
        "forbidden_screen": forbidden_screen(g),
    }, EXIT_OK


def cmd_label(args, inputs):
    if args.method == "hypercube":
        if args.d is None:
            raise UsageError("label --method hypercube needs --d")
        g, phi = hypercube_labelling(args.d)
        payload = {"method": "hypercube", "graph": g, "labelling": phi, "verdict": is_good(g, phi).status}
        _write_out(args.out, write_labelling(phi))
        return payload, EXIT_OK
    if args.graph is None:
        raise UsageError(f"label --method {args.method} needs a graph file")
    g = parse_graph(inputs.read("graph", args.graph))
    code = EXIT_OK
    if args.method == "random":
        phi = random_labelling(g, _resolve_seed(args))
        payload = {"method": "random", "labelling": phi}
    elif args.method == "mt":
        if args.k is None:
            raise UsageError("label --method mt needs --k")
        phi, stats = mt_label(g, args.k, seed=_resolve_seed(args), max_rounds=args.max_rounds, override=args.override)
        payload = {"method": "mt", "k": args.k, "stats": stats, "labelling": phi}
        if stats.terminated:
            payload["verdict"] = is_good(g, phi, cap=args.cap).status
        else:
            code = EXIT_INCONCLUSIVE
    else:
        res = exhaustive_decide_good(g, budget=args.budget)
        payload = {"method": "exhaustive", "status": res.status, "orderings_checked": res.orderings_checked}
        phi = res.labelling
        if phi is not None:
            payload["labelling"] = phi
        if res.status == "budget_exceeded":
            code = EXIT_INCONCLUSIVE
    if phi is not None:
        _write_out(args.out, write_labelling(phi))
    return payload, code


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"bounds --op {args.op} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))


def cmd_bounds(args, inputs):
    op = args.op
    if op == "ab":
        _need(args, "t", "q")
        seq = bounds.ab_sequences(args.t, args.q)
        return {"op": op, "t": args.t, "q": args.q, "a": list(seq.a), "b": list(seq.b)}, EXIT_OK
    if op == "g":
        _need(args, "n", "m", "delta", "k", "q")
        value = bounds.g_value(args.n, args.m, args.delta, args.k, args.q)
        return {"op": op, "n": args.n, "m": args.m, "delta": args.delta, "k": args.k, "q": args.q, "g": value}, EXIT_OK
    if op == "lemma1":
        _need(args, "n", "m", "delta", "k")
        sched = [int(x) for x in args.schedule.split(",") if x] if args.schedule else []
        value = bounds.lemma1_lower(int(args.n), int(args.m), int(args.delta), sched, args.k)
        return {"op": op, "schedule": sched, "k": args.k, "lower_bound": value}, EXIT_OK
    if op == "q":
        _need(args, "t", "c")
        params = bounds.find_q_prime(args.t, args.c)
        return {"op": op, "t": args.t, "c": args.c, "q_prime": params.q_prime, "q": params.q}, EXIT_OK
    if op == "epsilon":
        _need(args, "t", "c")
        res = bounds.epsilon(args.t, args.c)
        return {"op": op, "t": args.t, "c": args.c, "q_prime": res.q_prime, "alpha": res.alpha, "epsilon": res.epsilon}, EXIT_OK
    if op == "lll":
        _need(args, "delta")
        res = bounds.lll_min_k(int(args.delta))
        return {"op": op, "delta": res.delta, "k": res.k, "girth_threshold": res.girth_threshold, "four_e_upper": bounds.FOUR_E_UPPER}, EXIT_OK
    _need(args, "g")
    return {"op": op, "corollary": bounds.corollary_params(args.g)}, EXIT_OK


def cmd_certify(args, inputs):
    g = parse_graph(inputs.read("graph", args.graph))
    st = degree_stats(g)
    cert = bounds.theorem1_certify(g.n, st.avg_degree, st.max_degree, args.t, args.c)
    return {"certificate": cert}, EXIT_OK


def cmd_gamma(args, inputs):
    entry = gamma(args.n, cap=args.cap, threads=args.threads)
    payload = {"gamma": entry}
    if args.table_dir:
        entries = [gamma(n, cap=args.cap, threads=args.threads) for n in range(1, args.n)] + [entry]
        write_gamma_table(entries, args.table_dir)
        payload["table"] = [[e.n, e.gamma] for e in entries]
    return payload, EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--threads", type=_positive, default=1, help="worker cap for parallel searches")
    common.add_argument("--timing", action="store_true", help="add wall time to the report (breaks byte-identity)")

    parser = _Parser(prog="goodlabel", description="Good edge-labellings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="generate a graph")
    p.add_argument("family", choices=["path", "cycle", "complete", "complete_bipartite", "hypercube", "random_regular"])
    for name in ("n", "d", "a", "b"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="decide whether a labelling is good")
    p.add_argument("graph")
    p.add_argument("labelling")
    p.add_argument("--cap", type=_positive)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", parents=[common], help="count nice k-walks")
    p.add_argument("graph")
    p.add_argument("labelling")
    p.add_argument("--k", type=_positive, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("duplicates", parents=[common], help="find two nice k-walks with equal ends")
    p.add_argument("graph")
    p.add_argument("labelling")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--budget", type=_positive, default=10**6)
    p.set_defaults(func=cmd_duplicates)

    p = sub.add_parser("stats", parents=[common], help="degree statistics, girth, K3/K23 screen")
    p.add_argument("graph")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("label", parents=[common], help="construct a labelling")
    p.add_argument("graph", nargs="?")
    p.add_argument("--method", choices=["random", "mt", "exhaustive", "hypercube"], required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--d", type=int)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--max-rounds", type=_positive, default=100_000)
    p.add_argument("--budget", type=_positive)
    p.add_argument("--cap", type=_positive)
    p.add_argument("--override", action="store_true", help="run mt below the girth precondition")
    p.add_argument("--out")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("bounds", parents=[common], help="evaluate the exact bound calculus")
    p.add_argument("--op", choices=["ab", "g", "lemma1", "q", "epsilon", "lll", "corollary"], required=True)
    p.add_argument("--t", type=_positive)
    p.add_argument("--c", type=_positive)
    p.add_argument("--k", type=_positive)
    p.add_argument("--q", type=Fraction)
    p.add_argument("--n", type=Fraction)
    p.add_argument("--m", type=Fraction)
    p.add_argument("--delta", type=Fraction)
    p.add_argument("--schedule", help="comma-separated thresholds, top level first")
    p.add_argument("--g", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("certify", parents=[common], help="badness certificate from density")
    p.add_argument("graph")
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("--c", type=_positive, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("gamma", parents=[common], help="max edges of a good graph on n vertices")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--cap", type=_positive, default=5)
    p.add_argument("--table-dir", help="also write gamma.tsv and witness files for 1..n here")
    p.set_defaults(func=cmd_gamma)
    return parser


_NOT_ECHOED = ("--format", "--threads")


def _echo(argv):
    # presentation and worker-count flags do not change the payload
    out, skip = [], False
    for a in argv:
        if skip:
            skip = False
        elif a in _NOT_ECHOED:
            skip = True
        elif not a.startswith(tuple(f + "=" for f in _NOT_ECHOED)):
            out.append(a)
    return out


def run(argv=None) -> tuple[int, dict, str]:
    """Execute one command; returns ``(exit_code, report, output_format)``."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return EXIT_INVALID, {"argv": _echo(argv), "error": str(exc)}, "json"
    inputs = _Inputs()
    start = time.perf_counter()
    report = {"command": args.command, "argv": _echo(argv)}
    try:
        payload, code = args.func(args, inputs)
        report["result"] = jsonable(payload)
    except (UsageError, GraphError, GenerationError, LabellingError, bounds.BoundsError, PreconditionError, OSError) as exc:
        code = EXIT_INVALID
        report["error"] = f"{type(exc).__name__}: {exc}"
    report["inputs"] = inputs.digests
    if getattr(args, "seed", None) is not None:
        report["seed"] = args.seed
    if args.timing:
        report["wall_time_s"] = f"{time.perf_counter() - start:.6f}"
    return code, report, args.format


def main(argv=None) -> int:
    code, report, fmt = run(argv)
    print(render(report, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
