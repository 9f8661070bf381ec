"""Command-line front end.

Exit codes: 0 success (including inconclusive reports), 1 counterexample,
2 usage / parse / precondition error, 3 capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import graph6
from .constructions import BlowupSpec, GraphLike, as_spec, materialize, parse_graph_expr
from .errors import CapacityError, ParseError, PreconditionError, TuranLabError
from .graph import MAX_ORDER, Graph, count_copies, count_embeddings
from .homs import count_copies_blowup, count_embeddings_blowup
from .optimizer import best_multipartite
from .oracle import ex_oracle
from . import verifiers

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(TuranLabError):
    pass


def _expr(text: str) -> GraphLike:
    return parse_graph_expr(text)


def _graph(text: str) -> Graph:
    x = parse_graph_expr(text)
    if isinstance(x, BlowupSpec):
        if x.total > MAX_ORDER:
            raise CapacityError(f"{text!r} materialises to {x.total} > {MAX_ORDER} vertices")
        return materialize(x)
    return x


def count(h: GraphLike, g: GraphLike, labeled: bool = False) -> int:
    """Exact count, materialised for plain graphs and spec-level otherwise."""
    if isinstance(h, Graph) and isinstance(g, Graph):
        return count_embeddings(h, g) if labeled else count_copies(h, g)
    try:
        return count_embeddings_blowup(h, g) if labeled else count_copies_blowup(h, g)
    except CapacityError:
        hs, gs = as_spec(h), as_spec(g)
        if hs.total > MAX_ORDER or gs.total > MAX_ORDER:
            raise
        hm, gm = materialize(hs), materialize(gs)
        return count_embeddings(hm, gm) if labeled else count_copies(hm, gm)


# ---------------------------------------------------------------- verify dispatch


def _grid(values) -> list:
    if not isinstance(values, list):
        raise UsageError("grids must be JSON arrays")
    return values


def _ints(values) -> list[int]:
    return [int(v) for v in _grid(values)]


def _run_claim(claim: str, p: dict, threads: int | None):
    get = p.get
    if claim == "zykov":
        return verifiers.verify_zykov(int(p["max_n"]), int(p["max_r"]), threads=threads)
    if claim == "theorem-main":
        core = get("core")
        if core is not None:
            core = (list(core[0]), list(core[1]))
        return verifiers.verify_theorem_main_instance(
            _expr(p["h"]), _graph(p["f"]), int(p["n"]), core=core, mode=get("mode"), threads=threads)
    if claim == "prop-main2":
        return verifiers.verify_prop_main2_gap(
            _graph(p["f"]), int(p["k"]), int(get("a_max", 60)),
            _grid(get("gamma_grid", ["1/16", "1/20", "1/24"])),
            _ints(get("n_grid", [1000, 10000, 100000])),
            path_order=None if get("path_order") is None else int(p["path_order"]))
    if claim == "lemma-lemi":
        return verifiers.verify_lemma_lemi(_graph(p["f"]))
    if claim == "turg1":
        return verifiers.verify_turg1_instance(
            int(p["ell"]), int(p["m"]), _graph(p["f"]), int(p["n"]), mode=get("mode", "host"), threads=threads)
    if claim == "turg2":
        return verifiers.verify_turg2_instance(
            int(p["k"]), int(p["m"]), int(p["a"]), int(p["b"]), _graph(p["f"]), int(p["n"]))
    if claim == "main3":
        opt = {key: int(p[key]) for key in ("m", "a", "b", "n") if get(key) is not None}
        return verifiers.verify_main3_separation(_graph(p["f"]), **opt)
    if claim == "conjecture-probe":
        return verifiers.conjecture_probe(_expr(p["h"]), _graph(p["f"]), int(p["n"]),
                                          mode=get("mode"), threads=threads)
    raise UsageError(f"unknown claim {claim!r}")


CLAIMS = ("zykov", "theorem-main", "prop-main2", "lemma-lemi", "turg1", "turg2", "main3", "conjecture-probe")


def report_json(report: verifiers.ClaimReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True)


# ---------------------------------------------------------------- commands


def cmd_count(args, out) -> int:
    print(count(_expr(args.h), _expr(args.g), args.labeled), file=out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    res = ex_oracle(args.n, _graph(args.h), _graph(args.f),
                    mode="maximal-only" if args.maximal_only else "all", threads=args.threads)
    print(res.value, file=out)
    if args.witnesses:
        with open(args.witnesses, "w") as fh:
            for w in res.witnesses:
                fh.write(w + "\n")
    return EXIT_OK


def cmd_optimize(args, out) -> int:
    best = best_multipartite(as_spec(_expr(args.h)), args.n, args.r,
                             "heuristic" if args.heuristic else "exact")
    print(" ".join(map(str, best.sizes.parts)), best.count, best.mode, file=out)
    return EXIT_OK


def cmd_g6(args, out) -> int:
    print(graph6.encode(_graph(args.expr)), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        params = json.loads(args.params)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--params is not valid JSON: {exc}")
    if not isinstance(params, dict):
        raise UsageError("--params must be a JSON object")
    try:
        report = _run_claim(args.claim, params, args.threads)
    except KeyError as exc:
        raise UsageError(f"missing parameter {exc.args[0]!r} for claim {args.claim}")
    except (TypeError, ValueError) as exc:
        if isinstance(exc, TuranLabError):
            raise
        raise UsageError(f"malformed parameter: {exc}")
    if args.no_timing:
        report.elapsed_ms = 0
    line = report_json(report)
    if args.out:
        with open(args.out, "a") as fh:
            fh.write(line + "\n")
    else:
        print(line, file=out)
    return EXIT_COUNTEREXAMPLE if report.status == "counterexample" else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="turanlab", description="Exact generalised Turán computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="copies (or labelled copies) of H in G")
    p.add_argument("--h", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--labeled", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("oracle", help="exact ex(n, H, F) by enumeration")
    p.add_argument("--h", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--maximal-only", action="store_true")
    p.add_argument("--witnesses")
    p.add_argument("--threads", type=int)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("optimize", help="best complete r-partite host")
    p.add_argument("--h", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--heuristic", action="store_true")
    p.set_defaults(fn=cmd_optimize)

    p = sub.add_parser("g6", help="graph6 encoding of an expression")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_g6)

    p = sub.add_parser("verify", help="run a claim check and emit a JSON report")
    p.add_argument("--claim", required=True, choices=CLAIMS)
    p.add_argument("--params", default="{}")
    p.add_argument("--out")
    p.add_argument("--threads", type=int)
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers: list[tuple[type, int]] = [
        (CapacityError, EXIT_CAPACITY),
        (ParseError, EXIT_USAGE),
        (PreconditionError, EXIT_USAGE),
        (TuranLabError, EXIT_USAGE),
    ]
    try:
        return args.fn(args, out)
    except TuranLabError as exc:
        for cls, code in handlers:
            if isinstance(exc, cls):
                print(f"turanlab: {type(exc).__name__}: {exc}", file=err)
                return code
        raise


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
