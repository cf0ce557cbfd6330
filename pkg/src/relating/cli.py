"""Command line front end.

Vertex ids on this surface are 1-based, as in the DIMACS files.  Reports are
``key: value`` lines on stdout.  Exit status: 0 relating / check passed,
1 not relating / check failed, 2 input error, 3 forbidden cycle present,
4 brute-force cap exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .generate import GenerationFailed, random_cnf, random_graph
from .graph import Graph, GraphError, has_cycle_of_length, read_dimacs_graph, write_dimacs_graph
from .oracle import (
    enumerate_maximal_independent_sets,
    format_witness,
    is_relating_brute,
    parse_witness,
    verify_relating_witness,
)
from .poly import ForbiddenCycleDetected, is_relating_poly
from .reduction import CnfParseError, normalize_cnf, parse_cnf, reduce, write_cnf

OK, NO, INPUT_ERROR, PRECONDITION, CAP_EXCEEDED = 0, 1, 2, 3, 4
DEFAULT_MAX_VERTICES = 25


class _InputError(Exception):
    pass


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _load_graph(path: str) -> Graph:
    try:
        return read_dimacs_graph(Path(path).read_text())
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None
    except GraphError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _edge(g: Graph, x: int, y: int) -> tuple[int, int]:
    u, v = x - 1, y - 1
    if not g.has_edge(u, v):
        raise _InputError(f"{x} {y} is not an edge of the graph")
    return u, v


def _is_c4c6_free(g: Graph) -> bool:
    return not has_cycle_of_length(g, 4) and not has_cycle_of_length(g, 6)


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    x, y = _edge(g, args.x, args.y)
    mode = args.mode
    if mode == "auto":
        mode = "poly" if args.trust_cycle_free or _is_c4c6_free(g) else "brute"

    print(f"edge: {args.x} {args.y}")
    print(f"algorithm: {mode}")
    if mode == "poly":
        try:
            witness = is_relating_poly(g, x, y, trust_cycle_free=args.trust_cycle_free)
        except ForbiddenCycleDetected as exc:
            print(f"error: {exc}")
            return PRECONDITION
    else:
        if g.n > args.max_vertices:
            print(f"decision: unknown ({g.n} vertices exceeds cap {args.max_vertices})")
            return CAP_EXCEEDED
        witness = is_relating_brute(g, x, y)

    print(f"decision: {'relating' if witness is not None else 'not relating'}")
    print(format_witness(witness))
    return OK if witness is not None else NO


def cmd_reduce(args) -> int:
    try:
        source = parse_cnf(Path(args.cnf).read_text())
    except OSError as exc:
        raise _InputError(f"cannot read {args.cnf}: {exc.strerror}") from None
    except (CnfParseError, ValueError) as exc:
        raise _InputError(f"{args.cnf}: {exc}") from None
    formula = normalize_cnf(source)
    art = reduce(formula)
    prefix = Path(args.out_prefix)
    graph_path = prefix.with_name(prefix.name + ".graph")
    label_path = prefix.with_name(prefix.name + ".labels")
    graph_path.write_text(write_dimacs_graph(art.graph))
    label_path.write_text(art.write_labels())

    g = art.graph
    print(f"variables: {formula.n}")
    print(f"clauses: {formula.m}")
    print(f"tautologies removed: {source.m - formula.m}")
    print(f"vertices: {g.n}")
    print(f"edges: {g.edge_count()}")
    print(f"C4-free: {_yes(not has_cycle_of_length(g, 4))}")
    print(f"C5-free: {_yes(not has_cycle_of_length(g, 5))}")
    print(f"query: {art.x + 1} {art.y + 1}")
    print(f"graph file: {graph_path}")
    print(f"label file: {label_path}")
    return OK


def cmd_analyze(args) -> int:
    g = _load_graph(args.graph)
    cycles = {k: has_cycle_of_length(g, k) for k in (4, 5, 6)}
    print(f"vertices: {g.n}")
    print(f"edges: {g.edge_count()}")
    for k, present in cycles.items():
        print(f"C{k}: {_yes(present)}")

    capped = g.n > args.max_vertices
    status = OK
    if capped:
        note = f"skipped ({g.n} vertices exceeds cap {args.max_vertices})"
        print(f"alpha: {note}")
        print(f"well-covered: {note}")
        status = CAP_EXCEEDED
    else:
        sizes = {len(s) for s in enumerate_maximal_independent_sets(g)}
        print(f"alpha: {max(sizes, default=0)}")
        print(f"well-covered: {_yes(len(sizes) <= 1)}")

    if args.edges == "all":
        poly_ok = not cycles[4] and not cycles[6]
        for u, v in g.edges():
            label = f"edge {u + 1} {v + 1}"
            if poly_ok:
                verdict = is_relating_poly(g, u, v, trust_cycle_free=True)
            elif capped:
                print(f"{label}: skipped")
                continue
            else:
                verdict = is_relating_brute(g, u, v)
            print(f"{label}: {'relating' if verdict is not None else 'not relating'}")
    if capped:
        print("truncated: yes")
    return status


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    try:
        if args.kind == "cnf":
            text = write_cnf(random_cnf(args.n, args.m, args.k, rng))
        else:
            forbid = [int(k) for k in args.forbid.split(",")] if args.forbid else []
            g = random_graph(args.n, args.p, rng, forbid=forbid, attempts=args.attempts)
            text = write_dimacs_graph(g)
    except (ValueError, GenerationFailed) as exc:
        raise _InputError(str(exc)) from None
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_verify_witness(args) -> int:
    g = _load_graph(args.graph)
    x, y = _edge(g, args.x, args.y)
    try:
        lines = [ln for ln in Path(args.witness).read_text().splitlines() if ln.strip()]
        witness = parse_witness(lines[0]) if lines else None
    except OSError as exc:
        raise _InputError(f"cannot read {args.witness}: {exc.strerror}") from None
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    if not lines:
        raise _InputError(f"{args.witness} is empty")
    if witness is None:
        print("valid: no (witness none)")
        return NO
    if any(v >= g.n for v in witness.s):
        raise _InputError("witness names a vertex outside the graph")
    ok = verify_relating_witness(g, x, y, witness.s)
    print(f"valid: {_yes(ok)}")
    return OK if ok else NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relating", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether an edge is relating")
    p.add_argument("graph")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--mode", choices=["auto", "poly", "brute"], default="auto")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--trust-cycle-free", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", help="build the graph instance for a CNF formula")
    p.add_argument("cnf")
    p.add_argument("out_prefix")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("analyze", help="cycles, independence number, well-coveredness")
    p.add_argument("graph")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--edges", choices=["none", "all"], default="none")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="seeded random CNF or graph")
    p.add_argument("kind", choices=["cnf", "graph"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=0, help="clauses (cnf)")
    p.add_argument("--k", type=int, default=3, help="literals per clause (cnf)")
    p.add_argument("--p", type=float, default=0.2, help="edge probability (graph)")
    p.add_argument("--forbid", default="", help="comma-separated cycle lengths (graph)")
    p.add_argument("--attempts", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify-witness", help="check a witness file against an edge")
    p.add_argument("graph")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("witness")
    p.set_defaults(func=cmd_verify_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
