"""Command-line entry point: ``localcolour <command> ...``.

Exit codes: 0 success, 1 infeasible parameters (palette below the bound or
an oracle guard exceeded), 2 malformed input or structure, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence

from .bench import format_bench, run_bench
from .colouring import TraceEvent, format_colouring
from .driver import edge_colour, random_order
from .errors import (
    ColouringError,
    GuardExceeded,
    InfeasiblePalette,
    InvariantViolation,
    LoopError,
    ParseError,
    StructureError,
)
from .linegraph import (
    format_simple_graph,
    format_vertex_colouring,
    line_graph,
    read_simple_graph,
    vertex_colour_line_graph,
)
from .multigraph import local_edge_bound, read_multigraph
from .oracle import OracleGuard, chromatic_index_bf, chromatic_number_bf, local_vertex_bound_bf
from .quasiline.graphs import local_bound
from .quasiline.tree import colour_decomposition, load_qltree, read_qltree


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    k: int | None = None
    order: str = "input"
    seed: int | None = None
    trace: bool = False
    verify: bool = False
    output: str | None = None
    guard: OracleGuard | None = None

    def check(self) -> None:
        if self.order == "random" and self.seed is None:
            raise UsageError("--order random needs --seed")
        if self.order != "random" and self.seed is not None:
            raise UsageError("--seed only applies with --order random")


class UsageError(ValueError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


# ------------------------------------------------------------------ commands

def cmd_bound(args) -> int:
    g = read_multigraph(_read(args.input))
    report = local_edge_bound(g)
    print(f"gamma {report.gamma}")
    if report.argmax is not None:
        u, v = g.edges[report.argmax]
        print(f"argmax {report.argmax} {u} {v}")
    if args.csv:
        sys.stdout.write(report.to_csv(g))
    return 0


def cmd_edge_color(args) -> int:
    cfg = RunConfig(
        "edge-color", [args.input], args.k, args.order, args.seed,
        args.trace, args.verify, args.output, OracleGuard.from_env(),
    )
    cfg.check()
    g = read_multigraph(_read(args.input))
    report = local_edge_bound(g)
    order = random_order(g.m, cfg.seed) if cfg.order == "random" else None
    tracer = _print_trace if cfg.trace else None
    k = report.gamma if cfg.k is None else cfg.k
    c = edge_colour(g, k, order, tracer=tracer)
    problem = c.validate()
    if problem is not None or not c.is_complete():
        raise InvariantViolation(problem or "engine left an edge uncoloured")
    _emit(format_colouring(c), cfg.output)
    summary = f"colours {len(c.used_colours())} gamma {report.gamma} proper ok"
    print(summary, file=sys.stdout if cfg.output not in (None, "-") else sys.stderr)
    if cfg.verify:
        out = sys.stdout if cfg.output not in (None, "-") else sys.stderr
        try:
            chi = chromatic_index_bf(g, cfg.guard)
            print(f"chi-prime {chi}", file=out)
            if len(c.used_colours()) < chi:
                raise InvariantViolation("engine used fewer colours than the chromatic index")
        except GuardExceeded as exc:
            print(f"chi-prime skipped ({exc})", file=out)
    return 0


def cmd_line_graph(args) -> int:
    g = read_multigraph(_read(args.input))
    if args.colour:
        _emit(format_vertex_colouring(vertex_colour_line_graph(g)), args.output)
    else:
        _emit(format_simple_graph(line_graph(g)), args.output)
    return 0


def cmd_quasiline(args) -> int:
    tree = read_qltree(sys.stdin.read()) if args.input == "-" else load_qltree(args.input)
    colour = colour_decomposition(tree)
    _emit(format_vertex_colouring(colour), args.output)
    gamma = local_bound(tree.graph())
    summary = f"colours {len(set(colour.values()))} gamma {gamma} proper ok"
    print(summary, file=sys.stdout if args.output not in (None, "-") else sys.stderr)
    return 0


def cmd_oracle(args) -> int:
    guard = OracleGuard.from_env()
    text = _read(args.input)
    if args.which == "chi-prime":
        print(f"chi-prime {chromatic_index_bf(read_multigraph(text), guard)}")
    elif args.which == "chi":
        print(f"chi {chromatic_number_bf(read_simple_graph(text), guard)}")
    else:
        print(f"gamma-l {local_vertex_bound_bf(read_simple_graph(text), guard)}")
    return 0


def cmd_bench(args) -> int:
    try:
        sizes = tuple(int(s) for s in args.sizes.split(","))
    except ValueError:
        raise UsageError("--sizes takes comma-separated integers") from None
    if args.runs < 5:
        raise UsageError("--runs must be at least 5")
    rows = run_bench(sizes, args.runs, args.seed, args.jobs)
    _emit(format_bench(rows), args.output)
    return 0


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="localcolour", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="local edge bound of a multigraph")
    b.add_argument("input")
    b.add_argument("--csv", action="store_true", help="also print per-edge terms as CSV")
    b.set_defaults(func=cmd_bound)

    e = sub.add_parser("edge-color", aliases=["edge-colour"], help="edge-colour a multigraph")
    e.add_argument("input")
    e.add_argument("-k", type=int, help="palette size (default: the local bound)")
    e.add_argument("--order", choices=["input", "random"], default="input")
    e.add_argument("--seed", type=int)
    e.add_argument("--trace", action="store_true", help="log recolouring events to stderr")
    e.add_argument("--verify", action="store_true", help="compare with the exact chromatic index when small")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_edge_color)

    lg = sub.add_parser("line-graph", help="write L(G), or colour it with --colour")
    lg.add_argument("input")
    lg.add_argument("--colour", "--color", action="store_true")
    lg.add_argument("-o", "--output")
    lg.set_defaults(func=cmd_line_graph)

    q = sub.add_parser("quasiline", help="colour a decomposed quasi-line graph")
    q.add_argument("input")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_quasiline)

    o = sub.add_parser("oracle", help="exhaustive values for small inputs")
    o.add_argument("which", choices=["chi-prime", "chi", "gamma-l"])
    o.add_argument("input")
    o.set_defaults(func=cmd_oracle)

    bn = sub.add_parser("bench", help="time the edge colouring on random multigraphs")
    bn.add_argument("--sizes", default="1000,2000,4000")
    bn.add_argument("--runs", type=int, default=5)
    bn.add_argument("--seed", type=int, default=0)
    bn.add_argument("--jobs", type=int, default=1)
    bn.add_argument("-o", "--output")
    bn.set_defaults(func=cmd_bench)
    return p


def _print_trace(ev: TraceEvent) -> None:
    print("trace " + ev.format(), file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InfeasiblePalette, GuardExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, LoopError, StructureError, ColouringError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
