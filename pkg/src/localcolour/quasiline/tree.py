"""Decomposition trees of quasi-line graphs and their colouring.

Leaves are line graphs of multigraphs or circular interval graphs.  Inner
nodes glue two children along a shared clique (``cut``) or attach a linear
interval strip to one child through a canonical interval 2-join (``join``).
Every node stands for a graph on global vertex ids.

The text format is documented in the README; :func:`read_qltree` and
:func:`format_qltree` round-trip it.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..errors import InvariantViolation, ParseError, StructureError
from ..linegraph import line_graph, vertex_colour_line_graph
from ..multigraph import Multigraph, _parse_mgraph, load_multigraph
from .cutset import paste_on_clique_cutset
from .graphs import Adj, induced, is_clique, local_bound, proper_problem
from .intervals import CircularIntervalGraph, LinearIntervalGraph, colour_circular_interval_exact
from .join import CanonicalJoin, extend_over_join, join_bound_of
from .strips import StripComposition


@dataclass
class LineLeaf:
    """``L(graph)``, with line vertex ``e`` named ``ids[e]``."""

    graph: Multigraph
    ids: list[int]
    path: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.ids) != self.graph.m or len(set(self.ids)) != len(self.ids):
            raise StructureError("a line leaf needs one distinct id per multigraph edge")


@dataclass
class CircLeaf:
    graph: CircularIntervalGraph


@dataclass
class CutNode:
    left: "Node"
    right: "Node"
    clique: list[int]


@dataclass
class JoinNode:
    """``child`` is the first side; ``strip`` is attached by its ends of sizes ``x2`` and ``y2``."""

    child: "Node"
    x1: list[int]
    y1: list[int]
    strip: LinearIntervalGraph
    x2: int
    y2: int


Node = Union[LineLeaf, CircLeaf, CutNode, JoinNode]


# ------------------------------------------------------------------- graphs

def node_graph(node: Node, memo: dict[int, Adj] | None = None) -> Adj:
    """Adjacency of the graph a node stands for; validates the node on the way."""
    memo = {} if memo is None else memo
    key = id(node)
    if key in memo:
        return memo[key]
    if isinstance(node, LineLeaf):
        h = line_graph(node.graph)
        adj = {node.ids[e]: {node.ids[f] for f in h.adj[e]} for e in range(h.n)}
    elif isinstance(node, CircLeaf):
        adj = node.graph.adjacency()
    elif isinstance(node, CutNode):
        a, b = node_graph(node.left, memo), node_graph(node.right, memo)
        shared = set(a) & set(b)
        if shared != set(node.clique) or len(node.clique) != len(shared):
            raise StructureError("children of a cut node must overlap exactly in its clique")
        if not is_clique(a, node.clique) or not is_clique(b, node.clique):
            raise StructureError("cut vertices do not form a clique in both children")
        adj = {v: set(nb) for v, nb in a.items()}
        for v, nb in b.items():
            adj.setdefault(v, set()).update(nb)
    elif isinstance(node, JoinNode):
        j = _join_of(node, memo)
        adj = j.adj
    else:
        raise StructureError(f"unknown node type {type(node).__name__}")
    memo[key] = adj
    return adj


def _join_of(node: JoinNode, memo) -> CanonicalJoin:
    g1 = node_graph(node.child, memo)
    return CanonicalJoin.attach(g1, node.x1, node.y1, node.strip, node.x2, node.y2)


@dataclass
class DecompositionTree:
    root: Node

    def graph(self) -> Adj:
        return node_graph(self.root)

    def validate(self) -> None:
        self.graph()

    def nodes(self) -> list[Node]:
        """Post-order: children before parents, root last."""
        out: list[Node] = []

        def walk(n):
            if isinstance(n, CutNode):
                walk(n.left)
                walk(n.right)
            elif isinstance(n, JoinNode):
                walk(n.child)
            out.append(n)

        walk(self.root)
        return out


# ----------------------------------------------------------------- colouring

def _colour_node(node: Node, memo: dict[int, Adj], stats: Counter) -> dict[int, int]:
    if isinstance(node, LineLeaf):
        stats["line-leaf"] += 1
        cols = vertex_colour_line_graph(node.graph)
        return {node.ids[e]: c for e, c in enumerate(cols)}
    if isinstance(node, CircLeaf):
        stats["circ-leaf"] += 1
        return colour_circular_interval_exact(node.graph)
    if isinstance(node, CutNode):
        stats["cut"] += 1
        c1 = _colour_node(node.left, memo, stats)
        c2 = _colour_node(node.right, memo, stats)
        return paste_on_clique_cutset(c1, c2, node.clique, node_graph(node, memo))
    stats["join"] += 1
    c1 = _colour_node(node.child, memo, stats)
    j = _join_of(node, memo)
    l = max(join_bound_of(j), max(c1.values(), default=0))
    return extend_over_join(j, c1, l, stats)


def colour_decomposition(tree: DecompositionTree, stats: Counter | None = None) -> dict[int, int]:
    """Colour the tree's graph bottom-up with at most its local vertex bound many colours."""
    stats = Counter() if stats is None else stats
    memo: dict[int, Adj] = {}
    adj = node_graph(tree.root, memo)
    colour = _colour_node(tree.root, memo, stats)
    problem = proper_problem(adj, colour)
    if problem:
        raise InvariantViolation(f"decomposition colouring is improper: {problem}")
    used = len(set(colour.values()))
    bound = local_bound(adj)
    if used > bound:
        raise InvariantViolation(f"decomposition colouring used {used} colours, local bound {bound}")
    return colour


# ------------------------------------------------------ from a composition

def tree_from_composition(sc: StripComposition) -> DecompositionTree:
    """Express a strip composition as a decomposition tree.

    Non-trivial strips are added one at a time in arc order.  A strip whose
    both ends meet the rest becomes a canonical join; one hanging off a single
    hub clique becomes a clique cutset with a circular interval leaf.  The
    single-vertex strips left at the bottom form the line graph of the pattern
    restricted to their arcs.
    """
    for i, (a, b) in enumerate(sc.arcs):
        if a == b:
            raise StructureError(f"pattern arc {i} is a loop; loops are not decomposed")
    for i, s in enumerate(sc.strips):
        if not s.is_trivial() and set(s.X) & set(s.Y):
            raise StructureError(f"strip {i} has overlapping end-cliques and is not canonical")
    trivial = [i for i, s in enumerate(sc.strips) if s.is_trivial()]
    heavy = [i for i, s in enumerate(sc.strips) if not s.is_trivial()]

    node: Node | None = None
    if trivial:
        mg = Multigraph(sc.h, [sc.arcs[i] for i in trivial])
        node = LineLeaf(mg, [sc.strips[i].vertices[0] for i in trivial])
    used = list(trivial)
    for i in heavy:
        s = sc.strips[i]
        tail, head = sc.arcs[i]
        if node is None:
            node = CircLeaf(CircularIntervalGraph.from_linear(s.graph))
            used.append(i)
            continue
        hubs = sc.hub_cliques(used)
        x1, y1 = sorted(hubs[tail]), sorted(hubs[head])
        if x1 and y1:
            node = JoinNode(node, x1, y1, s.graph, s.x, s.y)
        else:
            # the strip hangs off at most one clique of the rest
            attach = x1 or y1
            adj = sc.adjacency(used + [i])
            seq = attach + s.vertices if x1 else s.vertices + attach
            piece = LinearIntervalGraph.from_order(seq, induced(adj, seq))
            node = CutNode(node, CircLeaf(CircularIntervalGraph.from_linear(piece)), attach)
        used.append(i)
    if node is None:
        raise StructureError("composition has no strips")
    return DecompositionTree(node)


# --------------------------------------------------------------- text format

def _fmt_q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _fmt_ids(vs) -> str:
    return ",".join(str(v) for v in vs)


def format_qltree(tree: DecompositionTree) -> str:
    out = ["p qltree"]
    index: dict[int, int] = {}
    for n, node in enumerate(tree.nodes()):
        index[id(node)] = n
        if isinstance(node, LineLeaf):
            out.append(f"leaf line - ids:{_fmt_ids(node.ids)}")
            out.append(f"p mgraph {node.graph.n} {node.graph.m}")
            out.extend(f"e {u} {v}" for u, v in node.graph.edges)
        elif isinstance(node, CircLeaf):
            g = node.graph
            out.append(f"leaf circ {len(g)}")
            out.extend(f"pt {v} {_fmt_q(p)}" for v, p in zip(g.ids, g.points))
            out.extend(f"arc {_fmt_q(a)} {_fmt_q(b)}" for a, b in g.arcs)
        elif isinstance(node, CutNode):
            parts = ["node cut", str(index[id(node.left)]), str(index[id(node.right)])]
            out.append(" ".join(parts + [str(v) for v in node.clique]))
        else:
            s = node.strip
            pts = ",".join(f"{v}@{_fmt_q(p)}" for v, p in zip(s.ids, s.points))
            ivs = ",".join(f"{_fmt_q(a)}~{_fmt_q(b)}" for a, b in s.intervals)
            out.append(
                f"node join {index[id(node.child)]} X1:{_fmt_ids(node.x1)} Y1:{_fmt_ids(node.y1)} "
                f"V2:{pts}|{ivs} X2:{_fmt_ids(s.ids[: node.x2])} Y2:{_fmt_ids(s.ids[len(s) - node.y2:])}"
            )
    return "\n".join(out) + "\n"


def _q(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational number, got {token!r}", lineno) from None


def _id_list(text: str, lineno: int) -> list[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise ParseError(f"expected comma-separated ids, got {text!r}", lineno) from None


def _tagged(token: str, tag: str, lineno: int) -> str:
    if not token.startswith(tag + ":"):
        raise ParseError(f"expected {tag}:..., got {token!r}", lineno)
    return token[len(tag) + 1:]


def read_qltree(text: str, base_dir: str | None = None) -> DecompositionTree:
    """Parse the qltree format; the last record is the root."""
    lines = list(enumerate(text.splitlines(), 1))
    pos = 0

    def next_line():
        nonlocal pos
        while pos < len(lines):
            lineno, raw = lines[pos]
            pos += 1
            parts = raw.split()
            if parts and parts[0] != "c":
                return lineno, parts
        return None, None

    def peek_tag():
        q = pos
        while q < len(lines):
            parts = lines[q][1].split()
            if parts and parts[0] != "c":
                return parts[0]
            q += 1
        return None

    lineno, parts = next_line()
    if parts != ["p", "qltree"]:
        raise ParseError("expected 'p qltree' header", lineno)

    records: list[Node] = []
    used: set[int] = set()

    def child(token: str, lineno: int) -> Node:
        try:
            i = int(token)
        except ValueError:
            raise ParseError(f"expected a record number, got {token!r}", lineno) from None
        if not 0 <= i < len(records):
            raise ParseError(f"record {i} is not defined before this line", lineno)
        if i in used:
            raise ParseError(f"record {i} is used twice", lineno)
        used.add(i)
        return records[i]

    while True:
        lineno, parts = next_line()
        if parts is None:
            break
        try:
            if parts[:2] == ["leaf", "line"]:
                node = _parse_line_leaf(parts, lineno, next_line, base_dir)
            elif parts[:2] == ["leaf", "circ"]:
                if len(parts) != 3:
                    raise ParseError("expected 'leaf circ <n>'", lineno)
                n = int(parts[2]) if parts[2].isdigit() else None
                if n is None:
                    raise ParseError("circle size must be a non-negative integer", lineno)
                ids, pts, arcs = [], [], []
                for _ in range(n):
                    ln, ps = next_line()
                    if ps is None or ps[0] != "pt" or len(ps) != 3:
                        raise ParseError("expected 'pt <vertex> <angle>'", ln or lineno)
                    ids.append(_id_list(ps[1], ln)[0])
                    pts.append(_q(ps[2], ln))
                while peek_tag() == "arc":
                    ln, ps = next_line()
                    if len(ps) != 3:
                        raise ParseError("expected 'arc <from> <to>'", ln)
                    arcs.append((_q(ps[1], ln), _q(ps[2], ln)))
                node = CircLeaf(CircularIntervalGraph(pts, arcs, ids))
            elif parts[:2] == ["node", "cut"]:
                if len(parts) < 4:
                    raise ParseError("expected 'node cut <child> <child> <ids...>'", lineno)
                left, right = child(parts[2], lineno), child(parts[3], lineno)
                node = CutNode(left, right, _id_list(",".join(parts[4:]), lineno))
            elif parts[:2] == ["node", "join"]:
                node = _parse_join(parts, lineno, child)
            else:
                raise ParseError(f"unknown record {' '.join(parts[:2])!r}", lineno)
            node_graph(node)
        except StructureError as exc:
            raise ParseError(str(exc), lineno) from None
        records.append(node)
    if not records:
        raise ParseError("no records")
    unused = set(range(len(records) - 1)) - used
    if unused:
        raise ParseError(f"record {min(unused)} is never used")
    return DecompositionTree(records[-1])


def _parse_line_leaf(parts, lineno, next_line, base_dir) -> LineLeaf:
    if len(parts) not in (3, 4):
        raise ParseError("expected 'leaf line <path|-> [ids:...]'", lineno)
    source = parts[2]
    if source == "-":
        ln, header = next_line()
        if header is None or header[:2] != ["p", "mgraph"] or len(header) != 4:
            raise ParseError("expected an inline 'p mgraph <n> <m>' header", ln or lineno)
        try:
            m = int(header[3])
        except ValueError:
            raise ParseError("edge count must be an integer", ln) from None
        body = [(ln, " ".join(header))]
        for _ in range(m):
            ln2, ps = next_line()
            if ps is None:
                raise ParseError("inline multigraph ends early", lineno)
            if ps[0] != "e":
                raise ParseError(f"expected an inline edge 'e <u> <v>', got {ps[0]!r}", ln2)
            body.append((ln2, " ".join(ps)))
        n, edges = _parse_mgraph(body)
        graph = Multigraph(n, edges)
        path = None
    else:
        path = source if base_dir is None else os.path.join(base_dir, source)
        try:
            graph = load_multigraph(path)
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}", lineno) from None
    ids = _id_list(_tagged(parts[3], "ids", lineno), lineno) if len(parts) == 4 else list(range(graph.m))
    return LineLeaf(graph, ids, source if source != "-" else None)


def _parse_join(parts, lineno, child) -> JoinNode:
    if len(parts) != 8:
        raise ParseError("expected 'node join <child> X1:.. Y1:.. V2:.. X2:.. Y2:..'", lineno)
    node_child = child(parts[2], lineno)
    x1 = _id_list(_tagged(parts[3], "X1", lineno), lineno)
    y1 = _id_list(_tagged(parts[4], "Y1", lineno), lineno)
    block = _tagged(parts[5], "V2", lineno)
    if "|" not in block:
        raise ParseError("V2 block needs '<vertex>@<point>,...|<lo>~<hi>,...'", lineno)
    left, right = block.split("|", 1)
    ids, pts = [], []
    for item in filter(None, left.split(",")):
        if "@" not in item:
            raise ParseError(f"expected <vertex>@<point>, got {item!r}", lineno)
        v, p = item.split("@", 1)
        ids.append(_id_list(v, lineno)[0])
        pts.append(_q(p, lineno))
    ivs = []
    for item in filter(None, right.split(",")):
        if "~" not in item:
            raise ParseError(f"expected <lo>~<hi>, got {item!r}", lineno)
        a, b = item.split("~", 1)
        ivs.append((_q(a, lineno), _q(b, lineno)))
    strip = LinearIntervalGraph(pts, ivs, ids)
    x2 = _id_list(_tagged(parts[6], "X2", lineno), lineno)
    y2 = _id_list(_tagged(parts[7], "Y2", lineno), lineno)
    if x2 != strip.ids[: len(x2)]:
        raise ParseError("X2 must list the leftmost strip vertices in order", lineno)
    if y2 != strip.ids[len(strip) - len(y2):]:
        raise ParseError("Y2 must list the rightmost strip vertices in order", lineno)
    return JoinNode(node_child, x1, y1, strip, len(x2), len(y2))


def load_qltree(path: str) -> DecompositionTree:
    with open(path) as fh:
        return read_qltree(fh.read(), os.path.dirname(os.path.abspath(path)))
