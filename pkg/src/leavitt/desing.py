"""Desingularization: adding infinite tails at sinks and infinite emitters.

The resulting row-finite graph ``F`` is infinite, so it is kept symbolic: a
finite *core* (the input graph minus the edges leaving infinite emitters)
plus one :class:`TailDescriptor` per singular vertex.  Tail vertices are
addressed as :class:`TailVertex` values and only receive string names when a
finite truncation is exported.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .graph import EdgeRef, Graph, line_points

SINK_TAIL = "sink_tail"
EMITTER_TAIL = "emitter_tail"


class TailVertex(NamedTuple):
    """The ``index``-th vertex (``index >= 1``) of the tail added at ``base``."""

    base: str
    index: int

    def __str__(self):
        return f"{self.base}.t{self.index}"


FVertex = Union[str, TailVertex]


@dataclass(frozen=True)
class TailDescriptor:
    """A tail ``v0 -> v1 -> v2 -> ...`` at a singular vertex ``base``.

    For an emitter tail, the edges of ``s^-1(base)`` are listed as the concrete
    edges in declaration order followed by the bundle members taken
    round-robin over the bundles (``b1[1], b2[1], b1[2], ...``).  The ``j``-th
    listed edge ``e_j`` is replaced by ``g_j : v_{j-1} -> r(e_j)``.
    """

    base: str
    kind: str
    prefix: tuple = ()
    bundles: tuple = ()

    def listed_edge(self, j: int) -> EdgeRef:
        """``e_j``, the ``j``-th edge (from 1) of ``s^-1(base)``."""
        if self.kind != EMITTER_TAIL or j < 1:
            raise ValueError("only emitter tails list edges, from j = 1")
        if j <= len(self.prefix):
            return self.prefix[j - 1]
        k = j - len(self.prefix) - 1
        return EdgeRef(self.bundles[k % len(self.bundles)], k // len(self.bundles) + 1)

    def vertex(self, j: int) -> FVertex:
        return self.base if j == 0 else TailVertex(self.base, j)

    @property
    def period(self) -> int:
        return len(self.bundles)


@dataclass(frozen=True)
class DesingGraph:
    original: Graph
    core: Graph
    tails: tuple

    def tail_at(self, base: str):
        for t in self.tails:
            if t.base == base:
                return t
        return None

    def out_edges(self, x: FVertex) -> list:
        """Edges leaving ``x`` in ``F`` as ``(name, target)`` pairs."""
        if isinstance(x, TailVertex):
            tail, j = self.tail_at(x.base), x.index
        else:
            tail, j = self.tail_at(x), 0
            if tail is None:
                return [(e.name, e.target) for e in self.core.out_edges(x)]
        base = tail.base
        if tail.kind == SINK_TAIL:
            return [(f"{base}.f{j + 1}", TailVertex(base, j + 1))]
        e = tail.listed_edge(j + 1)
        return [(f"{base}.f{j + 1}", TailVertex(base, j + 1)),
                (f"{base}.g{j + 1}", self.original.target(e))]

    def out_degree(self, x: FVertex) -> int:
        return len(self.out_edges(x))


def desingularize(g: Graph) -> DesingGraph:
    tails = []
    drop = set()
    for v in g.vertices:
        kind = g.classify(v)
        if kind == "sink":
            tails.append(TailDescriptor(v, SINK_TAIL))
        elif kind == "infinite_emitter":
            prefix = tuple(EdgeRef(e.name) for e in g.out_edges(v))
            bundles = tuple(b.name for b in g.out_bundles(v))
            tails.append(TailDescriptor(v, EMITTER_TAIL, prefix, bundles))
            drop.add(v)
    core = Graph(g.vertices,
                 [e for e in g.edges if e.source not in drop],
                 [b for b in g.bundles if b.source not in drop])
    return DesingGraph(g, core, tuple(tails))


class SymbolicVertexSet(NamedTuple):
    """Core vertices plus whole tails, given by the base vertex of each tail."""

    core: frozenset
    tails: tuple

    def __contains__(self, x):
        if isinstance(x, TailVertex):
            return x.base in self.tails
        return x in self.core

    def __bool__(self):
        return bool(self.core) or bool(self.tails)


def is_line_point_F(d: DesingGraph, x: FVertex) -> bool:
    """Line-point test in the infinite graph ``F``.

    A line point's tree has no bifurcation, so it is a single walk; the walk
    fails at a vertex of out-degree 2 (every emitter-tail vertex) or on a
    repeated vertex, and succeeds once it enters a sink tail, past which
    ``F`` is an infinite line.
    """
    seen = set()
    at = x
    while True:
        if isinstance(at, TailVertex) and d.tail_at(at.base).kind == SINK_TAIL:
            return True
        if at in seen:
            return False
        seen.add(at)
        outs = d.out_edges(at)
        if len(outs) != 1:
            # F has no sinks, so this is a bifurcation
            return False
        at = outs[0][1]


def line_points_desing(d: DesingGraph) -> SymbolicVertexSet:
    core = frozenset(v for v in d.core.vertices if is_line_point_F(d, v))
    tails = tuple(t.base for t in d.tails if t.kind == SINK_TAIL)
    return SymbolicVertexSet(core, tails)


class Truncation(NamedTuple):
    graph: Graph
    cut_vertices: tuple
    warning: str = ("truncated desingularization: cut vertices are artificial sinks, "
                    "so line points and the algebra differ from the true desingularization")


def truncate(d: DesingGraph, depth: int) -> Truncation:
    """Core plus the first ``depth`` vertices of every tail."""
    if depth < 1:
        raise ValueError("depth must be positive")
    vertices = list(d.core.vertices)
    edges = list(d.core.edges)
    cut = []
    for t in d.tails:
        for j in range(1, depth + 1):
            vertices.append(str(TailVertex(t.base, j)))
            for name, target in d.out_edges(t.vertex(j - 1)):
                edges.append((name, str(t.vertex(j - 1)), str(target)))
        cut.append(str(TailVertex(t.base, depth)))
    return Truncation(Graph(vertices, edges, d.core.bundles), tuple(cut))


class DesingCheck(NamedTuple):
    holds: bool
    line_points_E: frozenset
    line_points_F_core: frozenset
    nonempty_E: bool
    nonempty_F: bool


def verify_desing_lemma(g: Graph) -> DesingCheck:
    """Compare line points of ``g`` with those of its desingularization."""
    lp_e = line_points(g)
    lp_f = line_points_desing(desingularize(g))
    nonempty_e, nonempty_f = bool(lp_e), bool(lp_f)
    holds = lp_e == lp_f.core and nonempty_e == nonempty_f
    return DesingCheck(holds, lp_e, lp_f.core, nonempty_e, nonempty_f)
