"""Directed multigraphs with sinks and infinite emitters.

A :class:`Graph` has a finite vertex set, finitely many named edges and
finitely many named *omega-bundles*.  A bundle ``b : v -> w`` stands for the
countably infinite family of parallel edges ``b[1], b[2], ...``, which is how
infinite emitters are modelled.  Everything here is a pure function of an
immutable graph.
"""
from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Union


class GraphError(ValueError):
    """Malformed graph or reference to something the graph does not declare."""


@functools.total_ordering
class _Omega:
    """The first infinite ordinal, used as a path count or matrix size."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"

    def __str__(self):
        return "omega"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("omega")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()
ExtendedNat = Union[int, _Omega]


class EdgeRef(NamedTuple):
    """A concrete edge (``index == 0``) or the member ``name[index]`` of a bundle."""

    name: str
    index: int = 0

    @property
    def in_bundle(self) -> bool:
        return self.index > 0

    def __str__(self):
        return f"{self.name}[{self.index}]" if self.index else self.name


@dataclass(frozen=True)
class Edge:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Bundle:
    name: str
    source: str
    target: str


@dataclass(frozen=True, slots=True)
class Path:
    """``steps`` read left to right; an empty ``steps`` is the vertex ``source``."""

    source: str
    steps: tuple
    target: str

    def __len__(self):
        return len(self.steps)

    @property
    def is_vertex(self) -> bool:
        return not self.steps

    def sort_key(self):
        return (len(self.steps), self.steps, self.source)

    def __str__(self):
        if not self.steps:
            return self.source
        return " ".join(str(s) for s in self.steps)


class Graph:
    """Immutable multigraph.  Two graphs are equal only if they are the same object.

    >>> g = Graph(["v", "w"], edges=[("c", "v", "v"), ("e", "v", "w")])
    >>> g.classify("v"), g.classify("w")
    ('regular', 'sink')
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable = (), bundles: Iterable = ()):
        vs = tuple(vertices)
        es = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        bs = tuple(b if isinstance(b, Bundle) else Bundle(*b) for b in bundles)
        if len(set(vs)) != len(vs):
            raise GraphError("duplicate vertex id")
        vset = set(vs)
        names = set()
        for item in es + bs:
            if item.name in names:
                raise GraphError(f"duplicate edge id {item.name!r}")
            if item.name in vset:
                raise GraphError(f"edge id {item.name!r} is also a vertex id")
            names.add(item.name)
            for end in (item.source, item.target):
                if end not in vset:
                    raise GraphError(f"{item.name!r} uses undeclared vertex {end!r}")
        self.vertices = vs
        self.edges = es
        self.bundles = bs
        self._edge = {e.name: e for e in es}
        self._bundle = {b.name: b for b in bs}
        out_e = {v: [] for v in vs}
        out_b = {v: [] for v in vs}
        succ = {v: [] for v in vs}
        for e in es:
            out_e[e.source].append(e)
        for b in bs:
            out_b[b.source].append(b)
        for v in vs:
            seen = []
            for item in out_e[v] + out_b[v]:
                if item.target not in seen:
                    seen.append(item.target)
            succ[v] = tuple(seen)
        self._out_edges = {v: tuple(x) for v, x in out_e.items()}
        self._out_bundles = {v: tuple(x) for v, x in out_b.items()}
        self._succ = succ
        self._order = {v: i for i, v in enumerate(vs)}
        self.cache = {}

    def __repr__(self):
        return f"Graph(vertices={len(self.vertices)}, edges={len(self.edges)}, bundles={len(self.bundles)})"

    # -- lookups ---------------------------------------------------------
    def check_vertex(self, v: str) -> str:
        if v not in self._order:
            raise GraphError(f"unknown vertex {v!r}")
        return v

    def has_vertex(self, v: str) -> bool:
        return v in self._order

    def has_edge(self, name: str) -> bool:
        return name in self._edge

    def has_bundle(self, name: str) -> bool:
        return name in self._bundle

    def ref(self, name: str, index: int = 0) -> EdgeRef:
        """Validated edge reference; ``index`` must be given exactly for bundles."""
        if name in self._edge:
            if index:
                raise GraphError(f"{name!r} is an edge, not a bundle")
        elif name in self._bundle:
            if index < 1:
                raise GraphError(f"bundle member {name!r} needs an index >= 1")
        else:
            raise GraphError(f"unknown edge id {name!r}")
        return EdgeRef(name, index)

    def _item(self, ref: EdgeRef):
        return self._bundle[ref.name] if ref.index else self._edge[ref.name]

    def source(self, ref: EdgeRef) -> str:
        return self._item(ref).source

    def target(self, ref: EdgeRef) -> str:
        return self._item(ref).target

    def out_edges(self, v: str) -> tuple:
        """Concrete edges leaving ``v``, in declaration order."""
        return self._out_edges[v]

    def out_bundles(self, v: str) -> tuple:
        return self._out_bundles[v]

    def successors(self, v: str) -> tuple:
        return self._succ[v]

    def out_degree(self, v: str) -> ExtendedNat:
        if self._out_bundles[v]:
            return OMEGA
        return len(self._out_edges[v])

    def out_refs(self, v: str, max_bundle_index: int = 1) -> list:
        """Edge refs leaving ``v`` with bundle members truncated at ``max_bundle_index``."""
        refs = [EdgeRef(e.name) for e in self._out_edges[v]]
        for b in self._out_bundles[v]:
            refs.extend(EdgeRef(b.name, k) for k in range(1, max_bundle_index + 1))
        return refs

    def classify(self, v: str) -> str:
        if self._out_bundles[v]:
            return "infinite_emitter"
        if not self._out_edges[v]:
            return "sink"
        return "regular"

    def is_regular(self, v: str) -> bool:
        return not self._out_bundles[v] and bool(self._out_edges[v])

    def special_edge(self, v: str) -> Optional[EdgeRef]:
        """Earliest declared edge out of a regular vertex; ``None`` for singular ones."""
        if self._out_bundles[v] or not self._out_edges[v]:
            return None
        return EdgeRef(self._out_edges[v][0].name)

    def vertex_order(self, v: str) -> int:
        return self._order[v]

    # -- paths -----------------------------------------------------------
    def vertex_path(self, v: str) -> Path:
        return Path(self.check_vertex(v), (), v)

    def path(self, source: str, steps: Iterable[EdgeRef] = ()) -> Path:
        """Build a path, checking that consecutive steps compose."""
        self.check_vertex(source)
        steps = tuple(steps)
        at = source
        for s in steps:
            s = self.ref(*s) if not isinstance(s, EdgeRef) else self.ref(s.name, s.index)
            if self.source(s) != at:
                raise GraphError(f"step {s} does not start at {at!r}")
            at = self.target(s)
        return Path(source, tuple(EdgeRef(*s) for s in steps), at)

    def path_of(self, *tokens) -> Path:
        """``g.path_of("e1", "e2")`` or ``g.path_of(("b", 2))``; single vertex names allowed."""
        if len(tokens) == 1 and isinstance(tokens[0], str) and tokens[0] in self._order:
            return self.vertex_path(tokens[0])
        refs = [self.ref(*t) if isinstance(t, tuple) else self.ref(t) for t in tokens]
        if not refs:
            raise GraphError("empty path needs a vertex")
        return self.path(self.source(refs[0]), refs)

    def extend(self, p: Path, ref: EdgeRef) -> Path:
        return Path(p.source, p.steps + (ref,), self.target(ref))


# -- reachability ---------------------------------------------------------

def tree(g: Graph, v: str) -> frozenset:
    """All vertices reachable from ``v`` (always contains ``v``)."""
    g.check_vertex(v)
    key = ("tree", v)
    if key not in g.cache:
        seen = {v}
        todo = deque([v])
        while todo:
            x = todo.popleft()
            for y in g.successors(x):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        g.cache[key] = frozenset(seen)
    return g.cache[key]


def ancestors(g: Graph, w: str) -> frozenset:
    """All vertices ``u`` with a path from ``u`` to ``w`` (contains ``w``)."""
    g.check_vertex(w)
    return frozenset(u for u in g.vertices if w in tree(g, u))


def on_cycle(g: Graph, v: str) -> bool:
    """True iff some path of positive length starts and ends at ``v``."""
    return any(v in tree(g, y) for y in g.successors(v))


def classify_vertices(g: Graph) -> dict:
    return {v: g.classify(v) for v in g.vertices}


def is_bifurcation(g: Graph, v: str) -> bool:
    return g.out_degree(v) >= 2


def is_line_point(g: Graph, v: str) -> bool:
    """No vertex of the tree of ``v`` is a bifurcation or lies on a cycle."""
    return all(not is_bifurcation(g, w) and not on_cycle(g, w) for w in tree(g, v))


def line_points(g: Graph) -> frozenset:
    return frozenset(v for v in g.vertices if is_line_point(g, v))


def cycles_without_exits(g: Graph) -> list:
    """Exitless cycles as ``(base, path)``, one per rotation class.

    A cycle has no exit exactly when each of its vertices emits a single
    concrete edge, so each one is found by following unique out-edges.
    The base is the name-wise smallest vertex on the cycle.
    """
    found = []
    for v in sorted(g.vertices):
        steps = []
        at = v
        visited = []
        while g.out_degree(at) == 1 and at not in visited:
            visited.append(at)
            e = g.out_edges(at)[0]
            steps.append(EdgeRef(e.name))
            at = e.target
            if at == v:
                if min(visited) == v:
                    found.append((v, Path(v, tuple(steps), v)))
                break
    return found


def condition_L(g: Graph) -> tuple:
    """``(holds, witness)`` where ``witness`` is the first exitless cycle or ``None``."""
    bad = cycles_without_exits(g)
    return (not bad, bad[0] if bad else None)


def path_algebra_semiprime(g: Graph) -> bool:
    for u in g.vertices:
        for v in tree(g, u):
            if u not in tree(g, v):
                return False
    return True


def count_paths_into(g: Graph, w: str) -> ExtendedNat:
    """Number of paths ending at ``w``, counting ``w`` itself; OMEGA if infinite."""
    anc = ancestors(g, w)
    for u in anc:
        if on_cycle(g, u):
            return OMEGA
        if g.out_bundles(u) and any(b.target in anc for b in g.out_bundles(u)):
            return OMEGA
    # paths_to_w[u] over the acyclic ancestor subgraph, sinks of it first
    memo = {}

    def paths_to_w(u):
        if u not in memo:
            n = 1 if u == w else 0
            for e in g.out_edges(u):
                if e.target in anc:
                    n += paths_to_w(e.target)
            memo[u] = n
        return memo[u]

    return sum(paths_to_w(u) for u in anc)


def enumerate_paths(
    g: Graph,
    source: Optional[str] = None,
    target: Optional[str] = None,
    max_len: int = 0,
    max_bundle_index: int = 1,
) -> list:
    """Paths of length <= ``max_len``, ordered by length then edge sequence."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    starts = [g.check_vertex(source)] if source is not None else list(g.vertices)
    if target is not None:
        g.check_vertex(target)
    layer = [Path(v, (), v) for v in starts]
    out = []
    for _ in range(max_len + 1):
        out.extend(layer)
        layer = [Path(p.source, p.steps + (r,), g.target(r))
                 for p in layer for r in g.out_refs(p.target, max_bundle_index)]
    if target is not None:
        out = [p for p in out if p.target == target]
    out.sort(key=Path.sort_key)
    return out


def iter_paths_from(g: Graph, v: str, max_len: int, max_bundle_index: int = 1) -> Iterator[Path]:
    yield from enumerate_paths(g, source=v, max_len=max_len, max_bundle_index=max_bundle_index)
