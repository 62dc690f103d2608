"""Hereditary and saturated vertex sets, and the simplicity test."""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .graph import Graph, GraphError, condition_L


def _checked(g: Graph, s: Iterable[str]) -> set:
    s = set(s)
    for v in s:
        if not g.has_vertex(v):
            raise GraphError(f"unknown vertex {v!r}")
    return s


def hereditary_saturated_closure(g: Graph, s: Iterable[str]) -> frozenset:
    """Least superset of ``s`` closed under ranges and under saturation.

    Saturation adds a regular vertex once every edge it emits lands in the
    set.  Infinite emitters are never added by saturation.
    """
    h = _checked(g, s)
    while True:
        todo = list(h)
        while todo:
            v = todo.pop()
            for w in g.successors(v):
                if w not in h:
                    h.add(w)
                    todo.append(w)
        grown = [v for v in g.vertices
                 if v not in h and g.is_regular(v)
                 and all(e.target in h for e in g.out_edges(v))]
        if not grown:
            return frozenset(h)
        h.update(grown)


def is_hereditary_saturated(g: Graph, s: Iterable[str]) -> bool:
    s = frozenset(_checked(g, s))
    return hereditary_saturated_closure(g, s) == s


class SimplicityVerdict(NamedTuple):
    simple: bool
    reason: str
    witness: object = None

    def __bool__(self):
        return self.simple


def is_simple(g: Graph) -> SimplicityVerdict:
    holds, cycle = condition_L(g)
    if not holds:
        base, path = cycle
        return SimplicityVerdict(False, f"Condition (L) fails: cycle {path} at {base} has no exit", cycle)
    everything = frozenset(g.vertices)
    for v in g.vertices:
        h = hereditary_saturated_closure(g, {v})
        if h != everything:
            return SimplicityVerdict(
                False, f"closure of {{{v}}} is a proper hereditary saturated subset", sorted(h))
    return SimplicityVerdict(True, "Condition (L) holds and only trivial hereditary saturated subsets")
