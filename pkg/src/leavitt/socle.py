"""Socle of a Leavitt path algebra from its line points.

The socle is the ideal generated by the line points, equivalently by their
hereditary saturated closure ``H``.  Each line point walks down a
bifurcation-free line to a sink; line points are grouped by that terminal
sink ``w``, and the component they generate is a full matrix algebra
indexed by the paths ending at ``w``.
"""
from __future__ import annotations

from typing import NamedTuple

from .algebra import classify_corner
from .closure import hereditary_saturated_closure
from .graph import (ExtendedNat, Graph, count_paths_into, is_line_point, line_points)


class InvariantViolation(AssertionError):
    """Two independent computations that must agree did not."""


class SocleComponent(NamedTuple):
    terminal_sink: str
    line_class: tuple
    size: ExtendedNat


class SocleReport(NamedTuple):
    line_points: tuple
    closure_H: tuple
    components: tuple
    socle_is_zero: bool
    socle_is_everything: bool


def terminal_sink(g: Graph, u: str) -> str:
    """Follow the unique out-edges from a line point to the sink ending its line."""
    at = u
    for _ in range(len(g.vertices)):
        outs = g.out_edges(at)
        if not outs:
            return at
        at = outs[0].target
    raise InvariantViolation(f"line from {u!r} does not end in a sink")


def _ordered(g: Graph, vs) -> tuple:
    return tuple(sorted(vs, key=g.vertex_order))


def socle_report(g: Graph) -> SocleReport:
    lp = line_points(g)
    h = hereditary_saturated_closure(g, lp)
    classes = {}
    for u in _ordered(g, lp):
        classes.setdefault(terminal_sink(g, u), []).append(u)
    components = tuple(
        SocleComponent(w, tuple(members), count_paths_into(g, w))
        for w, members in sorted(classes.items(), key=lambda kv: g.vertex_order(kv[0])))
    return SocleReport(
        line_points=_ordered(g, lp),
        closure_H=_ordered(g, h),
        components=components,
        socle_is_zero=not lp,
        socle_is_everything=h == frozenset(g.vertices),
    )


class MinimalityVerdict(NamedTuple):
    vertex: str
    minimal: bool
    line_point: bool
    corner: str


def minimal_vertex_ideal(g: Graph, u: str, max_degree: int = 8,
                         max_bundle_index: int = 2) -> MinimalityVerdict:
    """Decide whether ``L u`` is a minimal left ideal, two ways.

    The graph test asks whether ``u`` is a line point; the algebra test asks
    whether the truncated corner ``u L u`` is just ``K u``.  Disagreement
    raises :class:`InvariantViolation`.
    """
    g.check_vertex(u)
    graph_says = is_line_point(g, u)
    corner = classify_corner(g, u, max_degree, max_bundle_index)
    if graph_says != (corner == "field"):
        raise InvariantViolation(
            f"{u!r}: line point = {graph_says} but corner (degree {max_degree}) is {corner}")
    return MinimalityVerdict(u, graph_says, graph_says, corner)
