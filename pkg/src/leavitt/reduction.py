"""Linking a nonzero element to a vertex or to a cycle corner.

Every nonzero ``x`` admits generators ``a_1..a_r`` and ``b_1..b_s`` (vertices,
edges, ghost edges) with ``a_1...a_r x b_1...b_s`` either a nonzero multiple
of a vertex or a nonzero element of ``w L w`` for a vertex ``w`` on a cycle
without exits.  :func:`reduce` finds such multipliers within a token budget
and replays them before returning.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .algebra import Element, Monomial, cycle_power, exitless_cycle_at
from .graph import EdgeRef, Graph, Path, enumerate_paths


class ZeroElement(ValueError):
    pass


class BoundExceeded(RuntimeError):
    def __init__(self, message: str, frontier: int = 0):
        super().__init__(message)
        self.frontier = frontier


class Token(NamedTuple):
    """A generator: ``kind`` is ``vertex``, ``edge`` or ``ghost``."""

    kind: str
    name: object

    def __str__(self):
        if self.kind == "vertex":
            return self.name
        return f"{self.name}*" if self.kind == "ghost" else str(self.name)

    def element(self, g: Graph) -> Element:
        if self.kind == "vertex":
            return Element.vertex(g, self.name)
        x = Element.edge(g, self.name)
        return x.star() if self.kind == "ghost" else x


def _product(g: Graph, tokens) -> Optional[Element]:
    out = None
    for t in tokens:
        e = t.element(g)
        out = e if out is None else out * e
    return out


def replay(g: Graph, left, x: Element, right) -> Element:
    y = x
    lp = _product(g, left)
    rp = _product(g, right)
    if lp is not None:
        y = lp * y
    if rp is not None:
        y = y * rp
    return y


@dataclass(frozen=True)
class ReductionWitness:
    left: tuple
    right: tuple
    result: Element
    kind: str

    @property
    def size(self) -> int:
        return len(self.left) + len(self.right)


def goal_kind(g: Graph, y: Element) -> Optional[str]:
    """``vertex``, ``cycle_corner`` or ``None`` according to where ``y`` lies."""
    if not y:
        return None
    if len(y.terms) == 1 and next(iter(y.terms)).is_vertex:
        return "vertex"
    bases = {(m.p.source, m.q.source) for m in y.terms}
    if len(bases) == 1:
        a, b = bases.pop()
        if a == b and exitless_cycle_at(g, a) is not None:
            return "cycle_corner"
    return None


def _real_tokens(p: Path) -> list:
    if not p.steps:
        return [Token("vertex", p.source)]
    return [Token("edge", s) for s in p.steps]


def _ghost_tokens(p: Path) -> list:
    """Tokens multiplying out to ``p*``."""
    if not p.steps:
        return [Token("vertex", p.source)]
    return [Token("ghost", s) for s in reversed(p.steps)]


def _bundle_reach(x: Element) -> int:
    top = 0
    for m in x.terms:
        for s in m.p.steps + m.q.steps:
            top = max(top, s.index)
    return top + 1


def _ordered_vertices(g: Graph, vs) -> list:
    return sorted(set(vs), key=g.vertex_order)


def _finish(g: Graph, z: Element, w: str, budget: int, bidx: int):
    """Tokens ``(left, right)`` taking ``z = k w + sum k_i u_i`` (real ``u_i`` from ``w``) to a goal."""
    if goal_kind(g, z):
        return [], []
    closed = [m for m in z.terms if m.p.target == w and m.p.steps]
    if not closed or exitless_cycle_at(g, w) is not None:
        return [], [Token("vertex", w)]
    longest = max(len(m.p.steps) for m in closed)
    for lam in enumerate_paths(g, source=w, max_len=min(longest + 1, budget // 2),
                               max_bundle_index=bidx):
        if not lam.steps:
            continue
        lam_x = Element.path(g, lam)
        t = lam_x.star() * z * lam_x
        if goal_kind(g, t) == "vertex":
            return _ghost_tokens(lam), _real_tokens(lam)
    return None


def _pipeline(g: Graph, x: Element, bound: int):
    """Cheapest witness found by ghost stripping, peeling and separating, or ``None``."""
    bidx = _bundle_reach(x)
    best = None

    def consider(left, right):
        nonlocal best
        cost = len(left) + len(right)
        if cost <= bound and (best is None or cost < len(best[0]) + len(best[1])):
            best = (left, right)

    # right multipliers leaving only real paths
    right_options = []
    if all(not m.q.steps for m in x.terms):
        right_options.append(([], x))
    for b in _ordered_vertices(g, (m.q.source for m in x.terms)):
        longest = max(len(m.q.steps) for m in x.terms if m.q.source == b)
        for mu in enumerate_paths(g, source=b, max_len=longest + 2, max_bundle_index=bidx):
            if len(mu.steps) < longest:
                continue
            y = x * Element.path(g, mu)
            if y:
                right_options.append((_real_tokens(mu), y))

    for right, y in right_options:
        if len(right) >= bound:
            continue
        paths = [m.p for m in y.terms]
        sources = {p.source for p in paths}
        for alpha in sorted(paths, key=Path.sort_key):
            if any(o != alpha and o.source == alpha.source and len(o.steps) < len(alpha.steps)
                   and alpha.steps[:len(o.steps)] == o.steps for o in paths):
                continue
            if alpha.steps:
                left = _ghost_tokens(alpha)
            else:
                left = [] if sources == {alpha.source} else [Token("vertex", alpha.source)]
            if len(left) + len(right) > bound:
                continue
            z = Element.path(g, alpha).star() * y if alpha.steps else Element.vertex(g, alpha.source) * y
            done = _finish(g, z, alpha.target, bound - len(left) - len(right), bidx)
            if done is None:
                continue
            l2, r2 = done
            consider(l2 + left, right + r2)
    return best


def _generators(g: Graph, bidx: int) -> list:
    toks = [Token("vertex", v) for v in g.vertices]
    refs = [EdgeRef(e.name) for e in g.edges]
    refs += [EdgeRef(b.name, k) for b in g.bundles for k in range(1, bidx + 1)]
    toks += [Token("edge", r) for r in refs]
    toks += [Token("ghost", r) for r in refs]
    return toks


def _bfs(g: Graph, x: Element, bound: int, max_states: int):
    """Breadth-first search over single-generator multiplications."""
    gens = [(t, t.element(g)) for t in _generators(g, _bundle_reach(x))]
    seen = {x}
    frontier = deque([(x, (), ())])
    for _ in range(bound):
        nxt = deque()
        for y, left, right in frontier:
            for side, (t, te) in itertools.product(("left", "right"), gens):
                z = te * y if side == "left" else y * te
                if not z or z in seen:
                    continue
                seen.add(z)
                nl = (t,) + left if side == "left" else left
                nr = right + (t,) if side == "right" else right
                if goal_kind(g, z):
                    return list(nl), list(nr), len(nxt)
                nxt.append((z, nl, nr))
                if len(seen) > max_states:
                    return None, None, len(nxt)
        frontier = nxt
        if not frontier:
            break
    return None, None, len(frontier)


def reduce(g: Graph, x: Element, bound: int = 8, max_states: int = 20000) -> ReductionWitness:
    """Find generators linking ``x`` to a vertex or to a cycle corner.

    Raises :class:`ZeroElement` for ``x == 0`` and :class:`BoundExceeded`
    when no witness with at most ``bound`` generators turns up.
    """
    if not x:
        raise ZeroElement("cannot reduce the zero element")
    if x.graph is not g:
        raise ValueError("element lives over a different graph")
    if goal_kind(g, x):
        left, right = [], []
    else:
        found = _pipeline(g, x, bound)
        if found is not None:
            left, right = found
        else:
            left, right, frontier = _bfs(g, x, bound, max_states)
            if left is None:
                raise BoundExceeded(
                    f"no witness with at most {bound} generators (frontier {frontier})", frontier)
    result = replay(g, left, x, right)
    kind = goal_kind(g, result)
    if kind is None:
        raise AssertionError(f"witness replay failed for {x}")
    return ReductionWitness(tuple(left), tuple(right), result, kind)


class VertexInIdeal(NamedTuple):
    vertex: str
    witness: ReductionWitness
    component: Optional[Element]
    multiplier: Optional[Element]


def graded_ideal_vertex_check(g: Graph, x: Element, bound: int = 8) -> VertexInIdeal:
    """A vertex in the graded ideal generated by ``x``.

    From a cycle-corner witness ``sum k_i c^i``, one homogeneous component
    ``k_t c^t`` lies in the graded ideal, and ``(1/k_t) c^-t`` times it is the
    base vertex.
    """
    wit = reduce(g, x, bound)
    if wit.kind == "vertex":
        (m,) = wit.result.terms
        return VertexInIdeal(m.p.source, wit, None, None)
    m, k = wit.result.items()[0]
    w = m.p.source
    c = exitless_cycle_at(g, w)
    t = m.degree // len(c.steps)
    component = Element(g, {m: k})
    multiplier = Element(g, {cycle_power(g, c, -t): Fraction(1) / k})
    if multiplier * component != Element.vertex(g, w):
        raise AssertionError("inverse power did not recover the base vertex")
    return VertexInIdeal(w, wit, component, multiplier)


def _monomials_by_length(g: Graph, n: int, bidx: int):
    paths = enumerate_paths(g, max_len=n, max_bundle_index=bidx)
    for total in range(n + 1):
        batch = []
        for p in paths:
            if len(p.steps) > total:
                break
            for q in paths:
                if len(p.steps) + len(q.steps) == total and q.target == p.target:
                    batch.append(Monomial(p, q))
        batch.sort(key=Monomial.sort_key)
        yield from batch


def semiprime_spotcheck(g: Graph, x: Element, bound: int = 10) -> Element:
    """A monomial ``m`` with ``x m x != 0``; adjoints of the terms of ``x`` are tried first."""
    if not x:
        raise ZeroElement("x must be nonzero")
    tried = set()
    candidates = itertools.chain((m.star() for m in x.monomials()),
                                 _monomials_by_length(g, bound, _bundle_reach(x)))
    for m in candidates:
        if m in tried or m.length > bound:
            continue
        tried.add(m)
        me = Element.from_monomial(g, m)
        if me and x * me * x:
            return me
    raise BoundExceeded(f"no monomial of length <= {bound} with x m x != 0", len(tried))
