"""Exact arithmetic in the Leavitt path algebra of a graph over the rationals.

Elements are finite sums of monomials ``p q*`` (``p``, ``q`` paths with the
same range) kept in a canonical normal form.  Every regular vertex ``w`` has a
*special edge*, the first edge it emits in declaration order.  A monomial is
normal unless ``p`` and ``q`` both end in the same special edge ``g``, and
such a monomial is rewritten with the relation at ``w = s(g)``::

    p' g g* q'*  ->  p' q'*  -  sum over e in s^-1(w), e != g, of  p' e e* q'*

Infinite emitters carry no such relation, so nothing is ever rewritten there.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Optional

from .graph import (EdgeRef, Graph, GraphError, Path, cycles_without_exits, enumerate_paths,
                    is_line_point, tree)


class GraphMismatch(ValueError):
    pass


class NotRegularError(ValueError):
    """Raised where the relation at a vertex is required but the vertex is singular."""


@dataclass(frozen=True, slots=True)
class Monomial:
    """The element ``p q*``; requires ``p.target == q.target``."""

    p: Path
    q: Path

    @property
    def degree(self) -> int:
        return len(self.p.steps) - len(self.q.steps)

    @property
    def length(self) -> int:
        return len(self.p.steps) + len(self.q.steps)

    @property
    def is_vertex(self) -> bool:
        return not self.p.steps and not self.q.steps

    def sort_key(self):
        p, q = self.p, self.q
        return (len(p.steps) - len(q.steps), len(p.steps) + len(q.steps),
                p.steps, p.source, q.steps, q.source)

    def star(self) -> "Monomial":
        return Monomial(self.q, self.p)

    def __str__(self):
        return format_monomial(self)


def monomial(p: Path, q: Optional[Path] = None) -> Monomial:
    if q is None:
        q = Path(p.target, (), p.target)
    if p.target != q.target:
        raise GraphError(f"ranges differ: {p} ends at {p.target}, {q} at {q.target}")
    return Monomial(p, q)


def is_normal(g: Graph, m: Monomial) -> bool:
    ps, qs = m.p.steps, m.q.steps
    if not ps or not qs or ps[-1] != qs[-1]:
        return True
    last = ps[-1]
    return last != g.special_edge(g.source(last))


def _normalize(g: Graph, m: Monomial) -> dict:
    """Normal form of one monomial as ``{Monomial: int}`` (cached per graph)."""
    cache = g.cache.setdefault("nf", {})
    hit = cache.get(m)
    if hit is not None:
        return hit
    if is_normal(g, m):
        out = {m: 1}
    else:
        p, q = m.p, m.q
        gamma = p.steps[-1]
        w = g.source(gamma)
        p1 = Path(p.source, p.steps[:-1], w)
        q1 = Path(q.source, q.steps[:-1], w)
        out = dict(_normalize(g, Monomial(p1, q1)))
        for e in g.out_edges(w)[1:]:
            ref = EdgeRef(e.name)
            t = Monomial(Path(p1.source, p1.steps + (ref,), e.target),
                         Path(q1.source, q1.steps + (ref,), e.target))
            out[t] = out.get(t, 0) - 1
        out = {k: c for k, c in out.items() if c}
    cache[m] = out
    return out


def _multiply_monomials(g: Graph, a: Monomial, b: Monomial) -> dict:
    """``(p q*)(r s*)`` in normal form, using only ``e* f = delta(e, f) r(e)``."""
    cache = g.cache.setdefault("mul", {})
    key = (a, b)
    hit = cache.get(key)
    if hit is not None:
        return hit
    p, q = a.p, a.q
    r, s = b.p, b.q
    out = {}
    if q.source == r.source:
        nq, nr = len(q.steps), len(r.steps)
        if nr >= nq and r.steps[:nq] == q.steps:
            rest = r.steps[nq:]
            out = _normalize(g, Monomial(Path(p.source, p.steps + rest, r.target), s))
        elif nq > nr and q.steps[:nr] == r.steps:
            rest = q.steps[nr:]
            out = _normalize(g, Monomial(p, Path(s.source, s.steps + rest, q.target)))
    cache[key] = out
    return out


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational, str)):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


class Element:
    """A finite rational combination of normal monomials.

    Build elements with :meth:`vertex`, :meth:`edge`, :meth:`ghost`,
    :meth:`from_monomial` or the expression parser, then combine them with
    ``+``, ``-``, ``*`` and :meth:`star`.
    """

    __slots__ = ("graph", "terms")

    def __init__(self, graph: Graph, terms: Optional[dict] = None):
        self.graph = graph
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, g: Graph) -> "Element":
        return cls(g)

    @classmethod
    def vertex(cls, g: Graph, v: str) -> "Element":
        p = g.vertex_path(v)
        return cls(g, {Monomial(p, p): 1})

    @classmethod
    def unit(cls, g: Graph) -> "Element":
        """Sum of all vertices, the identity of the algebra of a finite vertex set."""
        return cls(g, {Monomial(g.vertex_path(v), g.vertex_path(v)): 1 for v in g.vertices})

    @classmethod
    def from_monomial(cls, g: Graph, m: Monomial, coeff=1) -> "Element":
        c = _coerce_scalar(coeff)
        return cls(g, {k: c * n for k, n in _normalize(g, m).items()})

    @classmethod
    def path(cls, g: Graph, p: Path) -> "Element":
        return cls.from_monomial(g, monomial(p))

    @classmethod
    def edge(cls, g: Graph, ref: EdgeRef) -> "Element":
        return cls.path(g, g.path(g.source(ref), [ref]))

    @classmethod
    def ghost(cls, g: Graph, ref: EdgeRef) -> "Element":
        return cls.edge(g, ref).star()

    # -- arithmetic -----------------------------------------------------
    def _same(self, other: "Element"):
        if other.graph is not self.graph:
            raise GraphMismatch("elements live over different graphs")

    def _lift(self, other) -> "Element":
        if isinstance(other, Element):
            self._same(other)
            return other
        c = _coerce_scalar(other)
        return Element.unit(self.graph).scale(c)

    def scale(self, c) -> "Element":
        c = _coerce_scalar(c)
        if not c:
            return Element(self.graph)
        return Element(self.graph, {m: c * k for m, k in self.terms.items()})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Element(self.graph, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        self._same(other)
        g = self.graph
        acc = defaultdict(Fraction)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                prod = _multiply_monomials(g, a, b)
                if prod:
                    c = ca * cb
                    for m, k in prod.items():
                        acc[m] += c * k
        return Element(g, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def star(self) -> "Element":
        # the normality condition is symmetric in p and q
        return Element(self.graph, {m.star(): c for m, c in self.terms.items()})

    # -- inspection -----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Element):
            return other.graph is self.graph and other.terms == self.terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items(self) -> list:
        """``(monomial, coefficient)`` pairs in canonical order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def monomials(self) -> list:
        return [m for m, _ in self.items()]

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def max_length(self) -> int:
        return max((m.length for m in self.terms), default=0)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({format_element(self)!r})"


# -- printing ---------------------------------------------------------------

def format_monomial(m: Monomial) -> str:
    if m.is_vertex:
        return m.p.source
    parts = [str(s) for s in m.p.steps]
    parts += [f"{s}*" for s in reversed(m.q.steps)]
    return " ".join(parts)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(x: Element) -> str:
    if not x.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(x.items()):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        body = format_monomial(m) if c == 1 else f"{_format_coeff(c)} {format_monomial(m)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# -- operations on elements ---------------------------------------------------

def multiply(g: Graph, x: Element, y: Element) -> Element:
    if x.graph is not g or y.graph is not g:
        raise GraphMismatch("elements live over different graphs")
    return x * y


def involution(x: Element) -> Element:
    return x.star()


def homogeneous_components(x: Element) -> dict:
    parts = defaultdict(dict)
    for m, c in x.terms.items():
        parts[m.degree][m] = c
    return {d: Element(x.graph, t) for d, t in sorted(parts.items())}


def normal_monomials(g: Graph, v: str, max_len: int, max_bundle_index: int = 2,
                     left: Optional[str] = None) -> list:
    """Normal monomials ``p q*`` with ``s(q) = v`` and both paths of length <= ``max_len``.

    ``left`` additionally fixes ``s(p)``.
    """
    qs = enumerate_paths(g, source=v, max_len=max_len, max_bundle_index=max_bundle_index)
    if left is None:
        ps = enumerate_paths(g, max_len=max_len, max_bundle_index=max_bundle_index)
    else:
        ps = enumerate_paths(g, source=left, max_len=max_len, max_bundle_index=max_bundle_index)
    by_target = defaultdict(list)
    for p in ps:
        by_target[p.target].append(p)
    out = [Monomial(p, q) for q in qs for p in by_target[q.target]]
    out = [m for m in out if is_normal(g, m)]
    out.sort(key=Monomial.sort_key)
    return out


def corner_basis(g: Graph, v: str, max_degree: int, max_bundle_index: int = 2) -> list:
    """Normal monomials spanning the truncated corner ``v L v``.

    The corner is cut off at products ``p q*`` with ``s(p) = s(q) = v`` and
    ``l(p), l(q) <= max_degree // 2``; the normal form never lengthens a
    monomial, so the normal monomials within that bound span the image.
    """
    g.check_vertex(v)
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    ms = normal_monomials(g, v, max_degree // 2, max_bundle_index, left=v)
    return [Element(g, {m: 1}) for m in ms]


def cycle_power(g: Graph, c: Path, i: int) -> Monomial:
    """``c**i`` for a closed path ``c``; negative powers are ghost powers."""
    base = c.source
    if i == 0:
        vp = g.vertex_path(base)
        return Monomial(vp, vp)
    path = Path(base, c.steps * abs(i), base)
    vp = g.vertex_path(base)
    return Monomial(path, vp) if i > 0 else Monomial(vp, path)


def exitless_cycle_at(g: Graph, v: str) -> Optional[Path]:
    """The exitless cycle through ``v``, rotated to start at ``v``, if any."""
    for _, c in cycles_without_exits(g):
        at = c.source
        for k, step in enumerate(c.steps):
            if at == v:
                steps = c.steps[k:] + c.steps[:k]
                return Path(v, steps, v)
            at = g.target(step)
    return None


def classify_corner(g: Graph, v: str, max_degree: int, max_bundle_index: int = 2) -> str:
    basis = {x.monomials()[0] for x in corner_basis(g, v, max_degree, max_bundle_index)}
    vp = g.vertex_path(v)
    if basis == {Monomial(vp, vp)}:
        return "field"
    c = exitless_cycle_at(g, v)
    if c is not None:
        top = (max_degree // 2) // len(c.steps)
        if basis == {cycle_power(g, c, i) for i in range(-top, top + 1)}:
            return "laurent"
    return "other"


def monomial_type(g: Graph, u: str, m) -> int:
    """Which of the four kinds of monomials spanning ``L u`` the monomial ``m`` is.

    1: ``u``; 2: a real path into ``u``; 3: a real path outside the line of
    ``u`` followed by ghosts along it; 4: ghosts along the line of ``u`` only.
    """
    if isinstance(m, Element):
        if len(m.terms) != 1:
            raise ValueError("expected a single monomial")
        m = next(iter(m.terms))
    if not is_line_point(g, u):
        raise ValueError(f"{u!r} is not a line point")
    if m.q.source != u or not is_normal(g, m):
        raise ValueError(f"{m} is not a normal monomial of L{u}")
    line = tree(g, u)
    if m.is_vertex:
        return 1
    if not m.q.steps:
        return 2
    if any(g.source(s) not in line or g.target(s) not in line for s in m.q.steps):
        raise ValueError(f"ghost part of {m} leaves the line of {u}")
    if not m.p.steps:
        return 4
    if g.source(m.p.steps[-1]) in line:
        raise ValueError(f"real part of {m} runs along the line of {u}")
    return 3


class CK2Report(NamedTuple):
    vertex: str
    idempotents: list
    total: Element
    sums_to_vertex: bool
    orthogonal: bool


def ck2_decomposition(g: Graph, u: str) -> CK2Report:
    """Check ``u = sum e e*`` over the edges ``u`` emits, and that the summands are orthogonal."""
    g.check_vertex(u)
    if not g.is_regular(u):
        raise NotRegularError(f"{u!r} is a {g.classify(u).replace('_', ' ')}, not a regular vertex")
    idems = []
    for e in g.out_edges(u):
        x = Element.edge(g, EdgeRef(e.name))
        idems.append(x * x.star())
    total = sum(idems, Element(g))
    orth = all(not (a * b) for i, a in enumerate(idems) for j, b in enumerate(idems) if i != j)
    orth = orth and all(a * a == a for a in idems)
    return CK2Report(u, idems, total, total == Element.vertex(g, u), orth)

