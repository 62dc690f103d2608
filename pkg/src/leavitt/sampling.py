"""Seeded random graphs and elements for property checks."""
from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Element, Monomial
from .graph import Graph, enumerate_paths


def random_graph(rng: random.Random, max_vertices: int = 8, max_edges: int = 12,
                 max_bundles: int = 2) -> Graph:
    n = rng.randint(1, max_vertices)
    vs = [f"u{i}" for i in range(n)]
    edges = [(f"e{i}", rng.choice(vs), rng.choice(vs)) for i in range(rng.randint(0, max_edges))]
    bundles = [(f"b{i}", rng.choice(vs), rng.choice(vs)) for i in range(rng.randint(0, max_bundles))]
    return Graph(vs, edges, bundles)


def _paths(g: Graph, max_len: int, bidx: int) -> list:
    key = ("sample_paths", max_len, bidx)
    if key not in g.cache:
        g.cache[key] = enumerate_paths(g, max_len=max_len, max_bundle_index=bidx)
    return g.cache[key]


def random_monomial(g: Graph, rng: random.Random, max_len: int = 3,
                    max_bundle_index: int = 3) -> Monomial:
    """A (not necessarily normal) monomial with ``l(p) + l(q) <= max_len``."""
    paths = _paths(g, max_len, max_bundle_index)
    p = rng.choice(paths)
    qs = [q for q in paths if q.target == p.target and len(q) + len(p) <= max_len]
    return Monomial(p, rng.choice(qs))


def random_element(g: Graph, rng: random.Random, max_len: int = 3, max_terms: int = 3,
                   coeffs=range(-3, 4), max_bundle_index: int = 3) -> Element:
    """Sum of up to ``max_terms`` random monomials with coefficients drawn from ``coeffs``."""
    x = Element(g)
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(g, rng, max_len, max_bundle_index)
        x = x + Element.from_monomial(g, m, Fraction(rng.choice(list(coeffs))))
    return x


def random_nonzero_element(g: Graph, rng: random.Random, **kw) -> Element:
    while True:
        x = random_element(g, rng, **kw)
        if x:
            return x
