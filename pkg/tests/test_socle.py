import random

import pytest

from leavitt.algebra import Element
from leavitt.corpus import EINF, EN2M2, GRAPHS, LINE5, LOOP1, ROSE2, TOEPLITZ
from leavitt.desing import desingularize, line_points_desing
from leavitt.graph import OMEGA, Graph, enumerate_paths, line_points
from leavitt.sampling import random_graph
from leavitt.socle import InvariantViolation, minimal_vertex_ideal, socle_report, terminal_sink

from oracles import count_paths_into_brute


def test_socle_examples():
    r = socle_report(LINE5)
    ((c,),) = [r.components]
    assert (c.terminal_sink, c.size) == ("v5", 5)
    assert r.socle_is_everything and not r.socle_is_zero

    r = socle_report(EINF)
    (c,) = r.components
    assert (c.terminal_sink, c.size) == ("w", OMEGA)
    assert r.closure_H == ("w",) and not r.socle_is_everything

    (c,) = socle_report(TOEPLITZ).components
    assert (c.terminal_sink, c.size) == ("w", OMEGA)

    for g in (ROSE2, EN2M2, LOOP1):
        r = socle_report(g)
        assert r.socle_is_zero and r.components == ()


def test_grouping_by_sink():
    g = Graph(["a", "b", "x", "y", "z"],
              [("e", "a", "x"), ("f", "b", "y"), ("h", "z", "x"), ("k", "z", "y")])
    r = socle_report(g)
    assert [(c.terminal_sink, c.line_class, c.size) for c in r.components] == \
        [("x", ("a", "x"), 3), ("y", ("b", "y"), 3)]
    assert "z" not in r.line_points
    assert terminal_sink(g, "a") == "x"


def test_distinct_sinks_are_orthogonal():
    # p w q* with w != w' never survives a product across components
    g = Graph(["a", "b", "x", "y"], [("e", "a", "x"), ("f", "b", "y")])
    x, y = Element.vertex(g, "x"), Element.vertex(g, "y")
    assert not x * y
    ea = Element.edge(g, g.ref("e"))
    fb = Element.edge(g, g.ref("f"))
    assert not ea.star() * fb and not (ea * ea.star()) * (fb * fb.star())


def test_minimal_examples():
    assert minimal_vertex_ideal(LINE5, "v1").minimal
    v = minimal_vertex_ideal(LOOP1, "v")
    assert not v.minimal and v.corner == "laurent"
    v = minimal_vertex_ideal(ROSE2, "v")
    assert not v.minimal and v.corner == "other"


def test_disagreement_is_flagged(monkeypatch):
    import leavitt.socle as socle
    monkeypatch.setattr(socle, "classify_corner", lambda *a: "other")
    with pytest.raises(InvariantViolation):
        socle.minimal_vertex_ideal(LINE5, "v1")


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_line_points_give_minimal_ideals(name):
    g = GRAPHS[name]
    for u in g.vertices:
        v = minimal_vertex_ideal(g, u)
        assert v.minimal == (u in line_points(g))


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_component_sizes_match_enumeration(name):
    g = GRAPHS[name]
    for c in socle_report(g).components:
        if c.size is OMEGA:
            assert count_paths_into_brute(g, c.terminal_sink, 6, 2) > \
                count_paths_into_brute(g, c.terminal_sink, 5, 1)
        else:
            assert c.size == len(enumerate_paths(g, target=c.terminal_sink, max_len=len(g.vertices)))
        assert c.size >= len(c.line_class)


@pytest.mark.parametrize("seed", range(200))
def test_nonzero_socle_iff_line_points(seed):
    g = random_graph(random.Random(seed), 8, 12, 2)
    r = socle_report(g)
    assert r.socle_is_zero == (not line_points(g))
    assert r.socle_is_zero == (not line_points_desing(desingularize(g)))
    assert r.socle_is_everything == (set(r.closure_H) == set(g.vertices))
    sinks = [c.terminal_sink for c in r.components]
    assert len(sinks) == len(set(sinks))
    covered = [u for c in r.components for u in c.line_class]
    assert sorted(covered) == sorted(r.line_points)
    for c in r.components:
        assert g.classify(c.terminal_sink) == "sink"
