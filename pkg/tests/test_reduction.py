import random

import pytest

from leavitt.algebra import Element
from leavitt.corpus import EINF, GRAPHS, LINE5, LOOP1, ROSE2, TOEPLITZ
from leavitt.graph import condition_L
from leavitt.reduction import (BoundExceeded, ZeroElement, goal_kind, graded_ideal_vertex_check,
                               reduce, replay, semiprime_spotcheck)
from leavitt.sampling import random_nonzero_element
from leavitt.syntax import parse_element


def tokens(ts):
    return [str(t) for t in ts]


def test_reduce_examples():
    w = reduce(LINE5, parse_element(LINE5, "e1 e2"))
    assert (tokens(w.left), tokens(w.right), w.kind) == (["e2*", "e1*"], [], "vertex")
    assert w.result == Element.vertex(LINE5, "v3")

    w = reduce(LOOP1, parse_element(LOOP1, "c + 2 c c"))
    assert (w.left, w.right, w.kind) == ((), (), "cycle_corner")

    w = reduce(TOEPLITZ, parse_element(TOEPLITZ, "e e*"))
    assert (tokens(w.left), tokens(w.right)) == (["e*"], ["e"])
    assert w.result == Element.vertex(TOEPLITZ, "w")


def test_reduce_errors():
    with pytest.raises(ZeroElement):
        reduce(LINE5, Element.zero(LINE5))
    with pytest.raises(BoundExceeded) as err:
        reduce(ROSE2, parse_element(ROSE2, "f1 f2* + f2 f1 f1* f1* - 3 f2 f2 f1*"), bound=0)
    assert err.value.frontier >= 0


def test_graded_ideal_examples():
    assert graded_ideal_vertex_check(TOEPLITZ, parse_element(TOEPLITZ, "e e*")).vertex == "w"
    r = graded_ideal_vertex_check(LOOP1, parse_element(LOOP1, "c"))
    assert r.vertex == "v"
    assert r.multiplier * r.component == Element.vertex(LOOP1, "v")
    assert graded_ideal_vertex_check(LINE5, parse_element(LINE5, "v2")).vertex == "v2"
    r = graded_ideal_vertex_check(LOOP1, parse_element(LOOP1, "2 c* - 3 c c"))
    assert r.vertex == "v"


def test_semiprime_examples():
    assert semiprime_spotcheck(LINE5, parse_element(LINE5, "e1")) == parse_element(LINE5, "e1*")
    assert semiprime_spotcheck(LOOP1, parse_element(LOOP1, "c")) == parse_element(LOOP1, "c*")
    assert semiprime_spotcheck(EINF, parse_element(EINF, "b[3]")) == parse_element(EINF, "b[3]*")
    with pytest.raises(ZeroElement):
        semiprime_spotcheck(LINE5, Element.zero(LINE5))


def test_goal_kind():
    assert goal_kind(LINE5, parse_element(LINE5, "2 v3")) == "vertex"
    assert goal_kind(LINE5, parse_element(LINE5, "v3 + v4")) is None
    assert goal_kind(LOOP1, parse_element(LOOP1, "c* + v")) == "cycle_corner"
    assert goal_kind(TOEPLITZ, parse_element(TOEPLITZ, "c")) is None


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_random_witnesses_replay(name):
    g = GRAPHS[name]
    rng = random.Random(name)
    for _ in range(30):
        x = random_nonzero_element(g, rng)
        w = reduce(g, x, bound=8)
        assert w.size <= 8
        assert replay(g, w.left, x, w.right) == w.result
        assert goal_kind(g, w.result) == w.kind
        if condition_L(g)[0]:
            assert w.kind == "vertex"
        m = semiprime_spotcheck(g, x, bound=10)
        assert x * m * x


def test_witnesses_are_deterministic():
    g = TOEPLITZ
    x = parse_element(g, "c e e* - 2 e e* c* + v")
    assert reduce(g, x) == reduce(g, x)
