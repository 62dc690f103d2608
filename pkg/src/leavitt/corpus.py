"""The small named graphs used throughout the docs, demos and tests."""
from .syntax import parse_graph

SOURCES = {
    "LINE5": """\
# line with five vertices; its algebra is M_5(K)
vertex v1 v2 v3 v4 v5
edge e1 : v1 -> v2
edge e2 : v2 -> v3
edge e3 : v3 -> v4
edge e4 : v4 -> v5
""",
    "LOOP1": """\
# single loop; its algebra is K[x, x^-1]
vertex v
edge c : v -> v
""",
    "ROSE2": """\
# rose with two petals; its algebra is L(1, 2)
vertex v
edge f1 : v -> v
edge f2 : v -> v
""",
    "TOEPLITZ": """\
# one loop and one exit; the algebraic Toeplitz algebra
vertex v w
edge c : v -> v
edge e : v -> w
""",
    "EINF": """\
# infinitely many edges from v to w
vertex v w
bundle b : v -> w
""",
    "EN2M2": """\
# a two-vertex line feeding a rose with two petals
vertex v2 v1
edge e1 : v2 -> v1
edge f1 : v1 -> v1
edge f2 : v1 -> v1
""",
}

GRAPHS = {name: parse_graph(text) for name, text in SOURCES.items()}

LINE5 = GRAPHS["LINE5"]
LOOP1 = GRAPHS["LOOP1"]
ROSE2 = GRAPHS["ROSE2"]
TOEPLITZ = GRAPHS["TOEPLITZ"]
EINF = GRAPHS["EINF"]
EN2M2 = GRAPHS["EN2M2"]
