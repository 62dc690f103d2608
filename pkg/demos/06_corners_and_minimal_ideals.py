"""
Corners and minimal left ideals
===============================

"""

from leavitt import classify_corner, corner_basis, minimal_vertex_ideal, monomial_type, parse_element
from leavitt.corpus import GRAPHS, LINE5, LOOP1

# The corner v L v at a line point is one-dimensional
print([str(x) for x in corner_basis(LINE5, "v2", 8)])

# at the base of an exitless cycle it is a Laurent polynomial ring
print([str(x) for x in corner_basis(LOOP1, "v", 6)], classify_corner(LOOP1, "v", 6))

# L v is a minimal left ideal exactly at line points; the check is done
# twice, from the graph and from the corner, and both must agree
for name in sorted(GRAPHS):
    g = GRAPHS[name]
    verdicts = [minimal_vertex_ideal(g, u) for u in g.vertices]
    print(name, {v.vertex: v.minimal for v in verdicts})

# Kinds of monomials spanning L u for a line point u
for text, u in [("v5", "v5"), ("e1 e2 e3 e4", "v5"), ("e4*", "v4")]:
    print(text, monomial_type(LINE5, u, parse_element(LINE5, text)))
