"""
Reducing an element to a vertex
===============================

"""

import random

from leavitt import graded_ideal_vertex_check, parse_element, reduce, semiprime_spotcheck
from leavitt.corpus import LOOP1, ROSE2, TOEPLITZ
from leavitt.sampling import random_nonzero_element

# Multiply a nonzero element on both sides by vertices, edges and ghosts
# until only a scalar multiple of a vertex is left.
x = parse_element(TOEPLITZ, "e e* - 2 c e e* c*")
w = reduce(TOEPLITZ, x)
print([str(t) for t in w.left], [str(t) for t in w.right], "->", w.result, w.kind)

# On an exitless cycle the best one can do is land in the cycle's corner...
w = reduce(LOOP1, parse_element(LOOP1, "c + 2 c c"))
print(w.result, w.kind)

# ...after which a single homogeneous component is inverted
v = graded_ideal_vertex_check(LOOP1, parse_element(LOOP1, "c + 2 c c"))
print(v.vertex, "=", v.multiplier, "*", v.component)

# x m x != 0 for some monomial m, on random elements
rng = random.Random(1)
for _ in range(3):
    y = random_nonzero_element(ROSE2, rng)
    m = semiprime_spotcheck(ROSE2, y)
    print(f"x = {y}   m = {m}")
