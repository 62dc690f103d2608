"""
Graphs, trees and line points
=============================

"""

from leavitt import Graph, classify_vertices, condition_L, count_paths_into, line_points, tree
from leavitt.corpus import EINF, LINE5, TOEPLITZ

# A graph is a list of vertices, a list of edges (name, source, target)
# and optionally omega-bundles, which stand for infinitely many parallel edges.
g = Graph(["a", "b", "c", "d"],
          [("x", "a", "b"), ("y", "b", "c"), ("z", "b", "d"), ("l", "d", "d")])
print(classify_vertices(g))

# The tree of a vertex is everything reachable from it
print(sorted(tree(g, "a")))

# b bifurcates and d carries a loop, so only the sink c is a line point
print(line_points(g))

for name, h in [("LINE5", LINE5), ("TOEPLITZ", TOEPLITZ), ("EINF", EINF)]:
    print(name, sorted(line_points(h)), condition_L(h)[0])

# number of paths ending at a sink, omega when there are infinitely many
print(count_paths_into(LINE5, "v5"), count_paths_into(TOEPLITZ, "w"))
