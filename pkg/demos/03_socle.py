"""
The socle as a sum of matrix algebras
=====================================

"""

from leavitt import parse_graph, socle_report

# Two sinks fed by lines; the bifurcating vertex r is not a line point.
g = parse_graph("""
vertex a b r x y
edge e : a -> x
edge f : b -> y
edge h : r -> x
edge k : r -> y
""")

r = socle_report(g)
print("line points:", r.line_points)
for c in r.components:
    print(f"M_{c.size}(K) at {c.terminal_sink}, line class {c.line_class}")
print("H =", r.closure_H, "| everything:", r.socle_is_everything)

# A loop into a sink gives infinitely many paths into it, hence M_omega(K)
t = parse_graph("vertex v w\nedge c : v -> v\nedge e : v -> w\n")
print(socle_report(t).components)

# No line points, no socle
rose = parse_graph("vertex v\nedge f1 : v -> v\nedge f2 : v -> v\n")
print(socle_report(rose).socle_is_zero)
