"""
Desingularization
=================

"""

from leavitt import desingularize, format_graph, line_points_desing, truncate, verify_desing_lemma
from leavitt.corpus import EINF

# Sinks get an infinite line attached; infinite emitters are spread along
# an infinite tail whose vertices emit two edges each.
d = desingularize(EINF)
for t in d.tails:
    print(t.base, t.kind)

# The tail is symbolic, so line points of the infinite graph can be queried
lp = line_points_desing(d)
print(sorted(lp.core), lp.tails)

# and they agree with the line points of the original graph
print(verify_desing_lemma(EINF))

# A finite cut, for looking at; the cut vertices are artificial sinks
tr = truncate(d, 3)
print(format_graph(tr.graph, header="EINF desingularized to depth 3"))
print(tr.warning)
