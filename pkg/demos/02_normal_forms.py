"""
Normal forms in a Leavitt path algebra
======================================

"""

from leavitt import Element, homogeneous_components, parse_element
from leavitt.corpus import EINF, ROSE2, TOEPLITZ

# Elements are parsed from text; juxtaposition multiplies and a trailing *
# is the ghost (adjoint).  Results are kept in a canonical normal form.
x = parse_element(TOEPLITZ, "c c*")
print(x)                                   # v - e e*

# c* c collapses to the range vertex
print(parse_element(TOEPLITZ, "c* c"))

# At v the relation v = c c* + e e* holds, so the two projections are orthogonal
cc = parse_element(TOEPLITZ, "c c*")
ee = parse_element(TOEPLITZ, "e e*")
print(cc + ee, "|", cc * ee)

# Arithmetic is exact over the rationals
y = parse_element(ROSE2, "1/2 f1 f2* - 3 f2 f1 f1*")
print(y, "|", y.star())
print(homogeneous_components(y + y.star()))

# An infinite emitter has no such relation: the sum never closes up
z = Element.vertex(EINF, "v")
for k in range(1, 6):
    b = Element.edge(EINF, EINF.ref("b", k))
    z = z - b * b.star()
print(z)
