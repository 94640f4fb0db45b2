"""
Slope multisets and their Newton polygons
=========================================

A finite multiset of rational slopes encodes a convex polygon: sort the
slopes, take running sums, and read the result as the graph of a
piecewise-linear function.  Two operations make the collection of such
multisets a semiring — disjoint union (the polygons "merge") and
pairwise sums (the polygons "convolve") — and comparing polygons
pointwise gives a useful partial order.

Run me directly:  python3 demos/01_slope_polygons.py
"""
from fractions import Fraction

from heckeslopes.polygon import (
    EMPTY,
    TENSOR_IDENTITY,
    SlopeMultiset,
    frobenius_polygon,
)

# Build multisets from strings (handy at the REPL) or from any iterable
# of Fractions/ints.  Slopes are kept exact; floats are refused.
a = SlopeMultiset.from_string("0, 1/2, 1")
b = SlopeMultiset([Fraction(1, 3), 1])

print("a               =", a)
print("b               =", b)

# oplus is multiset union: ranks and integrals both add.
print("a (+) b         =", a.oplus(b))

# otimes forms all pairwise sums: ranks multiply.
print("a (x) b         =", a.otimes(b))
print("rank, integral  =", a.otimes(b).rank, ",", a.otimes(b).integral)

# The two neutral elements.
assert a.oplus(EMPTY) == a
assert a.otimes(TENSOR_IDENTITY) == a

# Duality negates every slope (the polygon is rotated half a turn).
print("dual of a       =", a.dual())
assert a.dual().dual() == a

# The partial order: s <= t when t's polygon lies on or above s's,
# vertex by vertex.  {0,1} vs {1/2,1/2} is the classic picture — same
# endpoints, and the flat polygon sits above the bent one.
bent = SlopeMultiset.from_string("0,1")
flat = SlopeMultiset.from_string("1/2,1/2")
print("bent <= flat    =", bent.leq(flat))
print("flat <= bent    =", flat.leq(bent))

# Vertices of the polygon as exact rational pairs (x, height).
print("vertices(bent)  =", bent.vertices())
print("vertices(flat)  =", flat.vertices())

# The standard two-parameter family: k blocks of a d-fold product, i of
# which are "non-ordinary".  i = 0 is the lowest member, i = k the
# highest, and the family is totally ordered in between.
print()
print("frobenius_polygon(d=2, k=3, i):")
for i in range(4):
    ms = frobenius_polygon(2, 3, i)
    print(f"  i={i}:", ms)
chain = [frobenius_polygon(2, 3, i) for i in range(4)]
assert all(chain[i].leq(chain[i + 1]) for i in range(3))

# Weight 3 doubles every slope (weight=3 below), which is the same as
# scaling the weight-2 polygon by 2.
assert frobenius_polygon(2, 3, 1, weight=3) == frobenius_polygon(2, 3, 1).scale(2)
print()
print("weight-3 member :", frobenius_polygon(2, 3, 1, weight=3))
