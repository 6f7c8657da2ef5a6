"""Exact rational polytopes: hulls, membership, and subspace cuts.

Everything below is computed over Q with no floating point, so equality of
polytopes is literal equality of canonical vertex lists.
"""

from fractions import Fraction

from mplab import LinearSubspace, RationalPolytope, contains, equals, hull, intersect_subspace

F = Fraction

print("== convex hulls are minimal vertex sets ==")
segment = hull([(0,), (1,), (F(1, 2),)])
print(f"hull of {{0, 1/2, 1}} on the line: {segment}")

square = hull([(0, 0), (1, 0), (0, 1), (1, 1), (F(1, 2), F(1, 2))])
print(f"unit square plus its center: {square}")

print("\n== exact membership ==")
seg13 = hull([(1,), (3,)])
for x in (F(2), F(0), F(3), F(7, 2)):
    print(f"  {x} in [1, 3]?  {contains(seg13, (x,))}")

print("\n== cutting with a linear subspace ==")
tilted = hull([(-1, -1), (1, 1)])
antidiagonal = LinearSubspace.span(2, [(1, -1)])
print(f"segment (-1,-1)..(1,1) cut by span{{(1,-1)}}: {intersect_subspace(tilted, antidiagonal)}")

box = hull([(1, 1), (1, 2), (2, 1), (2, 2)])
print(f"off-origin box cut by the same line: {intersect_subspace(box, antidiagonal)}")

print("\n== the empty polytope is a value, not an error ==")
nothing = RationalPolytope.empty(1)
print(f"empty cut by anything stays empty: "
      f"{intersect_subspace(nothing, LinearSubspace.full(1))}")
print(f"hull{{0,1}} equals hull{{0,1/2,1}}? {equals(segment, hull([(0,), (1,)]))}")
