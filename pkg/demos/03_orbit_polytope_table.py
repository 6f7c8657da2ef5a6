"""The five Borel-orbit-closure classes in CP1 x CP1 and their polytopes.

A point x = ((a1:c1), (a2:c2)) falls into one of five classes under the
upper-triangular group acting diagonally, decided by three exact predicates;
each class has a closed-form polytope on the weight axis.  The table below
reproduces every case over the weight grid {1..4}^2.
"""

from mplab import (
    classify_borel_orbit_closure,
    membership_in_C,
    moment_polytope,
    orbit_representatives,
)

print("== classification by exact predicates ==")
for cls, x in orbit_representatives().items():
    print(f"  {str(x):28s} -> {classify_borel_orbit_closure(x).value}")

print("\n== the polytope table over the weight grid ==")
header = "  (l1,l2) " + "".join(f"{cls.value:>16s}" for cls in orbit_representatives())
print(header)
for l1 in range(1, 5):
    for l2 in range(1, 5):
        row = [f"  ({l1},{l2})  "]
        for x in orbit_representatives().values():
            row.append(f"{str(moment_polytope(x, l1, l2)):>16s}")
        print("".join(row))

print("\n== membership with witnesses, dense orbit at weights (2,1) ==")
dense = orbit_representatives()[list(orbit_representatives())[0]]
from fractions import Fraction
for lam in (Fraction(1), Fraction(2), Fraction(3), Fraction(3, 2), Fraction(1, 2), Fraction(4)):
    member, witness = membership_in_C(dense, 2, 1, lam)
    note = f"witness power r={witness}" if member else "no witness"
    print(f"  weight {str(lam):>4s}: member={member}  ({note})")
