"""Exact engine for Borel-orbit closures in CP1 x CP1 and their polytopes.

A point x = ((a1:c1), (a2:c2)) with exact Q(i) coordinates determines the
closure X of its orbit under the upper-triangular Borel group acting
diagonally on both factors.  Three decidable predicates classify X:

* z1: c1 = 0 (first point is the Borel-fixed point),
* z2: c2 = 0,
* d:  a1*c2 - a2*c1 = 0 (the two points coincide).

The distinguished invariant vectors evaluate on the orbit through x as
F(x) times a nonzero factor, so their closed form
c1^(r*lam1-k) * c2^(r*lam2-k) * (a1*c2 - a2*c1)^k reduces every vanishing
question to the three predicates.  From that case analysis:

* dense orbit            -> [|lam1 - lam2|, lam1 + lam2]
* diagonal               -> {lam1 + lam2}
* CP1 x {(1:0)}          -> {lam1 - lam2} if lam1 >= lam2, else empty
  (the nonvanishing route forces k = r*lam2 <= r*lam1; symmetrically for
  {(1:0)} x CP1, which is why exactly one of the two factor cases is empty
  when lam1 != lam2)
* the fixed point        -> empty

Real-form counterparts intersect these with the negated eigenspace of the
torus involution; the headline identity "real polytope = polytope cut by
the negated eigenspace" is computed by two independent routes and asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .exactlin import GaussianRational, frac
from .polytope import RationalPolytope, equals, hull, intersect_subspace
from .reps import SectionSpaceSpec, highest_weight_vector
from .weights import ExactGroupElement2x2, InvolutionSpec, involution_eigenspaces


class OrbitClass(Enum):
    DENSE = "dense"
    DIAGONAL = "diagonal"
    FIRST_FACTOR = "first_factor"
    SECOND_FACTOR = "second_factor"
    POINT = "point"


@dataclass(frozen=True, eq=False)
class FlagPoint:
    """Pair of homogeneous coordinate pairs over Q(i); equality is projective."""

    a1: GaussianRational
    c1: GaussianRational
    a2: GaussianRational
    c2: GaussianRational

    def __post_init__(self):
        if self.a1.is_zero and self.c1.is_zero:
            raise ValueError("first coordinate pair is (0, 0)")
        if self.a2.is_zero and self.c2.is_zero:
            raise ValueError("second coordinate pair is (0, 0)")

    @classmethod
    def real(cls, a1, c1, a2, c2) -> "FlagPoint":
        return cls(*(GaussianRational.of(frac(v)) for v in (a1, c1, a2, c2)))

    @property
    def is_real(self) -> bool:
        return all(g.is_real for g in (self.a1, self.c1, self.a2, self.c2))

    @property
    def coords(self) -> tuple[GaussianRational, GaussianRational, GaussianRational, GaussianRational]:
        return (self.a1, self.c1, self.a2, self.c2)

    def as_complex_pairs(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((complex(self.a1), complex(self.c1)),
                (complex(self.a2), complex(self.c2)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlagPoint):
            return NotImplemented
        first = (self.a1 * other.c1 - other.a1 * self.c1).is_zero
        second = (self.a2 * other.c2 - other.a2 * self.c2).is_zero
        return first and second

    __hash__ = None  # projective equality is not hash-compatible

    def __str__(self) -> str:
        return f"(({self.a1}:{self.c1}), ({self.a2}:{self.c2}))"


def orbit_predicates(x: FlagPoint) -> tuple[bool, bool, bool]:
    """(z1, z2, d): the three exact vanishing predicates."""
    z1 = x.c1.is_zero
    z2 = x.c2.is_zero
    d = (x.a1 * x.c2 - x.a2 * x.c1).is_zero
    return z1, z2, d


def classify_borel_orbit_closure(x: FlagPoint) -> OrbitClass:
    z1, z2, d = orbit_predicates(x)
    if z1 and z2:
        return OrbitClass.POINT
    if z1:
        return OrbitClass.SECOND_FACTOR
    if z2:
        return OrbitClass.FIRST_FACTOR
    return OrbitClass.DIAGONAL if d else OrbitClass.DENSE


def borel_act(g: ExactGroupElement2x2, x: FlagPoint) -> FlagPoint:
    """Diagonal action of a 2x2 determinant-1 matrix on both factors."""
    p1 = g.apply((x.a1, x.c1))
    p2 = g.apply((x.a2, x.c2))
    return FlagPoint(p1[0], p1[1], p2[0], p2[1])


class Membership(NamedTuple):
    member: bool
    witness: int | None


def _check_weights(lam1: int, lam2: int):
    if lam1 < 1 or lam2 < 1:
        raise ValueError("both weights must be integers >= 1")


def _nonvanishing(k: int, r: int, lam1: int, lam2: int,
                  z1: bool, z2: bool, d: bool) -> bool:
    # F evaluates to c1^(r*lam1-k) c2^(r*lam2-k) (a1 c2 - a2 c1)^k
    return ((k == r * lam1 or not z1)
            and (k == r * lam2 or not z2)
            and (k == 0 or not d))


def membership_in_C(x: FlagPoint, lam1: int, lam2: int, lam,
                    r_limit: int | None = None) -> Membership:
    """Does some bundle power carry an invariant vector of weight r*lam
    that is nonzero on the orbit closure of x?

    The witness search runs over multiples of den(lam) up to
    2 * den(lam) * (lam1 + lam2); the closed-form vanishing conditions are
    monotone in r, so larger witnesses are redundant (a denominator-clearing
    r with the right parity exists within the bound whenever one exists at
    all).
    """
    _check_weights(lam1, lam2)
    lam = frac(lam)
    q = lam.denominator
    bound = r_limit if r_limit is not None else 2 * q * (lam1 + lam2)
    z1, z2, d = orbit_predicates(x)
    for r in range(q, bound + 1, q):
        r_lam = lam * r
        if r_lam < 0 or r_lam.denominator != 1:
            continue
        num = r * (lam1 + lam2) - int(r_lam)
        if num % 2 != 0:
            continue
        k = num // 2
        if not 0 <= k <= min(r * lam1, r * lam2):
            continue
        if _nonvanishing(k, r, lam1, lam2, z1, z2, d):
            return Membership(True, r)
    return Membership(False, None)


def moment_polytope(x: FlagPoint, lam1: int, lam2: int) -> RationalPolytope:
    """Closure of the achievable-weight set for the orbit closure of x.

    Closed-form case analysis on the orbit class; lives in the rank-1
    torus dual (alpha-units), so the result is a segment, a point or empty.
    """
    _check_weights(lam1, lam2)
    cls = classify_borel_orbit_closure(x)
    if cls is OrbitClass.DENSE:
        return hull([(abs(lam1 - lam2),), (lam1 + lam2,)])
    if cls is OrbitClass.DIAGONAL:
        return hull([(lam1 + lam2,)])
    if cls is OrbitClass.FIRST_FACTOR:
        return hull([(lam1 - lam2,)]) if lam1 >= lam2 else RationalPolytope.empty(1)
    if cls is OrbitClass.SECOND_FACTOR:
        return hull([(lam2 - lam1,)]) if lam2 >= lam1 else RationalPolytope.empty(1)
    return RationalPolytope.empty(1)


@dataclass(frozen=True)
class RealFormCase:
    """A conjugation-fixed (all-real) base point together with the torus involution."""

    x: FlagPoint
    gamma: InvolutionSpec

    def __post_init__(self):
        if not self.x.is_real:
            raise ValueError("base point must have real coordinates")
        if self.gamma.rank != 1:
            raise ValueError("torus involution must act on the rank-1 torus dual")


def gamma_highest_weight_polytope(case: RealFormCase, lam1: int, lam2: int,
                                  r_max: int = 2) -> RationalPolytope:
    """Closure of the constrained weight set, by the representation route.

    Evaluates the actual invariant vectors at the base point over bundle
    powers r <= r_max, hulls the achieved weights (exact rationals), and
    intersects with the negated eigenspace of gamma.  For integer weights
    r = 1 already achieves the extreme points; r_max = 2 adds a safety
    margin at trivial cost.
    """
    _check_weights(lam1, lam2)
    achieved: list[tuple[Fraction, ...]] = []
    point = case.x.coords
    for r in range(1, r_max + 1):
        spec = SectionSpaceSpec(r, lam1, lam2)
        for k in range(spec.k_max + 1):
            vec = highest_weight_vector(spec, k)
            if not vec.evaluate(point).is_zero:
                achieved.append((Fraction(r * (lam1 + lam2) - 2 * k, r),))
    closure = hull(achieved, dim=1)
    _, q_sub = involution_eigenspaces(case.gamma)
    return intersect_subspace(closure, q_sub)


def real_moment_polytope(case: RealFormCase, lam1: int, lam2: int) -> RationalPolytope:
    """Polytope of the real form, by the intersection route.

    Cuts the exact orbit polytope with the negated eigenspace of gamma and
    asserts agreement with the representation route before returning.
    """
    _check_weights(lam1, lam2)
    _, q_sub = involution_eigenspaces(case.gamma)
    via_intersection = intersect_subspace(moment_polytope(case.x, lam1, lam2), q_sub)
    via_membership = gamma_highest_weight_polytope(case, lam1, lam2)
    if not equals(via_intersection, via_membership):
        raise AssertionError(
            f"route disagreement at {case.x}, weights ({lam1},{lam2}): "
            f"{via_intersection} vs {via_membership}")
    return via_intersection


def orbit_representatives() -> dict[OrbitClass, FlagPoint]:
    """One real representative per orbit-closure class."""
    return {
        OrbitClass.DENSE: FlagPoint.real(0, 1, 1, 1),
        OrbitClass.DIAGONAL: FlagPoint.real(1, 1, 1, 1),
        OrbitClass.FIRST_FACTOR: FlagPoint.real(0, 1, 1, 0),
        OrbitClass.SECOND_FACTOR: FlagPoint.real(1, 0, 0, 1),
        OrbitClass.POINT: FlagPoint.real(1, 0, 1, 0),
    }


def enumerate_polytope_catalog(lam1: int, lam2: int,
                               gamma: InvolutionSpec) -> list[RationalPolytope]:
    """Distinct real-form polytopes over the five orbit classes (at most 5)."""
    _check_weights(lam1, lam2)
    seen: list[RationalPolytope] = []
    for rep in orbit_representatives().values():
        poly = real_moment_polytope(RealFormCase(rep, gamma), lam1, lam2)
        if not any(equals(poly, existing) for existing in seen):
            seen.append(poly)
    return sorted(seen, key=lambda p: (len(p.vertices), p.vertices))
