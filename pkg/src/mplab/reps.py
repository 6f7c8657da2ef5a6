"""Bi-homogeneous polynomial model of section spaces and their weight theory.

Degree-(d1, d2) polynomials in (x1, y1, x2, y2) model the sections of the
r-th bundle power over CP1 x CP1 with d1 = r*lam1, d2 = r*lam2.  The torus
acts dually, (t.F)(v) = F(t^-1 v), so the monomial x1^a y1^b x2^c y2^d
carries weight (b - a) + (d - c) in alpha-units, and the unipotent group N
(strictly upper triangular) acts by the substitution x_i -> x_i - t*y_i.

Two independent routes to the distinguished highest-weight vectors exist:
the explicit closed forms (sum form and factored product form, which must
agree by the binomial theorem) and a brute-force linear solve for the full
N-invariant subspace at a given weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .exactlin import GaussianRational, RatMatrix, kernel

Exponent = tuple[int, int, int, int]


class MixedWeightsError(ValueError):
    """Raised when a polynomial is not a torus weight vector."""


@dataclass(frozen=True)
class BiHomogPoly:
    """Integer-coefficient polynomial, bi-homogeneous of degree (d1, d2).

    Terms are stored as a sorted tuple of (exponent, coefficient) with no
    zero coefficients, so equality and hashing are structural.
    """

    bidegree: tuple[int, int]
    terms: tuple[tuple[Exponent, int], ...]

    def __post_init__(self):
        d1, d2 = self.bidegree
        for (a, b, c, d), coeff in self.terms:
            if coeff == 0:
                raise ValueError("zero coefficient stored")
            if a + b != d1 or c + d != d2 or min(a, b, c, d) < 0:
                raise ValueError(f"exponent {(a, b, c, d)} violates bidegree {self.bidegree}")
        if list(self.terms) != sorted(self.terms):
            raise ValueError("terms must be sorted by exponent")

    @classmethod
    def from_terms(cls, bidegree: tuple[int, int],
                   terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]]) -> "BiHomogPoly":
        acc: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            acc[exp] = acc.get(exp, 0) + coeff
        return cls(bidegree, tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def zero(cls, bidegree: tuple[int, int]) -> "BiHomogPoly":
        return cls(bidegree, ())

    @classmethod
    def monomial(cls, exp: Exponent, coeff: int = 1) -> "BiHomogPoly":
        a, b, c, d = exp
        return cls.from_terms((a + b, c + d), {exp: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: Exponent) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def __add__(self, other: "BiHomogPoly") -> "BiHomogPoly":
        if self.bidegree != other.bidegree:
            raise ValueError("bidegree mismatch in addition")
        return BiHomogPoly.from_terms(self.bidegree, list(self.terms) + list(other.terms))

    def __sub__(self, other: "BiHomogPoly") -> "BiHomogPoly":
        return self + (-other)

    def __neg__(self) -> "BiHomogPoly":
        return BiHomogPoly(self.bidegree, tuple((e, -c) for e, c in self.terms))

    def scale(self, k: int) -> "BiHomogPoly":
        if k == 0:
            return BiHomogPoly.zero(self.bidegree)
        return BiHomogPoly(self.bidegree, tuple((e, k * c) for e, c in self.terms))

    def __mul__(self, other: "BiHomogPoly") -> "BiHomogPoly":
        d1 = self.bidegree[0] + other.bidegree[0]
        d2 = self.bidegree[1] + other.bidegree[1]
        acc: dict[Exponent, int] = {}
        for (a1, b1, c1, e1), k1 in self.terms:
            for (a2, b2, c2, e2), k2 in other.terms:
                key = (a1 + a2, b1 + b2, c1 + c2, e1 + e2)
                acc[key] = acc.get(key, 0) + k1 * k2
        return BiHomogPoly.from_terms((d1, d2), acc)

    def __pow__(self, k: int) -> "BiHomogPoly":
        if k < 0:
            raise ValueError("negative power")
        out = BiHomogPoly.monomial((0, 0, 0, 0), 1)
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, point: Sequence[GaussianRational]) -> GaussianRational:
        """Exact evaluation at (x1, y1, x2, y2) in Q(i)^4."""
        x1, y1, x2, y2 = point
        total = GaussianRational(Fraction(0))
        for (a, b, c, d), coeff in self.terms:
            term = (x1 ** a) * (y1 ** b) * (x2 ** c) * (y2 ** d)
            total = total + term.scale(coeff)
        return total

    def evaluate_complex(self, point: Sequence[complex]) -> complex:
        x1, y1, x2, y2 = point
        return sum(coeff * x1 ** a * y1 ** b * x2 ** c * y2 ** d
                   for (a, b, c, d), coeff in self.terms)

    def shear_expansion(self) -> dict[tuple[int, int, int, int, int], int]:
        """Coefficients of F(x1 - t*y1, y1, x2 - t*y2, y2) with t formal.

        Keys are (a, b, c, d, e) with e the power of t.
        """
        out: dict[tuple[int, int, int, int, int], int] = {}
        for (a, b, c, d), coeff in self.terms:
            for i in range(a + 1):
                for j in range(c + 1):
                    e = (a - i) + (c - j)
                    key = (i, b + a - i, j, d + c - j, e)
                    val = coeff * comb(a, i) * comb(c, j) * (-1) ** e
                    out[key] = out.get(key, 0) + val
        return {k: v for k, v in out.items() if v != 0}

    def pretty(self) -> str:
        """Deterministic rendering, monomials in descending lexicographic order."""
        if self.is_zero:
            return "0"
        names = ("x1", "y1", "x2", "y2")
        parts: list[str] = []
        for exp, coeff in sorted(self.terms, reverse=True):
            factors = []
            for name, power in zip(names, exp):
                if power == 1:
                    factors.append(name)
                elif power > 1:
                    factors.append(f"{name}^{power}")
            mono = "*".join(factors) if factors else "1"
            mag = abs(coeff)
            body = mono if mag == 1 and factors else (f"{mag}*{mono}" if factors else str(mag))
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class SectionSpaceSpec:
    """Bundle power r and the two positive integer weights of the model."""

    r: int
    lam1: int
    lam2: int

    def __post_init__(self):
        if self.r < 1 or self.lam1 < 1 or self.lam2 < 1:
            raise ValueError("r and both weights must be >= 1")

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.r * self.lam1, self.r * self.lam2)

    @property
    def k_max(self) -> int:
        return min(self.r * self.lam1, self.r * self.lam2)


def section_space_dim(spec: SectionSpaceSpec) -> int:
    """(r*lam1 + 1)(r*lam2 + 1), the number of bi-homogeneous monomials."""
    d1, d2 = spec.bidegree
    return (d1 + 1) * (d2 + 1)


def clebsch_gordan_highest_weights(spec: SectionSpaceSpec) -> list[int]:
    """Highest weights r(lam1+lam2) - 2k, k = 0..min(r*lam1, r*lam2), descending."""
    top = spec.r * (spec.lam1 + spec.lam2)
    return [top - 2 * k for k in range(spec.k_max + 1)]


def hw_vector_sum_form(spec: SectionSpaceSpec, k: int) -> BiHomogPoly:
    """Alternating binomial sum form of the weight-(top - 2k) invariant vector."""
    _check_k(spec, k)
    d1, d2 = spec.bidegree
    terms = {}
    for j in range(k + 1):
        exp = (j, d1 - j, k - j, d2 - k + j)
        terms[exp] = (-1) ** (k - j) * comb(k, j)
    return BiHomogPoly.from_terms((d1, d2), terms)


def hw_vector_product_form(spec: SectionSpaceSpec, k: int) -> BiHomogPoly:
    """Factored form y1^(d1-k) y2^(d2-k) (x1 y2 - x2 y1)^k, expanded generically."""
    _check_k(spec, k)
    d1, d2 = spec.bidegree
    det = BiHomogPoly.from_terms((1, 1), {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1})
    return BiHomogPoly.monomial((0, d1 - k, 0, d2 - k)) * det ** k


def highest_weight_vector(spec: SectionSpaceSpec, k: int) -> BiHomogPoly:
    """The distinguished invariant vector, with the two closed forms cross-checked."""
    sum_form = hw_vector_sum_form(spec, k)
    product_form = hw_vector_product_form(spec, k)
    if sum_form != product_form:
        raise AssertionError("closed forms disagree; binomial identity violated")
    return product_form


def _check_k(spec: SectionSpaceSpec, k: int):
    if not 0 <= k <= spec.k_max:
        raise ValueError(f"k={k} outside 0..{spec.k_max}")


def verify_n_invariance(f: BiHomogPoly) -> bool:
    """Symbolic check that the unipotent substitution leaves ``f`` unchanged.

    Expands f(x1 - t*y1, y1, x2 - t*y2, y2) with t formal and requires every
    coefficient of t^e, e >= 1, to vanish exactly.
    """
    return all(e == 0 for (_, _, _, _, e) in f.shear_expansion())


def n_invariance_randomized(f: BiHomogPoly, trials: int | None = None) -> bool:
    """Fast evaluation-based invariance check at deg+1 shear parameters.

    A polynomial identity in t of degree <= d1 + d2 that vanishes at
    d1 + d2 + 1 distinct rational t values vanishes identically; points are
    fixed small rationals so the check is deterministic.  The symbolic
    check remains the authority in tests.
    """
    d1, d2 = f.bidegree
    n_t = (trials if trials is not None else d1 + d2 + 1)
    base = [GaussianRational.of(Fraction(2, 3), Fraction(1, 5)),
            GaussianRational.of(Fraction(-1, 2), Fraction(3, 7)),
            GaussianRational.of(Fraction(5, 4), Fraction(-2, 9)),
            GaussianRational.of(Fraction(1, 6), Fraction(1))]
    for idx in range(n_t):
        t = GaussianRational.of(Fraction(idx + 1, 2))
        x1, y1, x2, y2 = base
        sheared = (x1 - t * y1, y1, x2 - t * y2, y2)
        if not (f.evaluate(sheared) - f.evaluate(base)).is_zero:
            return False
    return True


def torus_weight(f: BiHomogPoly) -> int:
    """Common weight (b - a) + (d - c) of all terms; MixedWeightsError otherwise."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no weight")
    weights = {(b - a) + (d - c) for (a, b, c, d), _ in f.terms}
    if len(weights) != 1:
        raise MixedWeightsError(f"terms carry distinct weights {sorted(weights)}")
    return weights.pop()


def _monomials(bidegree: tuple[int, int]) -> list[Exponent]:
    d1, d2 = bidegree
    return [(a, d1 - a, c, d2 - c) for a in range(d1 + 1) for c in range(d2 + 1)]


def weight_decomposition(spec: SectionSpaceSpec) -> dict[int, int]:
    """Multiplicity of each torus weight over the monomial basis."""
    out: dict[int, int] = {}
    for (a, b, c, d) in _monomials(spec.bidegree):
        w = (b - a) + (d - c)
        out[w] = out.get(w, 0) + 1
    return dict(sorted(out.items(), reverse=True))


def n_invariant_subspace(spec: SectionSpaceSpec, weight: int) -> list[BiHomogPoly]:
    """Brute-force basis of the invariant subspace at a given torus weight.

    Solves the exact linear system "every power of the formal shear parameter
    has vanishing coefficient" over the monomial basis; independent of the
    closed-form construction, so it serves as its oracle.
    """
    monos = [m for m in _monomials(spec.bidegree)
             if (m[1] - m[0]) + (m[3] - m[2]) == weight]
    if not monos:
        return []
    equations: dict[tuple[int, int, int, int, int], dict[int, int]] = {}
    for col, mono in enumerate(monos):
        for key, val in BiHomogPoly.monomial(mono).shear_expansion().items():
            if key[4] == 0:
                continue
            equations.setdefault(key, {})[col] = val
    if not equations:
        return [BiHomogPoly.monomial(m) for m in monos]
    rows = [[Fraction(cols.get(j, 0)) for j in range(len(monos))]
            for _, cols in sorted(equations.items())]
    basis = kernel(RatMatrix.from_rows(rows))
    out = []
    for vec in basis:
        denom_lcm = 1
        for entry in vec:
            denom_lcm = denom_lcm * entry.denominator // _gcd(denom_lcm, entry.denominator)
        ints = [int(entry * denom_lcm) for entry in vec]
        g = 0
        for v in ints:
            g = _gcd(g, abs(v))
        ints = [v // g for v in ints]
        poly = BiHomogPoly.from_terms(spec.bidegree,
                                      {m: c for m, c in zip(monos, ints) if c != 0})
        lead_exp, lead_coeff = max(poly.terms)
        if lead_coeff < 0:
            poly = -poly
        out.append(poly)
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
