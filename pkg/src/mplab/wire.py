"""File formats: rational JSON polytopes, flag-point literals, involution tags.

Rationals travel as decimal strings (numerator, denominator) so arbitrary
precision survives JSON.  A polytope is ``{"dim": d, "vertices": [...]}``;
in dimension 1 each vertex is a flat [num, den] pair, in higher dimension a
vertex is a list of such pairs, one per coordinate.

Flag-point literal grammar (EBNF, whitespace ignored):

    point    = pair ";" pair
    pair     = coord "," coord
    coord    = rational [ ("+" | "-") rational "i" ]
    rational = ["-"] digits [ "/" digits ]
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .exactlin import GaussianRational, LinearInvolution, RatMatrix
from .orbits import FlagPoint
from .polytope import RationalPolytope
from .weights import InvolutionSpec, identity_involution, negation_involution


def rational_to_pair(x: Fraction) -> list[str]:
    return [str(x.numerator), str(x.denominator)]


def pair_to_rational(pair) -> Fraction:
    num, den = pair
    return Fraction(int(num), int(den))


def polytope_to_json(p: RationalPolytope) -> dict:
    if p.dim == 1:
        verts = [rational_to_pair(v[0]) for v in p.vertices]
    else:
        verts = [[rational_to_pair(c) for c in v] for v in p.vertices]
    return {"dim": p.dim, "vertices": verts}


def polytope_from_json(obj: dict) -> RationalPolytope:
    dim = int(obj["dim"])
    raw = obj["vertices"]
    if dim == 1:
        verts = tuple(sorted((pair_to_rational(v),) for v in raw))
    else:
        verts = tuple(sorted(tuple(pair_to_rational(c) for c in v) for v in raw))
    return RationalPolytope(dim, verts)


_RATIONAL = r"-?\d+(?:/\d+)?"
_COORD_RE = re.compile(
    rf"^(?P<re>{_RATIONAL})(?:(?P<sign>[+-])(?P<im>{_RATIONAL})i)?$")


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_gaussian(text: str) -> GaussianRational:
    match = _COORD_RE.match(text.strip().replace(" ", ""))
    if not match:
        raise ValueError(f"bad coordinate literal {text!r}")
    re_part = Fraction(match["re"])
    if match["im"] is None:
        return GaussianRational.of(re_part)
    im_part = Fraction(match["im"])
    if match["sign"] == "-":
        im_part = -im_part
    return GaussianRational.of(re_part, im_part)


def parse_point_literal(text: str) -> FlagPoint:
    """Parse 'a1,c1;a2,c2' with rational or Gaussian-rational coordinates."""
    pairs = text.strip().split(";")
    if len(pairs) != 2:
        raise ValueError("point literal needs exactly two ';'-separated pairs")
    coords = []
    for pair in pairs:
        parts = pair.split(",")
        if len(parts) != 2:
            raise ValueError("each pair needs exactly two ','-separated coordinates")
        coords.extend(parse_gaussian(p) for p in parts)
    return FlagPoint(*coords)


def format_point(x: FlagPoint) -> str:
    def fmt(g: GaussianRational) -> str:
        if g.im == 0:
            return f"{g.re.numerator}/{g.re.denominator}"
        sign = "+" if g.im >= 0 else "-"
        im = abs(g.im)
        return f"{g.re.numerator}/{g.re.denominator}{sign}{im.numerator}/{im.denominator}i"
    return f"{fmt(x.a1)},{fmt(x.c1)};{fmt(x.a2)},{fmt(x.c2)}"


def parse_gamma(text: str, rank: int = 1) -> InvolutionSpec:
    """'negation', 'identity', or a JSON integer matrix literal."""
    tag = text.strip()
    if tag == "negation":
        return negation_involution(rank)
    if tag == "identity":
        return identity_involution(rank)
    try:
        rows = json.loads(tag)
    except json.JSONDecodeError as exc:
        raise ValueError(f"unknown involution tag {tag!r}") from exc
    matrix = RatMatrix.from_rows(rows)
    return InvolutionSpec(LinearInvolution(matrix), "matrix")
