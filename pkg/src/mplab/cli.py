"""Command-line front end.

Subcommands: ``polytope`` (exact orbit polytope and optional membership
table), ``realpolytope`` (real-form polytope by both routes with an equality
verdict), ``catalog``, ``decompose``, ``hwv``, ``oracle``, ``verify``,
``sample`` (CSV), ``plot`` (SVG).  Machine-readable output goes to stdout as
JSON, human summaries to stderr.  Exit codes: 0 success, 1 check failure,
2 usage error.

A JSON config file passed with ``--config`` may hold any long-option value
(keys use underscores, e.g. ``{"weights": [2, 1], "gamma": "negation"}``);
explicit flags win over the file.  The environment variable ``MPLAB_SEED``
overrides the default seed.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import checks, numeric, svgplot, wire
from .orbits import (
    FlagPoint,
    RealFormCase,
    classify_borel_orbit_closure,
    enumerate_polytope_catalog,
    gamma_highest_weight_polytope,
    membership_in_C,
    moment_polytope,
)
from .polytope import equals, intersect_subspace
from .reps import (
    SectionSpaceSpec,
    clebsch_gordan_highest_weights,
    hw_vector_product_form,
    hw_vector_sum_form,
    n_invariant_subspace,
    section_space_dim,
)
from .weights import InvolutionSpec, involution_eigenspaces


@dataclass(frozen=True)
class CaseSpec:
    """Validated parameters of one computation case; defaults are explicit."""

    lam1: int
    lam2: int
    point: FlagPoint | None = None
    gamma: InvolutionSpec | None = None
    seed: int = 0
    r_max: int = 6
    eps: float = 0.05

    def __post_init__(self):
        if self.lam1 < 1 or self.lam2 < 1:
            raise ValueError("weights must be integers >= 1")
        if self.r_max < 1:
            raise ValueError("r_max must be >= 1")
        if not 0 < self.eps < 3.15:
            raise ValueError("eps must be a small positive angle in radians")


def _default_seed() -> int:
    env = os.environ.get("MPLAB_SEED")
    return int(env) if env else 0


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":"), sort_keys=True))


class _Config:
    """Flag resolution: explicit flag > config file > default."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.table = {}
        path = getattr(args, "config", None)
        if path:
            with open(path) as fh:
                self.table = json.load(fh)
            if not isinstance(self.table, dict):
                raise ValueError("config file must hold a JSON object")

    def get(self, name: str, default=None):
        flag = getattr(self.args, name, None)
        if flag is not None:
            return flag
        if name in self.table:
            return self.table[name]
        return default

    def require(self, name: str):
        value = self.get(name)
        if value is None:
            raise ValueError(f"missing required option --{name.replace('_', '-')}")
        return value

    def case_spec(self, need_point: bool = True, need_gamma: bool = False) -> CaseSpec:
        lam1, lam2 = (int(w) for w in self.require("weights"))
        point = self.get("point")
        if need_point:
            point = wire.parse_point_literal(self.require("point"))
        elif point is not None:
            point = wire.parse_point_literal(point)
        gamma = self.get("gamma")
        if need_gamma:
            gamma = wire.parse_gamma(self.require("gamma"))
        elif gamma is not None:
            gamma = wire.parse_gamma(gamma)
        return CaseSpec(lam1=lam1, lam2=lam2, point=point, gamma=gamma,
                        seed=int(self.get("seed", _default_seed())),
                        r_max=int(self.get("r_max", 6)),
                        eps=float(self.get("eps", 0.05)))


def _membership_table(x: FlagPoint, lam1: int, lam2: int) -> list[dict]:
    grid: list[Fraction] = []
    top = lam1 + lam2 + 1
    for den in (1, 2):
        for num in range(-den, top * den + 1):
            lam = Fraction(num, den)
            if lam not in grid:
                grid.append(lam)
    grid.sort()
    table = []
    for lam in grid:
        member, witness = membership_in_C(x, lam1, lam2, lam)
        table.append({"lambda": f"{lam.numerator}/{lam.denominator}",
                      "member": member, "witness": witness})
    return table


def cmd_polytope(args: argparse.Namespace) -> int:
    cfg = _Config(args)
    case = cfg.case_spec(need_point=True)
    delta = moment_polytope(case.point, case.lam1, case.lam2)
    if args.membership:
        _emit({"polytope": wire.polytope_to_json(delta),
               "orbit_class": classify_borel_orbit_closure(case.point).value,
               "membership": _membership_table(case.point, case.lam1, case.lam2)})
    else:
        _emit(wire.polytope_to_json(delta))
    print(f"orbit polytope: {delta}", file=sys.stderr)
    return 0


def cmd_realpolytope(args: argparse.Namespace) -> int:
    cfg = _Config(args)
    case = cfg.case_spec(need_point=True, need_gamma=True)
    real_case = RealFormCase(case.point, case.gamma)
    _, q_sub = involution_eigenspaces(case.gamma)
    via_intersection = intersect_subspace(
        moment_polytope(case.point, case.lam1, case.lam2), q_sub)
    via_membership = gamma_highest_weight_polytope(real_case, case.lam1, case.lam2)
    same = equals(via_intersection, via_membership)
    _emit({"intersection_route": wire.polytope_to_json(via_intersection),
           "membership_route": wire.polytope_to_json(via_membership),
           "equal": same})
    print(f"routes {'agree' if same else 'DISAGREE'}: {via_intersection}", file=sys.stderr)
    return 0 if same else 1


def cmd_catalog(args: argparse.Namespace) -> int:
    cfg = _Config(args)
    case = cfg.case_spec(need_point=False, need_gamma=True)
    cat = enumerate_polytope_catalog(case.lam1, case.lam2, case.gamma)
    _emit({"weights": [case.lam1, case.lam2], "gamma": case.gamma.label,
           "count": len(cat), "polytopes": [wire.polytope_to_json(p) for p in cat]})
    for p in cat:
        print(f"  {p}", file=sys.stderr)
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    cfg = _Config(args)
    case = cfg.case_spec(need_point=False)
    spec = SectionSpaceSpec(int(cfg.get("r", 1)), case.lam1, case.lam2)
    weights_list = clebsch_gordan_highest_weights(spec)
    _emit({"r": spec.r, "weights": [case.lam1, case.lam2],
           "highest_weights": weights_list,
           "dims": [w + 1 for w in weights_list],
           "section_dim": section_space_dim(spec)})
    return 0


def cmd_hwv(args: argparse.Namespace) -> int:
    cfg = _Config(args)
    case = cfg.case_spec(need_point=False)
    spec = SectionSpaceSpec(int(cfg.get("r", 1)), case.lam1, case.lam2)
    k = int(cfg.require("k"))
    sum_form = hw_vector_sum_form(spec, k)
    product_form = hw_vector_product_form(spec, k)
    d1, d2 = spec.bidegree
    factors = []
    for name, power in (("y1", d1 - k), ("y2", d2 - k)):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(f"{name}^{power}")
    if k == 1:
        factors.append("(x1*y2 - x2*y1)")
    elif k > 1:
        factors.append(f"(x1*y2 - x2*y1)^{k}")
    _emit({"r": spec.r, "k": k, "weights": [case.lam1, case.lam2],
           "weight": spec.r * (case.lam1 + case.lam2) - 2 * k,
           "sum_form": sum_form.pretty(),
           "product_form": "*".join(factors) if factors else "1",
           "product_form_expanded": product_form.pretty(),
           "forms_equal": sum_form == product_form})
    return 0 if sum_form == product_form else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = _Config(args)
    case = cfg.case_spec(need_point=False)
    spec = SectionSpaceSpec(int(cfg.get("r", 1)), case.lam1, case.lam2)
    weight = int(cfg.require("weight"))
    basis = n_invariant_subspace(spec, weight)
    _emit({"r": spec.r, "weights": [case.lam1, case.lam2], "weight": weight,
           "dimension": len(basis), "basis": [b.pretty() for b in basis]})
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _Config(args)
    seed = int(cfg.get("seed", _default_seed()))
    try:
        results = checks.run_suite(args.suite, seed)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    passed = all(r.passed for r in results)
    _emit({"suite": args.suite, "seed": seed, "passed": passed,
           "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                      for r in results]})
    for r in results:
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}", file=sys.stderr)
    return 0 if passed else 1


def cmd_sample(args: argparse.Namespace) -> int:
    cfg = _Config(args)
    case = cfg.case_spec(need_point=True)
    subgroup = str(cfg.get("subgroup", "H"))
    n = int(cfg.get("n", 1000))
    samples = numeric.sample_orbit(case.point, subgroup, n, case.seed,
                                   case.lam1, case.lam2)
    out = cfg.get("out")
    if out:
        with open(out, "w", newline="") as fh:
            numeric.write_samples_csv(samples, fh)
        print(f"wrote {n} samples to {out}", file=sys.stderr)
    else:
        numeric.write_samples_csv(samples, sys.stdout)
    return 0


def cmd_plot(args: argparse.Namespace) -> int:
    src = args.infile
    if src.endswith(".json"):
        with open(src) as fh:
            obj = json.load(fh)
        poly = wire.polytope_from_json(obj.get("polytope", obj))
        svg = svgplot.render_polytope_svg(poly)
    elif src.endswith(".csv"):
        with open(src, newline="") as fh:
            reader = csv.DictReader(fh)
            phi1, phi3 = [], []
            for row in reader:
                phi1.append(float(row["phi1"]))
                phi3.append(float(row["phi3"]))
        svg = svgplot.render_samples_svg(phi1, phi3)
    else:
        print("plot input must be a .json polytope or .csv sample file", file=sys.stderr)
        return 2
    with open(args.out, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def _add_common(sub: argparse.ArgumentParser, point: bool = False,
                gamma: bool = False, r: bool = False):
    sub.add_argument("--weights", nargs=2, type=int, metavar=("L1", "L2"),
                     help="the two positive integer weights")
    sub.add_argument("--config", help="JSON file with default option values")
    sub.add_argument("--seed", type=int, help="RNG seed (default: MPLAB_SEED or 0)")
    sub.add_argument("--r-max", dest="r_max", type=int, help="witness search bound (default 6)")
    sub.add_argument("--eps", type=float, help="angular filter half-width (default 0.05)")
    if point:
        sub.add_argument("--point", help="flag point literal 'a1,c1;a2,c2'")
    if gamma:
        sub.add_argument("--gamma", help="involution: negation | identity | JSON matrix")
    if r:
        sub.add_argument("--r", type=int, help="bundle power (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mplab",
        description="Exact orbit polytopes in CP1 x CP1, their real forms, "
                    "and a numeric moment-map laboratory.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("polytope", help="exact orbit polytope for a flag point")
    _add_common(p, point=True)
    p.add_argument("--membership", action="store_true",
                   help="include the achievable-weight membership table")
    p.set_defaults(func=cmd_polytope)

    p = subs.add_parser("realpolytope", help="real-form polytope by both routes")
    _add_common(p, point=True, gamma=True)
    p.set_defaults(func=cmd_realpolytope)

    p = subs.add_parser("catalog", help="distinct real-form polytopes over all orbit classes")
    _add_common(p, gamma=True)
    p.set_defaults(func=cmd_catalog)

    p = subs.add_parser("decompose", help="tensor-product highest weights and dimensions")
    _add_common(p, r=True)
    p.set_defaults(func=cmd_decompose)

    p = subs.add_parser("hwv", help="print the invariant vector in both closed forms")
    _add_common(p, r=True)
    p.add_argument("--k", type=int, help="index of the invariant vector")
    p.set_defaults(func=cmd_hwv)

    p = subs.add_parser("oracle", help="brute-force invariant subspace at a weight")
    _add_common(p, r=True)
    p.add_argument("--weight", type=int, help="torus weight to solve at")
    p.set_defaults(func=cmd_oracle)

    p = subs.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=["section5", "lagrangian", "coadjoint", "gradcheck", "all"])
    p.add_argument("--config", help="JSON file with default option values")
    p.add_argument("--seed", type=int, help="RNG seed (default: MPLAB_SEED or 0)")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("sample", help="sample an orbit and dump CSV")
    _add_common(p, point=True)
    p.add_argument("--subgroup", choices=["B", "H", "G", "G'"],
                   help="which group to sample (default H)")
    p.add_argument("--n", type=int, help="number of samples (default 1000)")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_sample)

    p = subs.add_parser("plot", help="render a polytope JSON or sample CSV as SVG")
    p.add_argument("--in", dest="infile", required=True, help=".json or .csv artifact")
    p.add_argument("--out", required=True, help="SVG output path")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
