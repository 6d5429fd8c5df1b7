"""Command line entry point ``gradedcone``.

Exit codes: 0 all comparisons pass, 1 a comparison failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .deformation import (
    DeformationProblem,
    FirstOrderDirection,
    ParameterPoint,
    cone_problem,
    hom_graded_basis,
    hom_graded_dim,
    lift_order2,
    reduced_direction,
)
from .formats import RING_B
from .groebner import DEFAULT_MAX_DEGREE, ideals_equal, syzygy_module
from .poly import ParseError
from .scenarios import SCENARIOS, ScenarioError, ScenarioOptions, load_ideal, run_many

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(obj, pretty: bool = False):
    if pretty:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True))


def _render_verify(result: dict):
    for r in result["reports"]:
        status = "PASS" if r["passed"] else "FAIL"
        print(f"[{status}] {r['scenario']}  ({result['timings'][r['scenario']]:.2f}s)")
        for c in r["checks"]:
            mark = "ok " if c["passed"] else "BAD"
            print(f"    {mark} {c['name']}")
            if not c["passed"]:
                print(f"        computed: {c['computed']}")
                print(f"        expected: {c['expected']}")
    print(f"seed {result['seed']}; {'all passed' if result['passed'] else 'FAILURES'}")


def cmd_verify(args) -> int:
    names = list(SCENARIOS) if "all" in args.scenarios else args.scenarios
    opts = ScenarioOptions(d_poly=args.d_poly, max_degree=args.max_degree, seed=args.seed)
    result = run_many(names, opts, jobs=args.jobs)
    if args.pretty:
        _render_verify(result)
    else:
        _emit(result)
    return EXIT_OK if result["passed"] else EXIT_FAIL


def cmd_gb(args) -> int:
    I = load_ideal(args.ideal)
    _emit({"groebner_basis": [str(g) for g in I.groebner_basis()]}, args.pretty)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    I = load_ideal(args.ideal)
    _emit({"hilbert_function": I.hilbert_function(args.max_degree).as_list()}, args.pretty)
    return EXIT_OK


def cmd_syzygies(args) -> int:
    I = load_ideal(args.ideal)
    syz = syzygy_module(list(I.generators), args.max_degree)
    _emit({"syzygies": [{"degree": s.degree, "coefficients": [str(c) for c in s.coefficients]} for s in syz]},
          args.pretty)
    return EXIT_OK


def _problem_from_file(I, d_max) -> DeformationProblem:
    syz = syzygy_module(list(I.generators), d_max)
    return DeformationProblem(I.ring, I.generators, [s.coefficients for s in syz], I)


def cmd_t1(args) -> int:
    I = load_ideal(args.ideal)
    P = _problem_from_file(I, args.max_degree)
    out = {"k": args.k, "dimension": hom_graded_dim(P, args.k)}
    if args.basis:
        out["basis"] = [[str(c) for c in b.components] for b in hom_graded_basis(P, args.k)]
    _emit(out, args.pretty)
    return EXIT_OK


def cmd_lift2(args) -> int:
    I = load_ideal(args.ideal)
    try:
        params = json.loads(Path(args.params).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ScenarioError(f"cannot read params file {args.params}: {exc}") from exc
    if "direction" in params:
        comps = params["direction"]
        if len(comps) != len(I.generators):
            raise ScenarioError(f"direction has {len(comps)} entries, ideal has {len(I.generators)} generators")
        P = _problem_from_file(I, args.max_degree)
        direction = FirstOrderDirection(tuple(I.ring.parse(t) for t in comps))
        if not P.check_cocycle(direction):
            raise ScenarioError("direction does not satisfy the first-order condition")
        note = "explicit direction"
    elif "point" in params:
        if I.ring != RING_B:
            raise ScenarioError(f"a parameter point needs the ring {RING_B}")
        D = RING_B.parse(params.get("D", "0"))
        P = cone_problem(D)
        if not ideals_equal(I, P.ideal):
            raise ScenarioError("ideal file does not match the cone ideal for the given D")
        pt = ParameterPoint.from_dict({k: Fraction(v) for k, v in params["point"].items()})
        rd = reduced_direction(pt, D, P)
        direction = rd.direction
        note = rd.note or "reduced direction"
    else:
        raise ScenarioError("params need either 'direction' or 'point'")
    res = lift_order2(P, direction)
    out = {"feasible": res.feasible, "note": note}
    if res.witness is not None:
        out["witness"] = [str(c) for c in res.witness.components]
    _emit(out, args.pretty)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gradedcone", description="Graded ring, pfaffian format and deformation checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def output_flags(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", dest="pretty", action="store_false", help="machine-readable output (default)")
        g.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable output")
        sp.set_defaults(pretty=False)

    v = sub.add_parser("verify", help="run registered scenarios")
    v.add_argument("scenarios", nargs="+", metavar="scenario",
                   help="scenario names or 'all': " + ", ".join(sorted(SCENARIOS)))
    v.add_argument("--d-poly", default="zero", help="zero, sample, or a file holding D (degree 7 in A)")
    v.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--jobs", type=int, default=1)
    output_flags(v)
    v.set_defaults(func=cmd_verify)

    for name, func, helptext in (("gb", cmd_gb, "reduced Groebner basis"),
                                 ("syzygies", cmd_syzygies, "minimal first syzygies")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("ideal")
        sp.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
        output_flags(sp)
        sp.set_defaults(func=func)

    h = sub.add_parser("hilbert", help="Hilbert function of the quotient")
    h.add_argument("ideal")
    h.add_argument("--max-degree", type=int, required=True)
    output_flags(h)
    h.set_defaults(func=cmd_hilbert)

    t = sub.add_parser("t1", help="dimension of Hom(I/I^2, R) in degree -k")
    t.add_argument("ideal")
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--basis", action="store_true", help="also print a basis")
    t.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    output_flags(t)
    t.set_defaults(func=cmd_t1)

    l2 = sub.add_parser("lift2", help="second-order lifting feasibility")
    l2.add_argument("ideal")
    l2.add_argument("--params", required=True)
    l2.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    output_flags(l2)
    l2.set_defaults(func=cmd_lift2)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", 0) is not None and getattr(args, "k", 0) < 0:
        parser.error("--k must be non-negative")
    try:
        return args.func(args)
    except (ScenarioError, ParseError, ValueError) as exc:
        print(f"gradedcone: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
