"""Registered verification scenarios and their reports.

Each scenario recomputes a set of quantities and compares them with the
expected values exactly.  Reports are plain dicts so they serialize to
JSON deterministically; wall-clock timings are kept out of the report body.
"""
from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import __version__
from .deformation import (
    DESIGNATED_POINTS,
    ParameterPoint,
    cone_problem,
    default_grid,
    degree1_class,
    five_syzygy_check,
    format_induced_dim,
    hom_graded_basis,
    hom_graded_dim,
    in_span,
    obstruction_scan,
    rc2q_problem,
)
from .formats import (
    EXTRASYMMETRIC_PFAFFIANS,
    EXTRASYMMETRIC_REPEATS,
    MV_EXAMPLE_IMAGES,
    RC2Q_DEGREES,
    RING_A,
    RING_B,
    RING_CI,
    RING_CURVE,
    RING_EXTRASYM,
    RING_PLANE,
    SIGMA_DEGREES,
    build_rc2q,
    decompose,
    eliminate_u_v,
    extrasymmetric_from_entries,
    extrasymmetric_generators,
    family_e,
    family_f,
    generic_extrasymmetric,
    generic_mv,
    mv_example,
    mv_generators,
    mv_relation_vectors,
    pfaffians4_of,
    rc2q_generators,
    rc2q_syzygies,
    sample_d,
    veronese_pullback,
    veronese_rewrite,
)
from .groebner import (
    DEFAULT_MAX_DEGREE,
    GradedIdeal,
    graded_piece_dim_of_ideal,
    hilbert_function,
    hilbert_series_ci,
    ideals_equal,
    module_span_dims,
    pairing,
    syzygy_module,
    syzygy_space_dims,
    verify_syzygy,
)
from .poly import ParseError, Polynomial, WeightedRing, random_polynomial


class ScenarioError(ValueError):
    """Unknown scenario or malformed input."""


@dataclass(frozen=True)
class ScenarioOptions:
    d_poly: str = "zero"  # "zero", "sample" or a path to a file holding D
    max_degree: int = DEFAULT_MAX_DEGREE
    seed: int = 1


@dataclass
class Check:
    name: str
    computed: object
    expected: object
    source: str
    passed: bool | None = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.computed == self.expected


@dataclass
class Report:
    scenario: str
    passed: bool
    checks: list
    seed: int
    options: dict
    version: str = __version__
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ScenarioSpec:
    name: str
    description: str
    runner: Callable
    uses_d: bool = False


# ---------------------------------------------------------------- inputs

def load_ideal(path) -> GradedIdeal:
    """Read an ideal file: JSON with keys variables, weights, generators."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ScenarioError(f"cannot read ideal file {path}: {exc}") from exc
    return ideal_from_dict(data)


def ideal_from_dict(data: dict) -> GradedIdeal:
    for key in ("variables", "weights", "generators"):
        if key not in data:
            raise ScenarioError(f"ideal file lacks '{key}'")
    try:
        ring = WeightedRing(tuple(data["variables"]), tuple(data["weights"]))
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"bad ring: {exc}") from exc
    gens = []
    for n, text in enumerate(data["generators"], start=1):
        try:
            p = ring.parse(text)
        except ParseError as exc:
            raise ScenarioError(f"generator {n}: {exc}") from exc
        if p and not p.is_homogeneous():
            degs = {str(ring.monomial(m)): ring.degree_of(m) for m in p.terms}
            raise ScenarioError(f"generator {n} is inhomogeneous: {text} (monomial degrees {degs})")
        gens.append(p)
    return GradedIdeal(ring, gens)


def ideal_to_dict(I: GradedIdeal) -> dict:
    return {"variables": list(I.ring.variables), "weights": list(I.ring.weights),
            "generators": [str(g) for g in I.generators]}


def resolve_d(options: ScenarioOptions, ring: WeightedRing = RING_A) -> Polynomial:
    if options.d_poly == "zero":
        return ring.zero()
    if options.d_poly == "sample":
        return sample_d(random.Random(options.seed), ring)
    try:
        text = Path(options.d_poly).read_text().strip()
    except OSError as exc:
        raise ScenarioError(f"cannot read D from {options.d_poly}: {exc}") from exc
    try:
        D = ring.parse(text)
    except ParseError as exc:
        raise ScenarioError(f"D: {exc}") from exc
    if D and D.degree() != 7:
        raise ScenarioError(f"D must be homogeneous of degree 7, got {D}")
    return D


def _strs(polys):
    return [str(p) for p in polys]


# ---------------------------------------------------------------- scenarios

def run_hilbert_rc2q(opt: ScenarioOptions):
    D = resolve_d(opt)
    hf = hilbert_function(build_rc2q(D), 10).as_list()
    expected = [1, 1, 2, 4] + [2 * d - 3 for d in range(4, 11)]
    checks = [Check("hilbert function of A/(f1..f9), degrees 0..10", hf, expected,
                    "quotient dimensions 1,1,2,4 then 2d-3")]
    # the quotient is the even part of the curve ring: compare with the (1,3,5) hypersurface
    curve = hilbert_series_ci((1, 3, 5), (15,), 20).as_list()
    checks.append(Check("degree d piece equals degree 2d piece of C[xi,eta,zeta]/(p15)",
                        hf, [curve[2 * d] for d in range(11)], "Veronese subring"))
    return checks, [f"D = {D}"]


def run_rcq_hypersurface(opt: ScenarioOptions):
    rng = random.Random(opt.seed)
    C = RING_CURVE
    xi, eta, zeta = C.gens()
    p = zeta ** 3 - eta ** 5 + xi * random_polynomial(C, 14, rng)
    series = hilbert_series_ci((1, 3, 5), (15,), 15).as_list()
    expected = [1, 1, 1, 2, 2, 3, 4] + [m - 3 for m in range(7, 16)]
    gb_hf = hilbert_function(GradedIdeal(C, [p]), 15).as_list()
    checks = [
        Check("series of a degree-15 hypersurface in P(1,3,5), degrees 0..15", series, expected,
              "h0(C, mQ) table, m-3 for m >= 7"),
        Check("Groebner Hilbert function of a seeded degree-15 polynomial", gb_hf, series,
              "two independent computations"),
        Check("veronese rewrite of xi*(zeta^3 - eta^5)", str(veronese_rewrite(xi * (zeta ** 3 - eta ** 5))),
              "-y*z2^2 + z1*v", "even multiples of p15"),
        Check("veronese rewrite of zeta*(zeta^3 - eta^5)", str(veronese_rewrite(zeta * (zeta ** 3 - eta ** 5))),
              "-z2^2*u + v^2", "even multiples of p15"),
    ]
    q = xi * p
    back = veronese_pullback(veronese_rewrite(q))
    checks.append(Check("rewrite then pull back is the identity", str(back - q), "0", "round trip"))
    return checks, [f"p15 = {p}"]


def run_ci66_hilbert(opt: ScenarioOptions):
    rng = random.Random(opt.seed)
    series = hilbert_series_ci((1, 1, 2, 3, 3), (6, 6), 10).as_list()
    expected = [1, 2, 4] + [k * k - 2 * k + 5 for k in range(3, 11)]
    f = random_polynomial(RING_CI, 6, rng)
    g = random_polynomial(RING_CI, 6, rng)
    gb_hf = hilbert_function(GradedIdeal(RING_CI, [f, g]), 10).as_list()
    return [
        Check("series of a (6,6) complete intersection in P(1,1,2,3,3), degrees 0..10", series, expected,
              "h0(S, kL) = k^2 - 2k + 5 for k >= 3"),
        Check("Groebner Hilbert function of a seeded (6,6) pair", gb_hf, series, "two independent computations"),
    ], []


def run_pfaffian_format(opt: ScenarioOptions):
    D = resolve_d(opt)
    g = RING_A.var
    E = extrasymmetric_from_entries(RING_A, g("v"), g("z2") ** 2, D)
    nine = extrasymmetric_generators(E)
    f = rc2q_generators(D)
    checks = [
        Check("canonical pfaffians equal (f1..f9) literally", nine == f, True, "sign table"),
        Check("ideal of the canonical pfaffians equals (f1..f9)",
              ideals_equal(GradedIdeal(RING_A, nine), GradedIdeal(RING_A, f)), True, "extrasymmetric format"),
    ]
    Eg = generic_extrasymmetric()
    all15 = pfaffians4_of(Eg.matrix())
    gens = extrasymmetric_generators(Eg)
    Ig = GradedIdeal(RING_EXTRASYM, gens)
    chosen = {pair for pair, _ in EXTRASYMMETRIC_PFAFFIANS}
    members = [Ig.contains(p) for pair, p in sorted(all15.items()) if pair not in chosen]
    checks.append(Check("remaining 6 generic pfaffians lie in the ideal of the 9", members, [True] * 6,
                        "repetitions of simple multiples"))
    a, b = RING_EXTRASYM.var("a"), RING_EXTRASYM.var("b")
    mult = [all15[pair] == a ** ea * b ** eb * gens[k - 1] for pair, (ea, eb), k in EXTRASYMMETRIC_REPEATS]
    checks.append(Check("each remaining pfaffian is an (a,b)-monomial multiple", mult, [True] * 6,
                        "repetitions of simple multiples"))
    checks.append(Check("degrees of the 9 generators", [p.degree() for p in nine], list(RC2Q_DEGREES),
                        "generator degrees"))
    return checks, [f"D = {D}"]


def run_mv_format(opt: ScenarioOptions):
    D = resolve_d(opt)
    data = mv_example(RING_A, D=D)
    gs = mv_generators(data)
    f = rc2q_generators(D)
    signs = [gs[k] == (f[j - 1] if s > 0 else -f[j - 1]) for k, (s, j) in enumerate(MV_EXAMPLE_IMAGES)]
    G = generic_mv()
    gg = mv_generators(G)
    rels = [pairing(gg, vec).is_zero() for vec in mv_relation_vectors(G)]
    ex_rels = [pairing(gs, vec).is_zero() for vec in mv_relation_vectors(data)]
    labels = ["f5", "-f6", "-f8", "f9", "f3", "-f5", "-f4", "-f2", "-f1", "-f7"]
    return [
        Check("images of g1..g10: " + ", ".join(labels), signs, [True] * 10, "MV example sign identities"),
        Check("16 generic MV relations vanish identically", rels, [True] * 16, "MV relations"),
        Check("16 relations specialize to syzygies of the example", ex_rels, [True] * 16, "specialization"),
    ], [f"D = {D}"]


def run_syzygies_16(opt: ScenarioOptions):
    D = resolve_d(opt)
    f = rc2q_generators(D)
    sig = rc2q_syzygies(D)
    dmax = opt.max_degree
    mods = syzygy_module(f, dmax)
    checks = [
        Check("sigma_1..sigma_16 annihilate f1..f9", [verify_syzygy(f, s) for s in sig], [True] * 16,
              "transcribed relations"),
        Check("degrees of sigma_1..sigma_16", [s.degree for s in sig], list(SIGMA_DEGREES), "degree column"),
        Check("degree multiset of computed minimal syzygies", sorted(s.degree for s in mods),
              sorted(SIGMA_DEGREES), "16 minimal relations"),
        Check(f"span of the sigmas equals the computed module, degrees 0..{dmax}",
              module_span_dims(sig, dmax), module_span_dims(mods, dmax), "degreewise comparison"),
    ]
    return checks, [f"D = {D}"]


def run_syzygies_generate(opt: ScenarioOptions):
    D = resolve_d(opt)
    f = rc2q_generators(D)
    sig = rc2q_syzygies(D)
    dmax = opt.max_degree
    brute = syzygy_space_dims(f, dmax)
    checks = [Check(f"sigma span equals all syzygies, degrees 0..{dmax}", module_span_dims(sig, dmax), brute,
                    "the sixteen relations generate")]
    G = generic_mv()
    mv = syzygy_module(mv_generators(G), 4)
    checks.append(Check("minimal syzygies of the generic MV ideal", len(mv), 16, "16 independent relations"))
    checks.append(Check("generic MV relation span equals the computed module, degrees 0..4",
                        module_span_dims([_as_syz(mv_generators(G), v) for v in mv_relation_vectors(G)], 4),
                        module_span_dims(mv, 4), "degreewise comparison"))
    return checks, [f"D = {D}"]


def _as_syz(gens, vec):
    from .groebner import make_syzygy
    return make_syzygy(gens, vec)


def run_t1_dimensions(opt: ScenarioOptions):
    D = resolve_d(opt)
    P = rc2q_problem(D)
    dims = [hom_graded_dim(P, k) for k in range(10)]
    codim = [dims[k] - format_induced_dim(P, k, D) for k in range(10)]
    return [
        Check("dim V_k, k = 0..9", dims, [30, 23, 16, 11, 6, 4, 2, 1, 0, 0], "V_k dimension table"),
        Check("dim V_k / V_k' (entry variations), k = 0..9", codim, [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
              "format-induced subspace has codimension 1 in degrees 0 and 1"),
    ], [f"D = {D}"]


def run_t1_basis_k7(opt: ScenarioOptions):
    D = resolve_d(opt)
    P = rc2q_problem(D)
    b7 = hom_graded_basis(P, 7)
    g = RING_A.var
    line = (RING_A.zero(),) * 6 + (g("x2"), g("y"), g("z1"))
    from .deformation import FirstOrderDirection
    target = FirstOrderDirection(line)
    same_line = len(b7) == 1 and in_span(P, b7, target) and in_span(P, [target], b7[0])
    b1 = hom_graded_basis(P, 1)
    cls1 = degree1_class(RING_A, D)
    return [
        Check("V_7 basis spans the line of (0,...,0,x2,y,z1)", same_line, True, "k = 7 class"),
        Check("V_8 basis is empty", len(hom_graded_basis(P, 8)), 0, "V_k = 0 for k >= 8"),
        Check("explicit degree-1 class is a cocycle", P.check_cocycle(cls1), True, "degree-1 class"),
        Check("explicit degree-1 class lies in the computed V_1", in_span(P, b1, cls1), True, "degree-1 class"),
    ], [f"D = {D}"]


def run_five_syzygy(opt: ScenarioOptions):
    D = resolve_d(opt)
    P = rc2q_problem(D)
    full = [hom_graded_dim(P, k) for k in range(10)]
    five = [five_syzygy_check(P, k) for k in range(10)]
    return [Check("dim V_k from {s1,s3,s5,s9,s10} vs all 16, k = 0..9", five, full,
                  "five relations suffice")], [f"D = {D}"]


def run_obstruction_quadrics(opt: ScenarioOptions):
    D = resolve_d(opt)
    DB = D.to_ring(RING_B)
    P = cone_problem(DB)
    grid = default_grid() + list(DESIGNATED_POINTS) + [
        ParameterPoint(c0=1, d7=1), ParameterPoint(c0=1, d7=-1), ParameterPoint(c1=1, b6=1),
        ParameterPoint(c0=1, c1=1, d7=1), ParameterPoint(c0=2, c1=1, d7=1, b6=2),
    ]
    rows = obstruction_scan(P, grid, DB)
    table = [{"point": _short(r.point), "feasible": r.feasible, "quadrics_vanish": r.predicted} for r in rows]
    checks = [Check("order-2 feasibility equals zero set of {c0*a5, c1*a5, c0*d7 - c1*b6}",
                    [r.feasible for r in rows], [r.predicted for r in rows], "obstruction quadrics")]
    designated = {(0, 0, 0): True, (1, 0, 1): False, (0, 0, 1): True, (1, 1, 0): True}
    got = [r.feasible for r in rows[27:31]]
    checks.append(Check("designated points: zero, (c0,a5)=(1,1), a5=1, (c0,c1,d7,b6)=(1,1,1,1)", got,
                        [True, False, True, True], "lifting examples"))
    notes = [f"D = {D}"] + [json.dumps(t, sort_keys=True) for t in table]
    if any(r.used_fallback for r in rows):
        notes.append("exceptional classes were replaced by computed representatives")
    return checks, notes


def _short(pt: ParameterPoint) -> dict:
    return {k: v for k, v in pt.as_dict().items() if v != "0"}


def run_family_e(opt: ScenarioOptions):
    rng = random.Random(opt.seed)
    D = resolve_d(opt).to_ring(RING_B)
    g = RING_B.var
    x1 = g("x1")
    A = g("v") + x1 * random_polynomial(RING_B, 4, rng)
    B = g("z2") ** 2 + x1 * random_polynomial(RING_B, 5, rng)
    DD = D + x1 * random_polynomial(RING_B, 6, rng)
    I = family_e(A, B, DD)
    restrict = {"x1": RING_B.zero()}
    gens0 = [p.substitute(restrict) for p in I.generators]
    cone = build_rc2q(D, RING_B)
    checks = [
        Check("generator degrees", [p.degree() for p in I.generators], list(RC2Q_DEGREES), "degree bookkeeping"),
        Check("x1 -> 0 gives (f1..f9)", ideals_equal(GradedIdeal(RING_B, gens0), cone), True, "restriction"),
    ]
    hf_cone = hilbert_function(cone, 10).as_list()
    base = hilbert_function(build_rc2q(D.to_ring(RING_A)), 10).as_list()
    cum = [sum(base[: d + 1]) for d in range(11)]
    checks.append(Check("cone Hilbert function is the running sum of that of R", hf_cone, cum, "cone relation"))
    checks.append(Check("deformed Hilbert function equals the cone's", hilbert_function(I, 10).as_list(),
                        hf_cone, "flatness"))
    dmax = min(opt.max_degree, 14)
    mods = syzygy_module(list(I.generators), dmax)
    cone_mods = syzygy_module(list(cone.generators), dmax)
    checks.append(Check("minimal syzygy degrees of the family equal those of the cone",
                        sorted(s.degree for s in mods), sorted(s.degree for s in cone_mods),
                        "relations lift"))
    return checks, [f"A = {A}", f"B = {B}", f"D = {DD}"]


def run_family_f(opt: ScenarioOptions):
    rng = random.Random(opt.seed)
    g = RING_B.var
    x1 = g("x1")
    B = g("z2") ** 2 + x1 * random_polynomial(RING_B, 5, rng)
    Bd = decompose(B)
    Dnx = random_polynomial(RING_B, 7, rng, monomial_filter=lambda m: any(m[2:]))
    D = Dnx + x1 * Bd["x"]
    res = family_f(1, 1, 0, B, D)
    checks = [Check("constraint c0*D_x = l*B_x holds", res.in_T, True, "membership in T")]
    red = eliminate_u_v(res.generators)
    hf = hilbert_function(GradedIdeal(RING_CI, red), 10).as_list()
    checks.append(Check("after eliminating u, v: Hilbert function of a (6,6) complete intersection", hf,
                        hilbert_series_ci((1, 1, 2, 3, 3), (6, 6), 10).as_list(), "(6,6) embedding"))
    checks.append(Check("first pfaffian equals minus the first entry of M*V", res.first_row_coincide, True,
                        "g6 = -g1"))
    zero = family_f(0, 0, 0, B, D)
    checks.append(Check("c0 = c1 = c2 = 0 agrees with the pfaffian family with A = v",
                        ideals_equal(zero.ideal, family_e(g("v"), B, D)), True, "A = v"))
    bad = family_f(1, 0, 0, B, D + x1 ** 7)
    checks.append(Check("parameters violating the constraint are rejected", (bad.in_T, bad.ideal is None),
                        (False, True), "outside T"))
    return checks, [f"B = {B}", f"D = {D}"]


I10_GENERATORS = ("y^5", "x2*y^3", "x2*y^2*z1", "x2*y*z1^2", "x2*z1^3", "x2^2*y", "x2^2*z1", "x2^3")
# x2*y*z1 and x2*z1^2 from the printed list are read as x2^2*y*z1 and x2^2*z1^2,
# so that the only degree-10 monomial lost relative to I10 is x1^5*x2^2*z1
I10_PRIME_GENERATORS = ("y^5", "x2*y^3", "x2*y^2*z1", "x2*y*z1^2", "x2*z1^3", "x2^2*y^2", "x2^2*y*z1",
                        "x2^2*z1^2", "x2^2*x1^6*y", "x2^3")
I10_PRIME_AS_PRINTED = ("y^5", "x2*y^3", "x2*y^2*z1", "x2*y*z1^2", "x2*z1^3", "x2^2*y^2", "x2*y*z1",
                        "x2*z1^2", "x2^2*x1^6*y", "x2^3")


def monomial_ideal(gens) -> GradedIdeal:
    return GradedIdeal(RING_PLANE, [RING_PLANE.parse(s) for s in gens])


def run_moduli_counts(opt: ScenarioOptions):
    from .groebner import quotient_basis
    I = monomial_ideal(I10_GENERATORS)
    Ip = monomial_ideal(I10_PRIME_GENERATORS)
    lost = sorted(str(RING_PLANE.monomial(m)) for m in set(quotient_basis(Ip, 10)) - set(quotient_basis(I, 10)))
    gained = set(quotient_basis(I, 10)) - set(quotient_basis(Ip, 10))
    printed = graded_piece_dim_of_ideal(monomial_ideal(I10_PRIME_AS_PRINTED), 10)
    return [
        Check("dim of the degree-10 piece of I10", graded_piece_dim_of_ideal(I, 10), 47, "47 free parameters"),
        Check("dim of the degree-10 piece of I10'", graded_piece_dim_of_ideal(Ip, 10), 46, "46 parameters"),
        Check("monomials of I10 missing from I10'", lost, ["x1^5*x2^2*z1"], "the missing monomial"),
        Check("I10' adds no degree-10 monomial", len(gained), 0, "I10' inside I10 in degree 10"),
    ], [f"generator list of I10' read literally gives {printed}"]


SCENARIOS = {s.name: s for s in (
    ScenarioSpec("hilbert-rc2q", "Hilbert function of A/(f1..f9)", run_hilbert_rc2q, True),
    ScenarioSpec("rcq-hypersurface", "degree-15 hypersurface in P(1,3,5) and the Veronese rewrite",
                 run_rcq_hypersurface),
    ScenarioSpec("ci66-hilbert", "(6,6) complete intersection in P(1,1,2,3,3)", run_ci66_hilbert),
    ScenarioSpec("pfaffian-format", "extrasymmetric pfaffian format", run_pfaffian_format, True),
    ScenarioSpec("mv-format", "MV format signs and relations", run_mv_format, True),
    ScenarioSpec("syzygies-16", "the sixteen relations among f1..f9", run_syzygies_16, True),
    ScenarioSpec("syzygies-generate", "degreewise generation of the syzygy module", run_syzygies_generate, True),
    ScenarioSpec("t1-dimensions", "graded first-order deformation dimensions", run_t1_dimensions, True),
    ScenarioSpec("t1-basis-k7", "explicit first-order classes", run_t1_basis_k7, True),
    ScenarioSpec("five-syzygy-equivalence", "five relations suffice for V_k", run_five_syzygy, True),
    ScenarioSpec("obstruction-quadrics", "second-order lifting on a parameter grid", run_obstruction_quadrics, True),
    ScenarioSpec("family-e-restriction", "pfaffian family over the cone", run_family_e, True),
    ScenarioSpec("family-f-ci-elimination", "MV family and the (6,6) elimination", run_family_f),
    ScenarioSpec("moduli-parameter-counts", "parameter counts from monomial ideals", run_moduli_counts),
)}


def run_scenario(name: str, options: ScenarioOptions | None = None) -> tuple:
    """Run one scenario; returns (Report, seconds)."""
    options = options or ScenarioOptions()
    if name not in SCENARIOS:
        raise ScenarioError(f"unknown scenario '{name}'; known: {', '.join(sorted(SCENARIOS))}")
    spec = SCENARIOS[name]
    t0 = time.perf_counter()
    checks, notes = spec.runner(options)
    elapsed = time.perf_counter() - t0
    checks = [_jsonable(c) for c in checks]
    report = Report(name, all(c.passed for c in checks), checks, options.seed, asdict(options), notes=notes)
    return report, elapsed


def _jsonable(c: Check) -> Check:
    def conv(x):
        if isinstance(x, Fraction):
            return str(x)
        if isinstance(x, (list, tuple)):
            return [conv(y) for y in x]
        if isinstance(x, Polynomial):
            return str(x)
        return x
    return Check(c.name, conv(c.computed), conv(c.expected), c.source, bool(c.passed))


def _run_named(args):
    name, options = args
    report, elapsed = run_scenario(name, options)
    return report.to_dict(), elapsed


def run_many(names, options: ScenarioOptions, jobs: int = 1) -> dict:
    """Run scenarios (optionally in parallel); output ordered by scenario name."""
    names = sorted(set(names))
    for n in names:
        if n not in SCENARIOS:
            raise ScenarioError(f"unknown scenario '{n}'; known: {', '.join(sorted(SCENARIOS))}")
    if jobs > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_named, [(n, options) for n in names]))
    else:
        results = [_run_named((n, options)) for n in names]
    reports = [r for r, _ in results]
    return {
        "passed": all(r["passed"] for r in reports),
        "reports": reports,
        "seed": options.seed,
        "timings": {r["scenario"]: round(t, 3) for r, (_, t) in zip(reports, results)},
        "version": __version__,
    }
