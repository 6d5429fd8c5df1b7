"""Graded first-order deformations and second-order lifting.

A first-order direction is a tuple (g_1..g_m), g_i of degree deg f_i - k,
with sum_i l_ij g_i in I for every generating syzygy l_j.  Everything is
computed in quotient-ring coordinates: a polynomial is represented by the
coefficients of its normal form, which lives on the standard monomials.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Sequence

from .formats import (
    EXTRASYMMETRIC_PFAFFIANS,
    FIVE_SYZYGIES,
    RING_A,
    RING_B,
    decompose,
    extrasymmetric_specialization,
    generic_extrasymmetric,
    rc2q_generators,
    rc2q_syzygy_table,
)
from .groebner import GradedIdeal, pairing, quotient_basis
from .linalg import RowReducer, rank
from .poly import Polynomial, WeightedRing


class CocycleError(ValueError):
    """A direction failed sum_i l_ij f_i^(1) in I for some syzygy."""


class QuotientRing:
    """R = ring / I with cached monomial normal forms."""

    def __init__(self, ideal: GradedIdeal):
        self.ideal = ideal
        self.ring = ideal.ring
        self._nf = {}
        self._basis = {}

    def basis(self, d: int) -> list:
        if d not in self._basis:
            self._basis[d] = quotient_basis(self.ideal, d) if d >= 0 else []
        return self._basis[d]

    def nf_monomial(self, m) -> dict:
        out = self._nf.get(m)
        if out is None:
            out = self.ideal.normal_form(Polynomial(self.ring, {m: Fraction(1)})).terms
            self._nf[m] = out
        return out

    def coords(self, p: Polynomial | dict) -> dict:
        terms = p.terms if isinstance(p, Polynomial) else p
        out = {}
        for m, c in terms.items():
            for t, v in self.nf_monomial(m).items():
                s = out.get(t, 0) + c * v
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return out

    def product_coords(self, a: Polynomial, mono) -> dict:
        """Normal-form coordinates of a * mono."""
        out = {}
        for m, c in a.terms.items():
            prod = tuple(x + y for x, y in zip(m, mono))
            for t, v in self.nf_monomial(prod).items():
                s = out.get(t, 0) + c * v
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return out


@dataclass(frozen=True)
class FirstOrderDirection:
    components: tuple

    @property
    def ring(self):
        return self.components[0].ring

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other):
        return FirstOrderDirection(tuple(a + b for a, b in zip(self.components, other.components)))

    def scale(self, c):
        return FirstOrderDirection(tuple(a.scale(c) for a in self.components))

    def __getitem__(self, i):
        return self.components[i]

    def __len__(self):
        return len(self.components)


class DeformationProblem:
    """Generators f_1..f_m of a homogeneous ideal with a generating set of syzygies."""

    def __init__(self, ring: WeightedRing, generators: Sequence[Polynomial],
                 syzygies: Sequence[Sequence[Polynomial]], ideal: GradedIdeal | None = None):
        self.ring = ring
        self.generators = tuple(generators)
        self.degrees = tuple(g.degree() for g in self.generators)
        self.syzygies = tuple(tuple(s) for s in syzygies)
        self.syzygy_degrees = []
        for j, s in enumerate(self.syzygies):
            if len(s) != len(self.generators):
                raise ValueError(f"syzygy {j + 1} has {len(s)} entries")
            if not pairing(self.generators, s).is_zero():
                raise ValueError(f"syzygy {j + 1} does not annihilate the generators")
            degs = {self.degrees[i] + c.degree() for i, c in enumerate(s) if c}
            if len(degs) != 1:
                raise ValueError(f"syzygy {j + 1} is not homogeneous")
            self.syzygy_degrees.append(degs.pop())
        self.syzygy_degrees = tuple(self.syzygy_degrees)
        self.ideal = ideal or GradedIdeal(ring, self.generators)
        self.quotient = QuotientRing(self.ideal)
        self._image = {}

    def with_syzygies(self, subset: Sequence[int]) -> "DeformationProblem":
        """Same generators, only the syzygies with the given 1-based indices."""
        return DeformationProblem(self.ring, self.generators,
                                  [self.syzygies[j - 1] for j in subset], self.ideal)

    # -- the linear map g -> (sum_i l_ij g_i)_j in quotient coordinates

    def _image_column(self, i: int, mono) -> dict:
        col = {}
        for j, s in enumerate(self.syzygies):
            if s[i]:
                for t, v in self.quotient.product_coords(s[i], mono).items():
                    col[(j, t)] = v
        return col

    def unknowns(self, k: int) -> list:
        """Pairs (i, monomial) spanning the tuples g_i in R_{deg f_i - k}."""
        return [(i, m) for i, d in enumerate(self.degrees) for m in self.quotient.basis(d - k)]

    def syzygy_values(self, direction) -> dict:
        """Quotient coordinates of sum_i l_ij g_i, keyed by (j, monomial)."""
        out = {}
        for j, s in enumerate(self.syzygies):
            total = pairing(direction, s)
            for t, v in self.quotient.coords(total).items():
                out[(j, t)] = v
        return out

    def check_cocycle(self, direction) -> bool:
        return not self.syzygy_values(direction)

    def image_reducer(self, k: int):
        """Echelon form of the columns of the map at shift k (cached)."""
        if k not in self._image:
            unk = self.unknowns(k)
            red = RowReducer()
            kern = []
            for n, (i, m) in enumerate(unk):
                dep = red.insert(self._image_column(i, m), n)
                if dep is not None:
                    kern.append(dep)
            self._image[k] = (unk, red, kern)
        return self._image[k]

    def direction_from_vector(self, unk, vec: dict) -> FirstOrderDirection:
        comps = [dict() for _ in self.generators]
        for n, c in vec.items():
            i, m = unk[n]
            comps[i][m] = comps[i].get(m, 0) + c
        return FirstOrderDirection(tuple(Polynomial(self.ring, {m: c for m, c in d.items() if c})
                                         for d in comps))

    def zero_direction(self) -> FirstOrderDirection:
        return FirstOrderDirection(tuple(self.ring.zero() for _ in self.generators))


def hom_graded_dim(P: DeformationProblem, k: int) -> int:
    """dim Hom_R(I/I^2, R)_{-k}."""
    if k < 0:
        raise ValueError("k must be non-negative")
    unk, red, kern = P.image_reducer(k)
    return len(unk) - red.rank


def hom_graded_basis(P: DeformationProblem, k: int) -> list:
    unk, red, kern = P.image_reducer(k)
    out = []
    for vec in kern:
        d = P.direction_from_vector(unk, vec)
        if not P.check_cocycle(d):
            raise CocycleError(f"kernel vector at k={k} fails the cocycle condition")
        out.append(d)
    return out


def in_span(P: DeformationProblem, directions: Sequence[FirstOrderDirection],
            target: FirstOrderDirection) -> bool:
    """Is ``target`` in the span of ``directions`` modulo I (componentwise)?"""
    def vec(d):
        out = {}
        for i, c in enumerate(d.components):
            for t, v in P.quotient.coords(c).items():
                out[(i, t)] = v
        return out
    red = RowReducer(track=False)
    for d in directions:
        red.insert(vec(d))
    return not red.is_independent(vec(target))


def five_syzygy_check(P: DeformationProblem, k: int, subset: Sequence[int] = FIVE_SYZYGIES) -> int:
    return hom_graded_dim(P.with_syzygies(subset), k)


# ---------------------------------------------------------------- the R(C,2Q) problem

def rc2q_problem(D: Polynomial | None = None, ring: WeightedRing = RING_A) -> DeformationProblem:
    if D is not None and D.ring != ring:
        D = D.to_ring(ring)
    gens = rc2q_generators(D, ring=ring)
    return DeformationProblem(ring, gens, rc2q_syzygy_table(D, ring=ring))


# entries n1..n9 of N and their degrees in the ambient grading
ENTRY_NAMES = tuple(f"n{i}" for i in range(1, 10))


@dataclass(frozen=True)
class _PfaffianPartials:
    """d f_i / d n_e for the nine canonical generators of the generic matrix."""
    table: dict  # (i, name) -> Polynomial over RING_EXTRASYM

    @classmethod
    def build(cls):
        E = generic_extrasymmetric()
        M = E.matrix()
        table = {}
        for i, (pair, sign) in enumerate(EXTRASYMMETRIC_PFAFFIANS):
            pf = M.pfaffian_of([k for k in range(1, 7) if k not in pair])
            if sign < 0:
                pf = -pf
            for name in ENTRY_NAMES + ("a", "b"):
                d = pf.diff(name)
                if d:
                    table[(i, name)] = d
        return cls(table)


_PARTIALS = None


def _partials() -> _PfaffianPartials:
    global _PARTIALS
    if _PARTIALS is None:
        _PARTIALS = _PfaffianPartials.build()
    return _PARTIALS


def pfaffian_derivative(ring: WeightedRing, A, B, D, variations: dict) -> FirstOrderDirection:
    """d/de of the nine pfaffians of N when entry n_e moves to n_e + e*h_e.

    ``variations`` maps entry names (n1..n9, a) to polynomials h_e.
    """
    images = extrasymmetric_specialization(ring, A, B, D)
    comps = [ring.zero() for _ in range(9)]
    for (i, name), d in _partials().table.items():
        h = variations.get(name)
        if h is None or not h:
            continue
        comps[i] = comps[i] + d.substitute(images, ring) * h
    return FirstOrderDirection(tuple(comps))


def entry_degrees(ring: WeightedRing, A, B, D) -> dict:
    images = extrasymmetric_specialization(ring, A, B, D)
    return {name: images[name].degree() if images[name] else None for name in ENTRY_NAMES}


def format_induced_directions(P: DeformationProblem, k: int, D: Polynomial | None = None,
                              A=None, B=None) -> list:
    """Directions in V_k obtained by varying one entry of N by h of the right degree.

    Entry degrees: A=v:5, B:6, z1:3, y:2, x2:1, D:7, u:4, z2:3, v:5, and a:0.
    The parameter b has degree -6 and never contributes.
    """
    ring = P.ring
    g = ring.var
    A = g("v") if A is None else A
    B = g("z2") ** 2 if B is None else B
    D = ring.zero() if D is None else D
    degs = {"n1": 5, "n2": 6, "n3": 3, "n4": 2, "n5": 1, "n6": 7, "n7": 4, "n8": 3, "n9": 5, "a": 0}
    out = []
    for name, d in degs.items():
        for m in ring.monomials_of_degree(d - k) if d - k >= 0 else []:
            out.append(pfaffian_derivative(ring, A, B, D, {name: ring.monomial(m)}))
    return out


def format_induced_dim(P: DeformationProblem, k: int, D=None) -> int:
    """dim V_k' as the rank of entry variations modulo I."""
    vecs = []
    for d in format_induced_directions(P, k, D):
        v = {}
        for i, c in enumerate(d.components):
            for t, x in P.quotient.coords(c).items():
                v[(i, t)] = x
        vecs.append(v)
    return rank(vecs)


# ---------------------------------------------------------------- the reduced direction

@dataclass(frozen=True)
class ParameterPoint:
    """Coordinates on the reduced first-order space.

    ``D_y_prime`` and ``D_z1_prime`` accept a number r (meaning r*x2^5 and
    r*x2^4) or a polynomial of degree 5 resp. 4 in x2, y (and z1).
    """
    c0: Fraction = 0
    c1: Fraction = 0
    a5: Fraction = 0
    b1: Fraction = 0
    b2: Fraction = 0
    b3: Fraction = 0
    b6: Fraction = 0
    delta_prime: Fraction = 0
    D_y_prime: object = 0
    D_z1_prime: object = 0
    d02_prime: Fraction = 0
    d11: Fraction = 0
    d12: Fraction = 0
    d21: Fraction = 0
    d22: Fraction = 0
    d3: Fraction = 0
    d41: Fraction = 0
    d42: Fraction = 0
    d5: Fraction = 0
    d7: Fraction = 0

    @classmethod
    def from_dict(cls, data: dict) -> "ParameterPoint":
        names = {f.name for f in fields(cls)}
        bad = set(data) - names
        if bad:
            raise ValueError(f"unknown parameters: {sorted(bad)}")
        vals = {}
        for k, v in data.items():
            vals[k] = v if isinstance(v, Polynomial) else Fraction(v)
        return cls(**vals)

    def as_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            out[f.name] = str(v) if isinstance(v, Polynomial) else str(Fraction(v))
        return out


def _as_poly(ring, value, default_mono: str) -> Polynomial:
    if isinstance(value, Polynomial):
        return value.to_ring(ring)
    return ring.parse(default_mono).scale(Fraction(value)) if value else ring.zero()


@dataclass(frozen=True)
class DPieces:
    """D = delta*x2^7 + y*D_y + z1*D_z1 + d02*z2*u."""
    delta: Fraction
    D_y: Polynomial
    D_z1: Polynomial
    d02: Fraction


def split_d(D: Polynomial) -> DPieces:
    """Split D by the variable rule (each monomial to its heaviest variable).

    Raises if D has terms outside the shape delta*x2^7 + y*D_y + z1*D_z1 + d02*z2*u.
    """
    ring = D.ring
    if "x1" in ring.variables and any(m[ring.index("x1")] for m in D.terms):
        raise ValueError("D must not involve x1")
    dec = decompose(D)
    if dec["v"] or dec["z2"]:
        raise ValueError(f"D has terms outside the normalized shape: {D}")
    z2, x2 = ring.var("z2"), ring.var("x2")
    d02 = Fraction(0)
    if dec["u"]:
        if set(dec["u"].terms) != {z2.lm()}:
            raise ValueError(f"D has u-terms other than z2*u: {D}")
        d02 = dec["u"].coefficient(z2.lm())
    delta = dec["x"].coefficient((x2 ** 7).lm()) if dec["x"] else Fraction(0)
    return DPieces(delta, dec["y"], dec["z1"], d02)


def degree0_class(ring: WeightedRing, D: Polynomial) -> FirstOrderDirection:
    """The x1-free first-order class not induced by entry changes of N."""
    g = ring.var
    x2, y, z1, z2, u, v = (g(n) for n in ("x2", "y", "z1", "z2", "u", "v"))
    pc = split_d(D)
    Dy, Dz1 = pc.D_y.to_ring(ring), pc.D_z1.to_ring(ring)
    delta, d02 = pc.delta, pc.d02
    return FirstOrderDirection((
        -u,
        -v,
        ring.zero(),
        z2 * (z1 * d02 - z2),
        -((x2 ** 7).scale(delta) + Dy * y + Dz1 * z1),
        -((x2 ** 6 * y).scale(delta) + Dy * z2 + Dz1 * u),
        -(Dy * z1 + (z2 * v).scale(d02)),
        (x2 ** 6 * z1).scale(delta) + Dz1 * v,
        -(Dy * v),
    ))


def degree1_class(ring: WeightedRing, D: Polynomial) -> FirstOrderDirection:
    """The x1-degree-one class (to be multiplied by x1) not induced by N."""
    g = ring.var
    y, z1, z2, u, v = (g(n) for n in ("y", "z1", "z2", "u", "v"))
    D = D.to_ring(ring)
    zero = ring.zero()
    return FirstOrderDirection((z1, zero, -v, -(y * z2), -(z2 * z2), -D, z2 * u, zero, zero))


def entry_perturbation(pt: ParameterPoint, ring: WeightedRing = RING_B) -> tuple:
    """(A', B', D') of the perturbed matrix."""
    p = ring.parse
    c = lambda x: Fraction(x)
    A1 = p("x1^5").scale(c(pt.a5))
    B1 = (p("x1*v").scale(c(pt.b1)) + p("x1^2*u").scale(c(pt.b2))
          + p("x1^3*z2").scale(c(pt.b3)) + p("x1^6").scale(c(pt.b6)))
    D1 = (p("x2^7").scale(c(pt.delta_prime))
          + _as_poly(ring, pt.D_y_prime, "x2^5") * p("y")
          + _as_poly(ring, pt.D_z1_prime, "x2^4") * p("z1")
          + p("z2*u").scale(c(pt.d02_prime))
          + p("x1*y*u").scale(c(pt.d11)) + p("x1*z2^2").scale(c(pt.d12))
          + p("x1^2*y*z2").scale(c(pt.d21)) + p("x1^2*v").scale(c(pt.d22))
          + p("x1^3*u").scale(c(pt.d3)) + p("x1^4*z1").scale(c(pt.d41))
          + p("x1^4*z2").scale(c(pt.d42)) + p("x1^5*y").scale(c(pt.d5))
          + p("x1^7").scale(c(pt.d7)))
    for name, q, d in (("A'", A1, 5), ("B'", B1, 6), ("D'", D1, 7)):
        if q and q.degree() != d:
            raise ValueError(f"{name} is not homogeneous of degree {d}: {q}")
    return A1, B1, D1


@dataclass
class ReducedDirection:
    direction: FirstOrderDirection
    used_fallback: bool = False
    note: str = ""


def cone_problem(D: Polynomial | None = None) -> DeformationProblem:
    """The cone over R(C,2Q): same generators and syzygies, extra variable x1."""
    ring = RING_B
    D = ring.zero() if D is None else D.to_ring(ring)
    return DeformationProblem(ring, rc2q_generators(D, ring=ring), rc2q_syzygy_table(D, ring=ring))


def _exceptional_class(P_A: DeformationProblem, k: int, D) -> FirstOrderDirection:
    """A basis vector of V_k not in V_k', computed from scratch."""
    induced = format_induced_directions(P_A, k, D)
    for b in hom_graded_basis(P_A, k):
        if not in_span(P_A, induced, b):
            return b
    raise CocycleError(f"no exceptional class in degree {k}")


def reduced_direction(pt: ParameterPoint, D: Polynomial | None = None,
                      problem: DeformationProblem | None = None) -> ReducedDirection:
    """c0*(degree-0 class) + c1*x1*(degree-1 class) + derivative of the pfaffians along (A',B',D')."""
    ring = RING_B
    D = ring.zero() if D is None else D.to_ring(ring)
    if D and D.coefficient((ring.var("x2") ** 7).lm()) != 0:
        raise ValueError("D must have zero x2^7 coefficient")
    P = problem or cone_problem(D)
    x1 = ring.var("x1")
    notes = []
    fallback = False
    c0, c1 = Fraction(pt.c0), Fraction(pt.c1)
    total = P.zero_direction()
    classes = {}
    for k, build in ((0, degree0_class), (1, degree1_class)):
        cls = build(ring, D)
        if not P.check_cocycle(cls):
            # transcription failed; recompute the class over the x1-free ring
            P_A = rc2q_problem(D.to_ring(RING_A))
            alt = _exceptional_class(P_A, k, D.to_ring(RING_A))
            cls = FirstOrderDirection(tuple(c.to_ring(ring) for c in alt.components))
            fallback = True
            notes.append(f"degree-{k} class replaced by a computed representative")
        classes[k] = cls
    if c0:
        total = total + classes[0].scale(c0)
    if c1:
        total = total + FirstOrderDirection(tuple(x1 * c for c in classes[1].components)).scale(c1)
    A1, B1, D1 = entry_perturbation(pt, ring)
    g = ring.var
    total = total + pfaffian_derivative(ring, g("v"), g("z2") ** 2, D, {"n1": A1, "n2": B1, "n6": D1})
    if not P.check_cocycle(total):
        raise CocycleError("assembled direction fails the cocycle condition")
    return ReducedDirection(total, fallback, "; ".join(notes))


# ---------------------------------------------------------------- second order

@dataclass
class LiftResult:
    feasible: bool
    witness: FirstOrderDirection | None = None
    obstruction_rank: int = 0
    details: dict = field(default_factory=dict)


def first_order_corrections(P: DeformationProblem, direction) -> list:
    """For each syzygy l_j, cofactors m_j with sum_i l_ij f_i^(1) + sum_i m_ij f_i = 0."""
    out = []
    for j, s in enumerate(P.syzygies):
        r = pairing(direction, s)
        cof = P.ideal.lift(r)
        if cof is None:
            raise CocycleError(f"direction fails the cocycle condition at syzygy {j + 1}")
        out.append([-c for c in cof])
    return out


def direction_shift(P: DeformationProblem, direction) -> int:
    """The k with deg f_i^(1) = deg f_i - k for every nonzero component."""
    shifts = set()
    for i, c in enumerate(direction):
        if c:
            if not c.is_homogeneous():
                raise ValueError(f"component {i + 1} is not homogeneous")
            shifts.add(P.degrees[i] - c.degree())
    if len(shifts) > 1:
        raise ValueError(f"components have inconsistent degree shifts {sorted(shifts)}")
    return shifts.pop() if shifts else 0


def lift_order2(P: DeformationProblem, direction, verify: bool = True) -> LiftResult:
    """Decide whether F_i = f_i + t f_i^(1) extends to order t^2.

    The order-one equations fix m_j up to a syzygy, which changes
    sum_i m_ij f_i^(1) only by an element of I.  So the order-two equations
    are solvable iff ob_j = sum_i m_ij f_i^(1) is, modulo I, of the form
    -sum_i l_ij g_i for a tuple g = f^(2).  A direction of shift k (degrees
    deg f_i - k) gives a witness of shift 2k.
    """
    direction = tuple(direction.components if isinstance(direction, FirstOrderDirection) else direction)
    if all(c.is_zero() for c in direction):
        return LiftResult(True, P.zero_direction())
    m = first_order_corrections(P, direction)
    ob = {}
    for j, mj in enumerate(m):
        for t, v in P.quotient.coords(pairing(direction, mj)).items():
            ob[(j, t)] = v
    if not ob:
        return LiftResult(True, P.zero_direction())
    unk, red, _ = P.image_reducer(2 * direction_shift(P, direction))
    sol = red.express(ob)
    if sol is None:
        return LiftResult(False, None, details={"obstruction_terms": len(ob)})
    f2 = P.direction_from_vector(unk, {n: -c for n, c in sol.items()})
    if verify:
        for j, s in enumerate(P.syzygies):
            order2 = pairing(f2.components, s) + pairing(direction, m[j])
            if P.ideal.lift(order2) is None:
                raise AssertionError(f"witness fails at syzygy {j + 1}")
    return LiftResult(True, f2, details={"obstruction_terms": len(ob)})


@dataclass
class ScanRow:
    point: ParameterPoint
    feasible: bool
    predicted: bool
    used_fallback: bool = False


def quadrics_vanish(pt: ParameterPoint) -> bool:
    c0, c1, a5, b6, d7 = (Fraction(x) for x in (pt.c0, pt.c1, pt.a5, pt.b6, pt.d7))
    return c0 * a5 == 0 and c1 * a5 == 0 and c0 * d7 - c1 * b6 == 0


def obstruction_scan(P: DeformationProblem, grid: Sequence[ParameterPoint], D=None) -> list:
    rows = []
    for pt in grid:
        rd = reduced_direction(pt, D, P)
        res = lift_order2(P, rd.direction)
        rows.append(ScanRow(pt, res.feasible, quadrics_vanish(pt), rd.used_fallback))
    return rows


def default_grid() -> list:
    """The 27 points with c0, c1, a5 in {-1, 0, 1}, other parameters 0."""
    vals = (-1, 0, 1)
    return [ParameterPoint(c0=a, c1=b, a5=c) for a in vals for b in vals for c in vals]


DESIGNATED_POINTS = (
    ParameterPoint(),
    ParameterPoint(c0=1, a5=1),
    ParameterPoint(a5=1),
    ParameterPoint(c0=1, c1=1, d7=1, b6=1),
)
