"""Pfaffian formats, the Veronese rewriting and the ring R(C,2Q).

Index conventions are 1-based where they mirror matrix positions, so that
``SkewMatrix.entry(1, 2)`` is the (1,2) entry.  The sign/order tables
``EXTRASYMMETRIC_PFAFFIANS`` and ``MV_RELATIONS`` are the single source of
truth for which pfaffian is called f_i / g_i.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .groebner import GradedIdeal, make_syzygy
from .poly import Polynomial, WeightedRing

RING_A = WeightedRing(("x2", "y", "z1", "z2", "u", "v"), (1, 2, 3, 3, 4, 5))
RING_B = WeightedRing(("x1", "x2", "y", "z1", "z2", "u", "v"), (1, 1, 2, 3, 3, 4, 5))
RING_CURVE = WeightedRing(("xi", "eta", "zeta"), (1, 3, 5))
RING_CI = WeightedRing(("x1", "x2", "y", "z1", "z2"), (1, 1, 2, 3, 3))
RING_PLANE = WeightedRing(("x1", "x2", "y", "z1"), (1, 1, 2, 3))

# generic extrasymmetric ring; weights make every 4x4 pfaffian homogeneous
RING_EXTRASYM = WeightedRing(
    tuple(f"n{i}" for i in range(1, 10)) + ("a", "b"),
    (2, 2, 2, 3, 3, 2, 2, 3, 2, 1, 1),
)
MV_ENTRIES = ("m12", "m13", "m14", "m15", "m23", "m24", "m25", "m34", "m35", "m45")
RING_MV = WeightedRing(MV_ENTRIES + tuple(f"v{i}" for i in range(1, 6)), (1,) * 15)

RC2Q_DEGREES = (4, 5, 6, 6, 7, 8, 8, 9, 10)


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------- matrices

class SkewMatrix:
    """Skew-symmetric matrix stored by its strict upper triangle."""

    def __init__(self, ring: WeightedRing, n: int, upper: Mapping):
        self.ring = ring
        self.n = n
        self._upper = {}
        for (i, j), p in upper.items():
            if not (1 <= i < j <= n):
                raise ValueError(f"entry ({i},{j}) is not strictly upper triangular")
            if not isinstance(p, Polynomial):
                p = ring.const(p)
            self._upper[(i, j)] = p

    @classmethod
    def from_rows(cls, ring, rows: Sequence[Sequence]) -> "SkewMatrix":
        """Build from the upper-triangle rows as displayed: row i lists (i,i+1)..(i,n)."""
        n = len(rows) + 1
        upper = {}
        for i, row in enumerate(rows, start=1):
            if len(row) != n - i:
                raise ValueError(f"row {i} should have {n - i} entries")
            for k, p in enumerate(row):
                upper[(i, i + 1 + k)] = p
        return cls(ring, n, upper)

    def entry(self, i: int, j: int) -> Polynomial:
        if i == j:
            return self.ring.zero()
        if i < j:
            return self._upper.get((i, j), self.ring.zero())
        return -self._upper.get((j, i), self.ring.zero())

    def map(self, fn) -> "SkewMatrix":
        return SkewMatrix(self.ring, self.n, {k: fn(p) for k, p in self._upper.items()})

    def pfaffian_of(self, indices: Sequence[int]) -> Polynomial:
        """Pfaffian of the principal submatrix on ``indices`` (expansion along the first row)."""
        idx = list(indices)
        if len(idx) % 2:
            return self.ring.zero()
        if not idx:
            return self.ring.one()
        first, rest = idx[0], idx[1:]
        total = self.ring.zero()
        for k, j in enumerate(rest):
            e = self.entry(first, j)
            if e.is_zero():
                continue
            minor = rest[:k] + rest[k + 1:]
            term = e * self.pfaffian_of(minor)
            total = total - term if k % 2 else total + term
        return total

    def pfaffian(self) -> Polynomial:
        return self.pfaffian_of(range(1, self.n + 1))

    def times_vector(self, vec: Sequence[Polynomial]) -> list:
        return [sum((self.entry(i, j) * vec[j - 1] for j in range(1, self.n + 1)), self.ring.zero())
                for i in range(1, self.n + 1)]


def pfaffian4(M: SkewMatrix) -> Polynomial:
    if M.n != 4:
        raise ValueError(f"pfaffian4 needs a 4x4 matrix, got {M.n}x{M.n}")
    e = M.entry
    return e(1, 2) * e(3, 4) - e(1, 3) * e(2, 4) + e(1, 4) * e(2, 3)


def pfaffians4_of(M: SkewMatrix) -> dict:
    """4x4 pfaffians keyed by what was deleted: an index (n=5) or a pair (n=6)."""
    if M.n == 5:
        return {i: M.pfaffian_of([k for k in range(1, 6) if k != i]) for i in range(1, 6)}
    if M.n == 6:
        return {pair: M.pfaffian_of([k for k in range(1, 7) if k not in pair])
                for pair in combinations(range(1, 7), 2)}
    raise ValueError(f"pfaffians4_of needs n in (5, 6), got {M.n}")


# ---------------------------------------------------------------- extrasymmetric

# f_i is +pf of the 6x6 extrasymmetric matrix with this (1-based) pair deleted.
EXTRASYMMETRIC_PFAFFIANS = (
    ((3, 4), 1),
    ((3, 5), 1),
    ((3, 6), 1),
    ((2, 5), 1),
    ((1, 5), 1),
    ((1, 6), 1),
    ((4, 5), 1),
    ((4, 6), 1),
    ((5, 6), 1),
)

# the remaining six, as (deleted pair, multiplier monomial in a, b, index of f)
EXTRASYMMETRIC_REPEATS = (
    ((1, 2), (1, 1), 9),
    ((1, 3), (0, 1), 8),
    ((1, 4), (1, 0), 3),
    ((2, 3), (0, 1), 7),
    ((2, 4), (1, 0), 2),
    ((2, 6), (0, 0), 5),
)


@dataclass(frozen=True)
class ExtrasymmetricData:
    n: tuple  # n1..n9
    a: Polynomial
    b: Polynomial

    @property
    def ring(self):
        return self.a.ring

    def matrix(self) -> SkewMatrix:
        n1, n2, n3, n4, n5, n6, n7, n8, n9 = self.n
        a, b = self.a, self.b
        rows = [
            [n1, n2, n3, n4, n5],
            [n6, n7, n8, n4],
            [n9, a * n7, a * n3],
            [b * n6, b * n2],
            [a * b * n1],
        ]
        return SkewMatrix.from_rows(self.ring, rows)


def generic_extrasymmetric() -> ExtrasymmetricData:
    R = RING_EXTRASYM
    return ExtrasymmetricData(tuple(R.var(f"n{i}") for i in range(1, 10)), R.var("a"), R.var("b"))


def extrasymmetric_generators(E: ExtrasymmetricData) -> list:
    M = E.matrix()
    out = []
    for pair, sign in EXTRASYMMETRIC_PFAFFIANS:
        p = M.pfaffian_of([k for k in range(1, 7) if k not in pair])
        if sign < 0:
            p = -p
        if not p.is_homogeneous():
            raise FormatError(f"inhomogeneous assembly: pfaffian deleting {pair} is {p}")
        out.append(p)
    return out


def extrasymmetric_from_entries(ring, A, B, D) -> ExtrasymmetricData:
    """The matrix N of R(C,2Q) (a=1, b=0) with corner entries A, B, D."""
    g = ring.var
    return ExtrasymmetricData(
        (A, B, g("z1"), g("y"), g("x2"), D, g("u"), g("z2"), g("v")), ring.one(), ring.zero())


def extrasymmetric_specialization(ring, A, B, D) -> dict:
    """Images of n1..n9, a, b under the specialization to N."""
    E = extrasymmetric_from_entries(ring, A, B, D)
    images = {f"n{i}": p for i, p in enumerate(E.n, start=1)}
    images["a"] = E.a
    images["b"] = E.b
    return images


# ---------------------------------------------------------------- MV format

@dataclass(frozen=True)
class MVData:
    M: SkewMatrix
    V: tuple

    def symbols(self) -> dict:
        out = {f"m{i}{j}": self.M.entry(i, j) for i, j in combinations(range(1, 6), 2)}
        out.update({f"v{i}": self.V[i - 1] for i in range(1, 6)})
        return out


def mv_generators(D: MVData) -> list:
    """g1..g5 are signed 4x4 pfaffians, g6..g10 the entries of M*V."""
    M = D.M
    pf = [M.pfaffian_of([k for k in range(1, 6) if k != i]) for i in range(1, 6)]
    pf = [p if i % 2 == 0 else -p for i, p in enumerate(pf, start=1)]
    return pf + M.times_vector(D.V)


# relation r: sum over (sign, symbol, g index) of sign * symbol * g_index = 0
MV_RELATIONS = (
    ((1, "m12", 2), (1, "m13", 3), (1, "m14", 4), (1, "m15", 5)),
    ((-1, "m12", 1), (1, "m23", 3), (1, "m24", 4), (1, "m25", 5)),
    ((-1, "m13", 1), (-1, "m23", 2), (1, "m34", 4), (1, "m35", 5)),
    ((-1, "m14", 1), (-1, "m24", 2), (-1, "m34", 3), (1, "m45", 5)),
    ((-1, "m15", 1), (-1, "m25", 2), (-1, "m35", 3), (-1, "m45", 4)),
    ((1, "v5", 4), (-1, "v4", 5), (-1, "m23", 6), (1, "m13", 7), (-1, "m12", 8)),
    ((-1, "v5", 3), (1, "v3", 5), (-1, "m24", 6), (1, "m14", 7), (-1, "m12", 9)),
    ((-1, "v5", 2), (1, "v2", 5), (1, "m34", 6), (-1, "m14", 8), (1, "m13", 9)),
    ((-1, "v5", 1), (1, "v1", 5), (-1, "m34", 7), (1, "m24", 8), (-1, "m23", 9)),
    ((1, "v4", 3), (-1, "v3", 4), (-1, "m25", 6), (1, "m15", 7), (-1, "m12", 10)),
    ((-1, "v3", 2), (1, "v2", 3), (1, "m45", 6), (-1, "m15", 9), (1, "m14", 10)),
    ((1, "v4", 1), (-1, "v1", 4), (-1, "m35", 7), (1, "m25", 8), (-1, "m23", 10)),
    ((-1, "v3", 1), (1, "v1", 3), (-1, "m45", 7), (1, "m25", 9), (-1, "m24", 10)),
    ((1, "v2", 1), (-1, "v1", 2), (-1, "m45", 8), (1, "m35", 9), (-1, "m34", 10)),
    ((1, "v4", 2), (-1, "v2", 4), (1, "m35", 6), (-1, "m15", 8), (1, "m13", 10)),
    ((1, "v1", 6), (1, "v2", 7), (1, "v3", 8), (1, "v4", 9), (1, "v5", 10)),
)


def mv_relation_vectors(D: MVData) -> list:
    """The 16 relations as coefficient vectors over (g1..g10)."""
    s = D.symbols()
    ring = D.M.ring
    out = []
    for rel in MV_RELATIONS:
        vec = [ring.zero()] * 10
        for sign, sym, k in rel:
            vec[k - 1] = vec[k - 1] + (s[sym] if sign > 0 else -s[sym])
        out.append(vec)
    return out


def generic_mv() -> MVData:
    R = RING_MV
    M = SkewMatrix(R, 5, {(int(e[1]), int(e[2])): R.var(e) for e in MV_ENTRIES})
    return MVData(M, tuple(R.var(f"v{i}") for i in range(1, 6)))


def mv_example(ring=RING_A, B=None, D=None) -> MVData:
    """The MV presentation of R(C,2Q) with A = v."""
    g = ring.var
    B = g("z2") ** 2 if B is None else B
    D = ring.zero() if D is None else D
    M = SkewMatrix.from_rows(ring, [
        [g("v"), g("u"), g("z2"), D],
        [g("z1"), g("y"), B],
        [0, g("v")],
        [g("u")],
    ])
    return MVData(M, (g("x2"), -g("y"), g("z1"), ring.zero(), ring.zero()))


# image of g_k in the example, as (sign, index of f)
MV_EXAMPLE_IMAGES = ((1, 5), (-1, 6), (-1, 8), (1, 9), (1, 3), (-1, 5), (-1, 4), (-1, 2), (-1, 1), (-1, 7))


# ---------------------------------------------------------------- R(C,2Q)

def rc2q_generators(D: Polynomial | None = None, A: Polynomial | None = None,
                    B: Polynomial | None = None, ring: WeightedRing = RING_A) -> list:
    g = ring.var
    x2, y, z1, z2, u, v = (g(n) for n in ("x2", "y", "z1", "z2", "u", "v"))
    A = v if A is None else A
    B = z2 ** 2 if B is None else B
    D = ring.zero() if D is None else D
    for name, p, d in (("A", A, 5), ("B", B, 6), ("D", D, 7)):
        if p.ring != ring:
            raise FormatError(f"{name} lives in {p.ring}, expected {ring}")
        if p and p.degree() != d:
            raise FormatError(f"{name} must be homogeneous of degree {d}, got {p}")
    return [
        x2 * z2 - y ** 2,
        x2 * u - y * z1,
        y * u - z1 * z2,
        x2 * v - z1 ** 2,
        y * v - z1 * u,
        z2 * v - u ** 2,
        z1 * A - y * B + x2 * D,
        u * A - z2 * B + y * D,
        v * A - u * B + z1 * D,
    ]


def build_rc2q(D: Polynomial | None = None, ring: WeightedRing = RING_A) -> GradedIdeal:
    """The ideal (f1..f9) with A = v, B = z2^2 and the given D of degree 7."""
    return GradedIdeal(ring, rc2q_generators(D, ring=ring))


def rc2q_syzygy_table(D=None, A=None, B=None, ring: WeightedRing = RING_A) -> list:
    """The sixteen relations sigma_1..sigma_16 as coefficient tuples over f1..f9."""
    g = ring.var
    x2, y, z1, z2, u, v = (g(n) for n in ("x2", "y", "z1", "z2", "u", "v"))
    A = v if A is None else A
    B = z2 ** 2 if B is None else B
    D = ring.zero() if D is None else D
    table = [
        {1: -z1, 2: y, 3: -x2},
        {1: -u, 2: z2, 3: -y},
        {2: z1, 4: -y, 5: x2},
        {1: v, 3: z1, 4: -z2, 5: y},
        {1: v, 2: -u, 5: y, 6: -x2},
        {2: v, 4: -u, 5: z1},
        {3: -u, 5: z2, 6: -y},
        {3: -v, 5: u, 6: -z1},
        {1: B, 2: -A, 7: -y, 8: x2},
        {2: -B, 4: A, 7: z1, 9: -x2},
        {1: D, 3: -A, 7: -z2, 8: y},
        {3: B, 5: -A, 8: -z1, 9: y},
        {2: -D, 5: A, 7: u, 9: -y},
        {3: D, 6: -A, 8: -u, 9: z2},
        {4: -D, 5: B, 7: v, 9: -z1},
        {5: D, 6: -B, 8: -v, 9: u},
    ]
    return [tuple(row.get(i, ring.zero()) for i in range(1, 10)) for row in table]


def rc2q_syzygies(D=None, ring: WeightedRing = RING_A) -> list:
    gens = rc2q_generators(D, ring=ring)
    return [make_syzygy(gens, row) for row in rc2q_syzygy_table(D, ring=ring)]


SIGMA_DEGREES = (7, 8, 8, 9, 9, 10, 10, 11, 10, 11, 11, 12, 12, 13, 13, 14)
FIVE_SYZYGIES = (1, 3, 5, 9, 10)


def sample_d(rng: random.Random, ring: WeightedRing = RING_A) -> Polynomial:
    """A 'general' D = y*D_y + z1*D_z1 + d02*z2*u with zero x2^7 coefficient.

    D_y uses only x2, y and D_z1 only x2, y, z1, matching the decomposition
    convention used for the degree-0 deformation class.
    """
    g = ring.var
    iy, iz1 = ring.index("y"), ring.index("z1")
    only = lambda allowed: (lambda m: all(e == 0 or ring.variables[i] in allowed for i, e in enumerate(m)))
    from .poly import random_polynomial
    Dy = random_polynomial(ring, 5, rng, monomial_filter=only({"x2", "y"}))
    Dz1 = random_polynomial(ring, 4, rng, monomial_filter=only({"x2", "y", "z1"}))
    d02 = rng.randint(-9, 9)
    return g("y") * Dy + g("z1") * Dz1 + g("z2") * g("u") * d02


# ---------------------------------------------------------------- Veronese

_PAIR_NAMES = {
    ("xi", "xi"): "x2", ("xi", "eta"): "y", ("xi", "zeta"): "z1",
    ("eta", "eta"): "z2", ("eta", "zeta"): "u", ("zeta", "zeta"): "v",
}


def veronese_ideal(ring: WeightedRing = RING_A) -> GradedIdeal:
    """2x2 minors of the symmetric matrix [[x2,y,z1],[y,z2,u],[z1,u,v]]."""
    return GradedIdeal(ring, rc2q_generators(ring=ring)[:6])


def veronese_rewrite(p: Polynomial, ring: WeightedRing = RING_A) -> Polynomial:
    """Write an even polynomial in xi, eta, zeta in the quadratic monomials of ``ring``.

    Each monomial is split into consecutive pairs of its sorted factors; the
    result is then put in normal form modulo the Veronese relations.
    """
    names = p.ring.variables
    if set(names) != {"xi", "eta", "zeta"}:
        raise FormatError(f"expected a polynomial in xi, eta, zeta, got {p.ring}")
    order = ("xi", "eta", "zeta")
    terms = {}
    out = ring.zero()
    for m, c in p.terms.items():
        factors = []
        for name in order:
            factors += [name] * m[names.index(name)]
        if len(factors) % 2:
            raise FormatError(f"monomial {p.ring.monomial(m)} has odd total degree")
        e = [0] * ring.nvars
        for k in range(0, len(factors), 2):
            e[ring.index(_PAIR_NAMES[(factors[k], factors[k + 1])])] += 1
        out = out + ring.monomial(e, c)
    return veronese_ideal(ring).normal_form(out)


def veronese_pullback(p: Polynomial) -> Polynomial:
    """Substitute x2 = xi^2, y = xi*eta, ... back into the curve ring."""
    C = RING_CURVE
    xi, eta, zeta = C.gens()
    images = {"x2": xi * xi, "y": xi * eta, "z1": xi * zeta,
              "z2": eta * eta, "u": eta * zeta, "v": zeta * zeta}
    return p.substitute({k: v for k, v in images.items() if k in p.ring.variables}, C)


# ---------------------------------------------------------------- families

def _check_degree(name, p, d):
    if p and p.degree() != d:
        raise FormatError(f"{name} must be homogeneous of degree {d}, got {p}")


def family_e(A: Polynomial, B: Polynomial, D: Polynomial, ring: WeightedRing = RING_B) -> GradedIdeal:
    """Pfaffian family: the nine pfaffians of N with corner entries A, B, D."""
    for name, p, d in (("A", A, 5), ("B", B, 6), ("D", D, 7)):
        _check_degree(name, p, d)
    return GradedIdeal(ring, extrasymmetric_generators(extrasymmetric_from_entries(ring, A, B, D)))


DECOMPOSITION_ORDER = ("v", "u", "z2", "z1", "y")


@dataclass(frozen=True)
class Decomposition:
    """p = v*p_v + u*p_u + z2*p_z2 + z1*p_z1 + y*p_y + p_x with each part using
    only variables no heavier than its label."""
    parts: dict = field(compare=False)
    source: Polynomial

    def __getitem__(self, label) -> Polynomial:
        return self.parts[label]

    def recombine(self) -> Polynomial:
        ring = self.source.ring
        total = self.parts["x"]
        for label in DECOMPOSITION_ORDER:
            total = total + ring.var(label) * self.parts[label]
        return total


def decompose(p: Polynomial) -> Decomposition:
    ring = p.ring
    parts = {label: {} for label in DECOMPOSITION_ORDER + ("x",)}
    idx = {label: ring.index(label) for label in DECOMPOSITION_ORDER}
    for m, c in p.terms.items():
        for label in DECOMPOSITION_ORDER:
            i = idx[label]
            if m[i]:
                e = list(m)
                e[i] -= 1
                parts[label][tuple(e)] = c
                break
        else:
            parts["x"][m] = c
    return Decomposition({k: Polynomial(ring, v) for k, v in parts.items()}, p)


def check_decomposition(dec: Decomposition):
    """Re-derive the source from the parts and enforce the variable rule."""
    ring = dec.source.ring
    if dec.recombine() != dec.source:
        raise FormatError("decomposition does not recombine to its source")
    allowed = ["x1", "x2"]
    for label in ("x", "y", "z1", "z2", "u", "v"):
        if label != "x":
            allowed.append(label)
        extra = dec.parts[label].variables_used() - set(allowed)
        if extra:
            raise FormatError(f"part {label} uses {sorted(extra)}")


@dataclass
class FamilyFResult:
    in_T: bool
    components: list
    message: str
    generators: list | None = None
    ideal: GradedIdeal | None = None
    first_row_coincide: bool | None = None
    matrices: MVData | None = None


def _divides_poly(a: Polynomial, b: Polynomial) -> bool:
    if a.is_zero():
        return b.is_zero()
    return GradedIdeal(a.ring, [a]).contains(b)


def family_f_matrices(c0, c1, c2, B: Decomposition, D: Decomposition, ring=RING_B) -> MVData:
    g = ring.var
    x1, x2, y, z1, z2, u, v = (g(n) for n in ring.variables)
    l = x1 * c1 + x2 * c2
    M = SkewMatrix.from_rows(ring, [
        [v, u, z2, D.source],
        [z1, y, B.source],
        [l, v + l * B["y"] - D["y"] * c0],
        [u - l * B["z1"] + D["z1"] * c0],
    ])
    V = (
        x2,
        -y + l * B["v"] - D["v"] * c0,
        z1 + l * B["u"] - D["u"] * c0,
        l * B["z2"] - D["z2"] * c0,
        ring.const(c0),
    )
    return MVData(M, V)


def family_f(c0, c1, c2, B, D, ring: WeightedRing = RING_B) -> FamilyFResult:
    """MV family: pfaffians of the corrected M and entries of M*V, gated by c0*D_x = l*B_x."""
    Bd = B if isinstance(B, Decomposition) else decompose(B)
    Dd = D if isinstance(D, Decomposition) else decompose(D)
    check_decomposition(Bd)
    check_decomposition(Dd)
    _check_degree("B", Bd.source, 6)
    _check_degree("D", Dd.source, 7)
    l = ring.var("x1") * c1 + ring.var("x2") * c2
    holds = (Dd["x"] * c0) == (l * Bd["x"])
    comps = []
    if holds:
        if c0 != 0:
            comps.append("T1")
        if c0 == 0 and c1 == 0 and c2 == 0:
            comps.append("T2")
            if _divides_poly(Bd["x"], Dd["x"]):
                comps.append("T1")
        if c0 == 0 and Bd["x"].is_zero():
            comps.append("T3")
            if not l.is_zero() and _divides_poly(l, Dd["x"]) and "T1" not in comps:
                comps.append("T1")
    if not holds:
        return FamilyFResult(False, [], "outside T: c0*D_x != l*B_x")
    data = family_f_matrices(c0, c1, c2, Bd, Dd, ring)
    gens = mv_generators(data)
    coincide = gens[0] == -gens[5]
    return FamilyFResult(True, sorted(set(comps)), "in T", gens, GradedIdeal(ring, gens),
                         coincide, data)


def solve_linear_variable(gen: Polynomial, name: str):
    """If gen = c*name + rest with rest free of ``name``, return -rest/c."""
    i = gen.ring.index(name)
    lin = {}
    rest = {}
    for m, c in gen.terms.items():
        if m[i] == 0:
            rest[m] = c
        elif m[i] == 1 and sum(m) == 1:
            lin[m] = c
        else:
            return None
    if len(lin) != 1:
        return None
    (c,) = lin.values()
    return Polynomial(gen.ring, rest).scale(-1 / c)


def eliminate_u_v(gens: Sequence[Polynomial], target: WeightedRing = RING_CI):
    """Use generators linear in u and v to eliminate them; returns the remaining
    generators mapped into ``target`` (variables x1, x2, y, z1, z2)."""
    gens = list(gens)
    for name in ("u", "v"):
        for k, g in enumerate(gens):
            sol = solve_linear_variable(g, name)
            if sol is not None:
                gens = [h.substitute({name: sol}) for j, h in enumerate(gens) if j != k]
                break
        else:
            raise FormatError(f"no generator is linear in {name}")
    images = {n: target.var(n) for n in target.variables}
    src = gens[0].ring
    images.update({n: target.zero() for n in src.variables if n not in target.variables})
    out = []
    for g in gens:
        if g.variables_used() - set(target.variables):
            raise FormatError(f"generator {g} still involves eliminated variables")
        h = g.substitute(images, target)
        if h:
            out.append(h)
    return out
