"""Gröbner bases, normal forms, Hilbert functions and first syzygies.

Everything works on weighted-homogeneous ideals in the canonical order of
:mod:`gradedcone.poly`.  Buchberger's algorithm runs degree by degree with
Gebauer-Möller pair elimination; optionally every basis element carries its
cofactors over the input generators, which is what syzygy lifting and
ideal-membership certificates need.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import RowReducer
from .poly import (Polynomial, RationalSeries, RingMismatchError, WeightedRing,
                   series_expand)

DEFAULT_MAX_DEGREE = 16


# ------------------------------------------------------------ dict helpers

def _axpy(target: dict, c, mono, src: dict):
    """target -= c * mono * src (in place)."""
    for m, v in src.items():
        mm = tuple(x + y for x, y in zip(m, mono))
        s = target.get(mm, 0) - c * v
        if s:
            target[mm] = s
        else:
            target.pop(mm, None)


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _quo(b, a):
    return tuple(y - x for x, y in zip(a, b))


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Basis:
    """Mutable working basis used inside Buchberger and division."""

    def __init__(self, ring: WeightedRing, ngens: int, track: bool):
        self.ring = ring
        self.key = ring.key
        self.ngens = ngens
        self.track = track
        self.polys = []
        self.lms = []
        self.cofs = []

    def lead(self, p: dict):
        return max(p, key=self.key)

    def reduce(self, p: dict, cof, active, full=True, quotients=None):
        """Reduce p (in place copy) by basis elements ``active``.

        ``cof`` (list of dicts) is updated alongside when tracking; when
        ``quotients`` is a dict, the multipliers used are accumulated there.
        """
        p = dict(p)
        key = self.key
        rem = {}
        polys, lms = self.polys, self.lms
        while p:
            m = max(p, key=key)
            for k in active:
                if _divides(lms[k], m):
                    c = p[m]
                    t = _quo(m, lms[k])
                    _axpy(p, c, t, polys[k])
                    if cof is not None:
                        for i, ci in enumerate(self.cofs[k]):
                            if ci:
                                _axpy(cof[i], c, t, ci)
                    if quotients is not None:
                        q = quotients.setdefault(k, {})
                        s = q.get(t, 0) + c
                        if s:
                            q[t] = s
                        else:
                            q.pop(t)
                    break
            else:
                c = p.pop(m)
                if not full:
                    rem[m] = c
                    rem.update(p)
                    return rem
                rem[m] = c
        return rem

    def add(self, p: dict, cof):
        m = self.lead(p)
        c = p[m]
        if c != 1:
            inv = 1 / c
            p = {k: v * inv for k, v in p.items()}
            if cof is not None:
                cof = [{k: v * inv for k, v in ci.items()} for ci in cof]
        self.polys.append(p)
        self.lms.append(m)
        self.cofs.append(cof)
        return len(self.polys) - 1


def _buchberger(ring: WeightedRing, gens: Sequence[dict], track: bool):
    """Return (basis, indices of the reduced Gröbner basis)."""
    B = _Basis(ring, len(gens), track)
    deg = ring.degree_of
    key = ring.key
    zero_cof = lambda: [dict() for _ in gens]

    # work items: (degree, kind, tiebreak...); kind 0 = input generator, 1 = pair
    items = []
    for i, g in enumerate(gens):
        if g:
            items.append((deg(max(g, key=key)), 0, i, 0, None))
    active = []
    pairs = []  # (degree, i, j, lcm)

    def update(h):
        nonlocal active, pairs
        lh = B.lms[h]
        C = [(g, _lcm(lh, B.lms[g])) for g in active]
        D = []
        while C:
            g1, l1 = C.pop(0)
            if _coprime(lh, B.lms[g1]):
                D.append((g1, l1))
                continue
            if any(_divides(l2, l1) for _, l2 in C) or any(_divides(l2, l1) for _, l2 in D):
                continue
            D.append((g1, l1))
        E = [(g, l) for g, l in D if not _coprime(lh, B.lms[g])]
        kept = []
        for (d, i, j, l) in pairs:
            if (_divides(lh, l) and _lcm(B.lms[i], lh) != l and _lcm(B.lms[j], lh) != l):
                continue
            kept.append((d, i, j, l))
        for g, l in E:
            kept.append((deg(l), g, h, l))
        pairs = kept
        active = [g for g in active if not _divides(lh, B.lms[g])] + [h]

    while items or pairs:
        # pick the lowest-degree unit of work; inputs before pairs at equal degree
        best_item = min(items) if items else None
        best_pair = min(pairs, key=lambda p: (p[0], key(p[3]), p[1], p[2])) if pairs else None
        if best_item is not None and (best_pair is None or best_item[0] <= best_pair[0]):
            items.remove(best_item)
            i = best_item[2]
            p = dict(gens[i])
            cof = None
            if track:
                cof = zero_cof()
                cof[i] = {(0,) * ring.nvars: Fraction(1)}
        else:
            pairs.remove(best_pair)
            _, i, j, l = best_pair
            ti, tj = _quo(l, B.lms[i]), _quo(l, B.lms[j])
            p = {}
            _axpy(p, -1, ti, B.polys[i])
            _axpy(p, 1, tj, B.polys[j])
            cof = None
            if track:
                cof = zero_cof()
                for t, s, k in ((ti, -1, i), (tj, 1, j)):
                    for n, ck in enumerate(B.cofs[k]):
                        if ck:
                            _axpy(cof[n], s, t, ck)
        r = B.reduce(p, cof, active)
        if r:
            h = B.add(r, cof)
            update(h)

    # interreduce tails
    final = sorted(active, key=lambda k: key(B.lms[k]))
    for k in final:
        others = [j for j in final if j != k]
        p = dict(B.polys[k])
        m = B.lms[k]
        c = p.pop(m)
        cof = [dict(ci) for ci in B.cofs[k]] if track else None
        q = {} if track else None
        tail = B.reduce(p, None, others, quotients=q)
        if track:
            for j, qj in q.items():
                for t, v in qj.items():
                    for n, cj in enumerate(B.cofs[j]):
                        if cj:
                            _axpy(cof[n], v, t, cj)
        tail[m] = c
        B.polys[k] = tail
        if track:
            B.cofs[k] = cof
    final.sort(key=lambda k: key(B.lms[k]), reverse=True)
    return B, final


# ------------------------------------------------------------ ideals

class GradedIdeal:
    """Homogeneous ideal with a lazily computed reduced Gröbner basis."""

    def __init__(self, ring: WeightedRing, generators: Sequence[Polynomial], check: bool = True):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator in {g.ring}, ideal in {ring}")
            if check and not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator {g} (degrees {sorted(g.degrees())})")
            gens.append(g)
        self.generators = tuple(gens)
        self._gb = None
        self._tracked = None
        self._nf = None

    @property
    def degrees(self) -> tuple:
        return tuple(g.degree() if g else None for g in self.generators)

    def _tracked_basis(self):
        if self._tracked is None:
            self._tracked = _buchberger(self.ring, [g.terms for g in self.generators], True)
        return self._tracked

    def groebner_basis(self) -> list:
        if self._gb is None:
            if self._tracked is not None:
                B, idx = self._tracked
            else:
                B, idx = _buchberger(self.ring, [g.terms for g in self.generators], False)
            self._gb = [Polynomial(self.ring, dict(B.polys[k])) for k in idx]
        return self._gb

    def leading_monomials(self) -> list:
        return [g.lm() for g in self.groebner_basis()]

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatchError(f"{p.ring} vs {self.ring}")
        B = self._reducer()
        return Polynomial(self.ring, B.reduce(p.terms, None, range(len(B.polys))))

    def _reducer(self) -> _Basis:
        if self._nf is None:
            B = _Basis(self.ring, 0, False)
            for g in self.groebner_basis():
                B.polys.append(g.terms)
                B.lms.append(g.lm())
            self._nf = B
        return self._nf

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def lift(self, p: Polynomial):
        """Cofactors (c_1..c_m) with p = sum c_i f_i, or None if p is not in the ideal."""
        B, idx = self._tracked_basis()
        q = {}
        r = B.reduce(p.terms, None, idx, quotients=q)
        if r:
            return None
        out = [dict() for _ in self.generators]
        for k, qk in q.items():
            for t, v in qk.items():
                for n, ck in enumerate(B.cofs[k]):
                    if ck:
                        _axpy(out[n], -v, t, ck)
        return [Polynomial(self.ring, c) for c in out]

    def hilbert_function(self, d_max: int) -> RationalSeries:
        return hilbert_function(self, d_max)

    def __repr__(self):
        return f"GradedIdeal({self.ring!r}, {len(self.generators)} generators)"


def groebner_basis(I: GradedIdeal) -> list:
    return I.groebner_basis()


def normal_form(p: Polynomial, I: GradedIdeal) -> Polynomial:
    return I.normal_form(p)


def ideal_contains(I: GradedIdeal, p: Polynomial) -> bool:
    if p.ring != I.ring:
        raise RingMismatchError(f"{p.ring} vs {I.ring}")
    return I.contains(p)


def ideals_equal(I: GradedIdeal, J: GradedIdeal) -> bool:
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")
    return all(J.contains(g) for g in I.generators) and all(I.contains(g) for g in J.generators)


def _standard_monomials(ring, lms, d):
    return [m for m in ring.monomials_of_degree(d) if not any(_divides(l, m) for l in lms)]


def quotient_basis(I: GradedIdeal, d: int) -> list:
    """Monomials of degree d outside the leading-term ideal, largest first."""
    if d < 0:
        return []
    return _standard_monomials(I.ring, I.leading_monomials(), d)


def hilbert_function(I: GradedIdeal, d_max: int) -> RationalSeries:
    lms = I.leading_monomials()
    return RationalSeries(tuple(len(_standard_monomials(I.ring, lms, d)) for d in range(d_max + 1)))


def hilbert_series_ci(weights: Sequence[int], relation_degrees: Sequence[int], d_max: int) -> RationalSeries:
    return RationalSeries(tuple(series_expand(weights, relation_degrees, d_max)))


def graded_piece_dim_of_ideal(I: GradedIdeal, d: int) -> int:
    if d < 0:
        raise ValueError("degree must be non-negative")
    total = len(I.ring.monomials_of_degree(d))
    return total - len(quotient_basis(I, d))


# ------------------------------------------------------------ syzygies

@dataclass(frozen=True)
class SyzygyVector:
    coefficients: tuple
    degree: int

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __iter__(self):
        return iter(self.coefficients)


def make_syzygy(generators: Sequence[Polynomial], coefficients: Sequence[Polynomial]) -> SyzygyVector:
    """Wrap coefficients as a syzygy, inferring its degree from the nonzero entries."""
    d = None
    for g, l in zip(generators, coefficients):
        if l and g:
            dl = l.degree()
            if dl is None:
                raise ValueError(f"inhomogeneous syzygy entry {l}")
            if d is None:
                d = dl + g.degree()
            elif d != dl + g.degree():
                raise ValueError("syzygy entries of inconsistent degree")
    return SyzygyVector(tuple(coefficients), d if d is not None else 0)


def pairing(generators: Sequence[Polynomial], coefficients: Sequence[Polynomial]) -> Polynomial:
    if len(generators) != len(coefficients):
        raise ValueError("syzygy length does not match generator count")
    ring = generators[0].ring
    acc = {}
    for g, l in zip(generators, coefficients):
        if not l or not g:
            continue
        for m1, c1 in l.terms.items():
            _axpy(acc, -c1, m1, g.terms)
    return Polynomial(ring, acc)


def verify_syzygy(generators: Sequence[Polynomial], s) -> bool:
    coeffs = s.coefficients if isinstance(s, SyzygyVector) else s
    return pairing(generators, coeffs).is_zero()


class _GradedModuleCoords:
    """Coordinates for degree-d pieces of a free module sum_i ring(-e_i)."""

    def __init__(self):
        self.index = {}

    def col(self, i, mono):
        k = (i, mono)
        c = self.index.get(k)
        if c is None:
            c = len(self.index)
            self.index[k] = c
        return c

    def vector(self, coeff_dicts, shift=None):
        out = {}
        for i, d in enumerate(coeff_dicts):
            for m, v in d.items():
                if shift is not None:
                    m = tuple(x + y for x, y in zip(m, shift))
                out[self.col(i, m)] = v
        return out


def _minimalize(ring, candidates, d_max=None):
    """Keep a minimal generating subset (degree by degree) of homogeneous vectors.

    ``candidates`` is a list of (degree, list-of-dicts).  A candidate is kept
    when it is not in the span of monomial multiples of the lower-degree
    survivors plus the same-degree survivors already kept.
    """
    kept = []
    by_deg = {}
    for d, vec in candidates:
        if any(vec) and (d_max is None or d <= d_max):
            by_deg.setdefault(d, []).append(vec)
    for d in sorted(by_deg):
        coords = _GradedModuleCoords()
        red = RowReducer(track=False)
        for dk, vk in kept:
            for t in ring.monomials_of_degree(d - dk):
                red.insert(coords.vector(vk, t))
        for vec in by_deg[d]:
            v = coords.vector(vec)
            if red.is_independent(v):
                red.insert(v)
                kept.append((d, vec))
    return kept


def syzygy_module(generators: Sequence[Polynomial], d_max: int | None = None) -> list:
    """Minimal homogeneous generators of the first syzygy module.

    Schreyer-style: every S-pair of the reduced Gröbner basis reduces to zero
    with recorded quotients, giving syzygies among basis elements; these are
    pulled back along the cofactor matrix, joined with the relations coming
    from writing each generator in the basis, and minimalized degreewise.
    """
    gens = list(generators)
    if not gens:
        return []
    ring = gens[0].ring
    I = GradedIdeal(ring, gens)
    B, idx = I._tracked_basis()
    m = len(gens)
    deg = ring.degree_of
    gdeg = [g.degree() if g else 0 for g in gens]
    cands = []

    def pull_back(gcoeffs):
        # gcoeffs: dict basis index -> dict poly; returns list of m dicts
        out = [dict() for _ in range(m)]
        for k, pk in gcoeffs.items():
            for t, v in pk.items():
                for n, ck in enumerate(B.cofs[k]):
                    if ck:
                        _axpy(out[n], -v, t, ck)
        return out

    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            l = _lcm(B.lms[i], B.lms[j])
            if d_max is not None and deg(l) > d_max:
                continue
            ti, tj = _quo(l, B.lms[i]), _quo(l, B.lms[j])
            s = {}
            _axpy(s, -1, ti, B.polys[i])
            _axpy(s, 1, tj, B.polys[j])
            q = {}
            r = B.reduce(s, None, idx, quotients=q)
            assert not r, "S-polynomial did not reduce to zero"
            gco = {i: {ti: Fraction(1)}, j: {tj: Fraction(-1)}}
            for k, qk in q.items():
                d = gco.setdefault(k, {})
                for t, v in qk.items():
                    x = d.get(t, 0) - v
                    if x:
                        d[t] = x
                    else:
                        d.pop(t, None)
            cands.append((deg(l), pull_back(gco)))

    for n, g in enumerate(gens):
        if not g:
            unit = [dict() for _ in range(m)]
            unit[n] = {(0,) * ring.nvars: Fraction(1)}
            cands.append((0, unit))
            continue
        q = {}
        r = B.reduce(g.terms, None, idx, quotients=q)
        assert not r
        # g_n = sum q_k G_k, so sum_k q_k A_k - e_n is a syzygy
        vec = pull_back(q)
        one = (0,) * ring.nvars
        x = vec[n].get(one, 0) - 1
        if x:
            vec[n][one] = x
        else:
            vec[n].pop(one, None)
        cands.append((gdeg[n], vec))

    cands.sort(key=lambda c: c[0])
    kept = _minimalize(ring, cands, d_max)
    out = []
    for d, vec in kept:
        coeffs = tuple(Polynomial(ring, v) for v in vec)
        out.append(SyzygyVector(coeffs, d))
    return out


def syzygy_space_dims(generators: Sequence[Polynomial], d_max: int) -> list:
    """dim {(l_i) : sum l_i f_i = 0} in each degree 0..d_max, by brute-force kernel ranks."""
    ring = generators[0].ring
    gdeg = [g.degree() for g in generators]
    out = []
    for d in range(d_max + 1):
        red = RowReducer(track=False)
        n = 0
        for g, e in zip(generators, gdeg):
            for t in ring.monomials_of_degree(d - e) if d >= e else []:
                n += 1
                red.insert({ring.key(m): c for m, c in g.mul_term(t, 1).terms.items()})
        out.append(n - red.rank)
    return out


def module_span_dims(syzygies: Sequence[SyzygyVector], d_max: int) -> list:
    """Degreewise dimensions of the submodule generated by the given vectors."""
    if not syzygies:
        return [0] * (d_max + 1)
    ring = syzygies[0].coefficients[0].ring
    out = []
    for d in range(d_max + 1):
        coords = _GradedModuleCoords()
        red = RowReducer(track=False)
        for s in syzygies:
            if s.degree > d:
                continue
            vec = [c.terms for c in s.coefficients]
            for t in ring.monomials_of_degree(d - s.degree):
                red.insert(coords.vector(vec, t))
        out.append(red.rank)
    return out


def minimal_generators(polys: Sequence[Polynomial]) -> list:
    """Indices of a minimal homogeneous generating subset, scanned by degree."""
    ring = polys[0].ring
    order = sorted((p.degree(), i) for i, p in enumerate(polys) if p)
    kept = []
    for _, i in order:
        if kept and GradedIdeal(ring, [polys[k] for k in kept]).contains(polys[i]):
            continue
        kept.append(i)
    return sorted(kept)
