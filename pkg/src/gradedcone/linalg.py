"""Fraction-free sparse Gaussian elimination over Q.

Vectors are dicts ``column -> number``.  Rows are kept primitive over Z
(content divided out after every elimination step), so all arithmetic is
on Python integers.  Each stored row remembers the integer combination of
inserted vectors it equals, which gives kernels and solution witnesses.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integerize(vec):
    """Scale a rational vector to a primitive integer vector; return (ivec, scale)."""
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    out = {}
    for k, c in vec.items():
        c = c * den
        if c:
            out[k] = int(c)
    return out, den


def _content(*dicts):
    g = 0
    for d in dicts:
        for c in d.values():
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


class RowReducer:
    """Incremental echelon form with provenance.

    ``insert(vec, label)`` adds a vector.  If it is independent of what is
    stored, ``None`` is returned; otherwise the dependency is returned as a
    dict ``label -> Fraction`` with ``sum coeff * vector[label] == 0`` and the
    coefficient of ``label`` itself equal to 1.
    """

    def __init__(self, track: bool = True):
        self.track = track
        self.rows = {}  # pivot column -> (ivec, combo)
        self.scales = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, ivec, combo):
        rows = self.rows
        while True:
            hits = [c for c in ivec if c in rows]
            if not hits:
                return ivec, combo
            col = min(hits)
            rvec, rcombo = rows[col]
            a = rvec[col]
            b = ivec[col]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {}
            for k, c in ivec.items():
                new[k] = c * ma
            for k, c in rvec.items():
                s = new.get(k, 0) - c * mb
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            ivec = new
            if self.track:
                nc = {k: c * ma for k, c in combo.items()}
                for k, c in rcombo.items():
                    s = nc.get(k, 0) - c * mb
                    if s:
                        nc[k] = s
                    else:
                        nc.pop(k, None)
                combo = nc
            g = _content(ivec, combo)
            if g > 1:
                ivec = {k: c // g for k, c in ivec.items()}
                combo = {k: c // g for k, c in combo.items()}

    def _prepare(self, vec, label):
        ivec, scale = _integerize(vec)
        combo = {}
        if self.track:
            self.scales[label] = scale
            combo = {label: 1}
        return ivec, combo

    def _to_rational(self, combo):
        return {k: Fraction(c * self.scales[k]) for k, c in combo.items()}

    def insert(self, vec, label=None):
        ivec, combo = self._prepare(vec, label)
        ivec, combo = self._reduce(ivec, combo)
        if ivec:
            self.rows[min(ivec)] = (ivec, combo)
            return None
        if not self.track:
            return {}
        rat = self._to_rational(combo)
        lead = rat[label]
        return {k: c / lead for k, c in rat.items()}

    def is_independent(self, vec) -> bool:
        ivec, _ = _integerize(vec)
        saved, self.track = self.track, False
        try:
            ivec, _ = self._reduce(ivec, {})
        finally:
            self.track = saved
        return bool(ivec)

    def express(self, vec):
        """Coefficients ``label -> Fraction`` writing ``vec`` in the inserted
        vectors, or ``None`` if ``vec`` is outside their span."""
        if not self.track:
            raise ValueError("express() needs a tracking reducer")
        ivec, scale = _integerize(vec)
        target = object()
        self.scales[target] = scale
        ivec, combo = self._reduce(ivec, {target: 1})
        try:
            if ivec:
                return None
            rat = self._to_rational(combo)
        finally:
            del self.scales[target]
        lead = rat.pop(target)
        return {k: -c / lead for k, c in rat.items() if c}


def rank(vectors) -> int:
    r = RowReducer(track=False)
    for v in vectors:
        r.insert(v)
    return r.rank


def kernel(columns):
    """Basis of {x : sum_j x_j * columns[j] = 0}; each basis vector is a dict j -> Fraction."""
    r = RowReducer()
    out = []
    for j, col in enumerate(columns):
        dep = r.insert(col, j)
        if dep is not None:
            out.append(dep)
    return out
