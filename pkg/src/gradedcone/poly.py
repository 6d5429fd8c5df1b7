"""Sparse multivariate polynomials over Q on weighted-graded rings.

Monomials are exponent tuples aligned with the ring's variable order.  The
canonical monomial order compares weighted degree first and breaks ties by
reverse lexicographic comparison on the fixed variable order (the monomial
with the smaller exponent in the last differing variable is larger).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...]


class RingMismatchError(ValueError):
    pass


class ZeroPolynomialError(ValueError):
    """Raised when asking for the degree of the zero polynomial."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class WeightedRing:
    variables: tuple
    weights: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _keys: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.variables) != len(self.weights):
            raise ValueError("one weight per variable required")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        for name in self.variables:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
                raise ValueError(f"bad variable name {name!r}")
        if any(w <= 0 for w in self.weights):
            raise ValueError(f"weights must be positive, got {self.weights}")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.variables)})
        object.__setattr__(self, "_keys", {})

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self._index[name]

    def degree_of(self, mono: Monomial) -> int:
        return sum(e * w for e, w in zip(mono, self.weights))

    def key(self, mono: Monomial):
        """Sort key of the canonical order: larger key means larger monomial."""
        k = self._keys.get(mono)
        if k is None:
            k = (self.degree_of(mono),) + tuple(-e for e in reversed(mono))
            self._keys[mono] = k
        return k

    # constructors
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list:
        return [self.var(v) for v in self.variables]

    def monomial(self, mono: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(mono): Fraction(coeff)} if coeff else {})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def monomials_of_degree(self, d: int) -> list:
        return list(_monomials_of_degree(self.weights, d, self))

    def with_variable(self, name: str, weight: int, first: bool = True) -> "WeightedRing":
        if first:
            return WeightedRing((name,) + self.variables, (weight,) + self.weights)
        return WeightedRing(self.variables + (name,), self.weights + (weight,))

    def __repr__(self):
        inner = ", ".join(f"{v}:{w}" for v, w in zip(self.variables, self.weights))
        return f"WeightedRing({inner})"


@lru_cache(maxsize=None)
def _monomials_raw(weights: tuple, d: int) -> tuple:
    if not weights:
        return ((),) if d == 0 else ()
    w, rest = weights[-1], weights[:-1]
    out = []
    for e in range(d // w + 1):
        for m in _monomials_raw(rest, d - e * w):
            out.append(m + (e,))
    return tuple(out)


def _monomials_of_degree(weights, d, ring):
    if d < 0:
        return ()
    monos = _monomials_raw(tuple(weights), d)
    return tuple(sorted(monos, key=ring.key, reverse=True))


def monomials_of_degree(ring: WeightedRing, d: int) -> list:
    """All monomials of weighted degree d, largest first in the canonical order."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return ring.monomials_of_degree(d)


def count_monomials(weights: Sequence[int], d_max: int) -> list:
    """Coefficients of prod 1/(1 - t^w) up to t^d_max."""
    return series_expand(weights, (), d_max)


def series_expand(weights: Sequence[int], relation_degrees: Sequence[int], d_max: int) -> list:
    """Coefficients of prod(1 - t^e) / prod(1 - t^w) through degree d_max."""
    c = [0] * (d_max + 1)
    c[0] = 1
    for w in weights:
        for d in range(w, d_max + 1):
            c[d] += c[d - w]
    for e in relation_degrees:
        for d in range(d_max, e - 1, -1):
            c[d] -= c[d - e]
    return c


@dataclass(frozen=True)
class RationalSeries:
    coefficients: tuple

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, d):
        return self.coefficients[d]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def as_list(self) -> list:
        return list(self.coefficients)


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps Monomial -> nonzero Fraction."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: WeightedRing, terms: Mapping):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_terms(cls, ring, terms: Mapping) -> "Polynomial":
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != ring.nvars:
                raise ValueError(f"monomial {m} has wrong length for {ring}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
        return cls(ring, {m: c for m, c in clean.items() if c})

    # ---- basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> list:
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def lm(self) -> Monomial:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.key)

    def lc(self) -> Fraction:
        return self.terms[self.lm()]

    def monomials(self) -> list:
        return [m for m, _ in self.sorted_terms()]

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def degrees(self) -> set:
        return {self.ring.degree_of(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self):
        """Common weighted degree, or None when the polynomial is inhomogeneous."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def constant(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def variables_used(self) -> set:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return {self.ring.variables[i] for i in used}

    # ---- arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono, c) -> "Polynomial":
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {_mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    # ---- transformations
    def monic(self) -> "Polynomial":
        return self.scale(1 / self.lc()) if self.terms else self

    def homogeneous_part(self, d: int) -> "Polynomial":
        deg = self.ring.degree_of
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if deg(m) == d})

    def diff(self, name: str) -> "Polynomial":
        i = self.ring.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = c * m[i]
        return Polynomial(self.ring, out)

    def substitute(self, images: Mapping, target: WeightedRing | None = None) -> "Polynomial":
        """Ring map sending each variable to ``images[name]`` (defaults to the
        same-named variable of ``target``)."""
        target = target or self.ring
        imgs = []
        for v in self.ring.variables:
            if v in images:
                img = images[v]
                if not isinstance(img, Polynomial):
                    img = target.const(img)
                elif img.ring != target:
                    raise RingMismatchError(f"image of {v} lives in {img.ring}")
                imgs.append(img)
            else:
                imgs.append(target.var(v))
        powers = [dict() for _ in imgs]

        def power(i, e):
            p = powers[i].get(e)
            if p is None:
                p = imgs[i] ** e
                powers[i][e] = p
            return p

        acc = {}
        for m, c in self.terms.items():
            t = target.const(c)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            for tm, tc in t.terms.items():
                s = acc.get(tm, 0) + tc
                if s:
                    acc[tm] = s
                else:
                    acc.pop(tm, None)
        return Polynomial(target, acc)

    def to_ring(self, target: WeightedRing) -> "Polynomial":
        """Reinterpret in a ring containing every variable that occurs (matched by name)."""
        if target == self.ring:
            return self
        idx = [target.index(v) if v in target.variables else None for v in self.ring.variables]
        out = {}
        for m, c in self.terms.items():
            e = [0] * target.nvars
            for name, i, x in zip(self.ring.variables, idx, m):
                if i is None:
                    if x:
                        raise RingMismatchError(f"{name} does not exist in {target}")
                    continue
                e[i] = x
            out[tuple(e)] = c
        return Polynomial(target, out)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


# ---------------------------------------------------------------- printing

def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    names = p.ring.variables
    parts = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        a = abs(c)
        if factors:
            body = "*".join(factors) if a == 1 else _format_coeff(a) + "*" + "*".join(factors)
        else:
            body = _format_coeff(a)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# ---------------------------------------------------------------- parsing

_NUM = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _NUM.match(text, pos)
        if m:
            out.append(("num", m.group(), pos))
            pos = m.end()
            continue
        m = _NAME.match(text, pos)
        if m:
            out.append(("name", m.group(), pos))
            pos = m.end()
            continue
        if ch not in "+-*^()/":
            raise ParseError(f"unexpected character {ch!r}", pos)
        out.append(("op", ch, pos))
        pos += 1
    out.append(("end", "", len(text)))
    return out


class _Parser:
    # expr   := ['+'|'-'] term (('+'|'-') term)*
    # term   := factor (('*'|'/') factor)*      -- '/' only by a numeric constant
    # factor := atom ['^' INT]
    # atom   := ['+'|'-'] INT | NAME | '(' expr ')'

    def __init__(self, ring, text):
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty input", 0)
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            if kind in ("num", "name") or val == "(":
                raise ParseError("juxtaposition is not allowed; use '*'", pos)
            raise ParseError(f"unexpected {val!r}", pos)
        return p

    def expr(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            _, op, pos = self.take()
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                if q.is_zero() or len(q.terms) != 1 or q.constant() == 0:
                    raise ParseError("division only by a nonzero numeric constant", pos)
                p = p.scale(1 / q.constant())
        return p

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer literal", pos)
            base = base ** int(val)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return self.ring.const(int(val))
        if kind == "op" and val in "+-" and self.peek()[0] == "num":
            n = int(self.take()[1])
            return self.ring.const(-n if val == "-" else n)
        if kind == "name":
            if val not in self.ring._index:
                raise ParseError(f"unknown variable {val!r}", pos)
            return self.ring.var(val)
        if val == "(":
            p = self.expr()
            k2, v2, p2 = self.take()
            if v2 != ")":
                raise ParseError("expected ')'", p2)
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_polynomial(ring: WeightedRing, text: str) -> Polynomial:
    return _Parser(ring, text).parse()


def weighted_degree(p: Polynomial):
    return p.degree()


def random_polynomial(ring: WeightedRing, degree: int, rng, lo: int = -9, hi: int = 9,
                      density: float = 1.0, monomial_filter=None) -> Polynomial:
    """Homogeneous polynomial with integer coefficients drawn from ``rng``."""
    terms = {}
    for m in ring.monomials_of_degree(degree):
        if monomial_filter is not None and not monomial_filter(m):
            continue
        if density < 1.0 and rng.random() > density:
            continue
        c = rng.randint(lo, hi)
        if c:
            terms[m] = Fraction(c)
    return Polynomial(ring, terms)


def polynomial_sum(ring: WeightedRing, polys: Iterable[Polynomial]) -> Polynomial:
    acc = {}
    for p in polys:
        for m, c in p.terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    return Polynomial(ring, acc)
