"""Independent brute-force computations used to cross-check the library."""
from fractions import Fraction

from gradedcone.linalg import RowReducer
from gradedcone.poly import Polynomial


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def lift_order2_joint(ring, gens, syzygies, direction) -> bool:
    """Solve the joint linear system in (m_ij, f2_i, n_ij) with full monomial bases.

    Order 1: sum_i l_ij f1_i + sum_i m_ij f_i = 0.
    Order 2: sum_i l_ij f2_i + sum_i m_ij f1_i + sum_i n_ij f_i = 0.
    """
    degs = [g.degree() for g in gens]
    sdeg = []
    for s in syzygies:
        sdeg.append(next(degs[i] + c.degree() for i, c in enumerate(s) if c))
    cols = {}

    def add(label, eq_key_terms):
        col = cols.setdefault(label, {})
        for key, c in eq_key_terms:
            v = col.get(key, 0) + c
            if v:
                col[key] = v
            else:
                col.pop(key, None)

    for j, s in enumerate(syzygies):
        for i, f in enumerate(gens):
            d = sdeg[j] - degs[i]
            if d < 0:
                continue
            for m in ring.monomials_of_degree(d):
                add(("m", j, i, m), [((1, j, _mono_mul(m, t)), c) for t, c in f.terms.items()]
                    + [((2, j, _mono_mul(m, t)), c) for t, c in direction[i].terms.items()])
                add(("n", j, i, m), [((2, j, _mono_mul(m, t)), c) for t, c in f.terms.items()])
    for i in range(len(gens)):
        for m in ring.monomials_of_degree(degs[i]):
            for j, s in enumerate(syzygies):
                add(("f2", i, m), [((2, j, _mono_mul(m, t)), c) for t, c in s[i].terms.items()])
    rhs = {}
    for j, s in enumerate(syzygies):
        r = sum((s[i] * direction[i] for i in range(len(gens))), ring.zero())
        for t, c in r.terms.items():
            rhs[(1, j, t)] = -c
    red = RowReducer()
    for label, col in cols.items():
        red.insert(col, label)
    return red.express(rhs) is not None


def leibniz_det(matrix):
    """Determinant by the permutation expansion (no elimination)."""
    from itertools import permutations
    n = len(matrix)
    ring_zero = matrix[0][0] - matrix[0][0]
    total = ring_zero
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = None
        for r, c in enumerate(perm):
            e = matrix[r][c]
            term = e if term is None else term * e
            if term.is_zero():
                break
        if not term.is_zero():
            total = total - term if inv % 2 else total + term
    return total


def brute_monomial_count(weights, d):
    """Number of exponent vectors of weighted degree d, by exhaustive search."""
    from itertools import product
    ranges = [range(d // w + 1) for w in weights]
    return sum(1 for e in product(*ranges) if sum(a * w for a, w in zip(e, weights)) == d)


def brute_ci_series(weights, relation_degrees, d_max):
    """Hilbert series of a complete intersection by explicit polynomial long multiplication."""
    num = [1]
    for e in relation_degrees:
        nxt = [0] * (len(num) + e)
        for i, c in enumerate(num):
            nxt[i] += c
            nxt[i + e] -= c
        num = nxt
    counts = [brute_monomial_count(weights, d) for d in range(d_max + 1)]
    return [sum(num[i] * counts[d - i] for i in range(min(d, len(num) - 1) + 1)) for d in range(d_max + 1)]
