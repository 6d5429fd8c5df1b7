"""Hypothesis properties that cut across modules."""
import random

from hypothesis import assume, given, strategies as st

from gradedcone.formats import RING_CURVE, SkewMatrix, pfaffian4, veronese_ideal, veronese_pullback, veronese_rewrite
from gradedcone.groebner import (
    GradedIdeal,
    graded_piece_dim_of_ideal,
    hilbert_function,
    ideals_equal,
    module_span_dims,
    pairing,
    syzygy_module,
    syzygy_space_dims,
    verify_syzygy,
)
from gradedcone.poly import WeightedRing, random_polynomial

from oracles import leibniz_det

seeds = st.integers(0, 10 ** 6)
SMALL = WeightedRing(("a", "b", "c"), (1, 1, 2))


def random_ideal(rng, ring=SMALL, max_gens=3):
    gens = [random_polynomial(ring, rng.randint(1, 4), rng, density=0.5) for _ in range(rng.randint(1, max_gens))]
    return GradedIdeal(ring, [g for g in gens if g])


@given(seeds)
def test_pfaffian_squared_is_determinant(seed):
    rng = random.Random(seed)
    entries = {(i, j): random_polynomial(SMALL, rng.randint(0, 2), rng, density=0.5)
               for i in range(1, 5) for j in range(i + 1, 5)}
    M = SkewMatrix(SMALL, 4, entries)
    mat = [[M.entry(i, j) for j in range(1, 5)] for i in range(1, 5)]
    assert pfaffian4(M) ** 2 == leibniz_det(mat)


@given(seeds)
def test_normal_form_is_idempotent_and_congruent(seed):
    rng = random.Random(seed)
    I = random_ideal(rng)
    p = random_polynomial(SMALL, rng.randint(0, 6), rng, density=0.6)
    r = I.normal_form(p)
    assert I.normal_form(r) == r
    diff = p - r
    assert I.contains(diff)
    if diff:
        assert pairing(list(I.generators), I.lift(diff)) == diff


@given(seeds)
def test_hilbert_plus_ideal_piece_is_monomial_count(seed):
    rng = random.Random(seed)
    I = random_ideal(rng)
    hf = hilbert_function(I, 7).as_list()
    for d in range(8):
        assert hf[d] + graded_piece_dim_of_ideal(I, d) == len(SMALL.monomials_of_degree(d))


@given(seeds)
def test_groebner_basis_generates_the_same_ideal(seed):
    I = random_ideal(random.Random(seed))
    assert ideals_equal(I, GradedIdeal(SMALL, I.groebner_basis()))


@given(seeds)
def test_syzygy_module_is_correct_degreewise(seed):
    rng = random.Random(seed)
    gens = list(random_ideal(rng, max_gens=4).generators)
    assume(gens)
    syz = syzygy_module(gens, 9)
    assert all(verify_syzygy(gens, s) for s in syz)
    top = max([s.degree for s in syz], default=max(g.degree() for g in gens)) + 2
    top = min(top, 9)
    assert module_span_dims(syz, top) == syzygy_space_dims(gens, top)


@given(seeds, st.sampled_from([2, 4, 6, 8, 10]))
def test_veronese_rewrite_inverts_pullback(seed, d):
    p = random_polynomial(RING_CURVE, d, random.Random(seed), density=0.7)
    q = veronese_rewrite(p)
    assert veronese_pullback(q) == p
    assert veronese_ideal().normal_form(q) == q
