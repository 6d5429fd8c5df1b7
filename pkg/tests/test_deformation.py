import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedcone.deformation import (
    CocycleError,
    DeformationProblem,
    FirstOrderDirection,
    ParameterPoint,
    cone_problem,
    default_grid,
    degree0_class,
    degree1_class,
    five_syzygy_check,
    format_induced_directions,
    format_induced_dim,
    hom_graded_basis,
    hom_graded_dim,
    in_span,
    lift_order2,
    obstruction_scan,
    quadrics_vanish,
    rc2q_problem,
    reduced_direction,
    split_d,
)
from gradedcone.formats import RING_A, RING_B, rc2q_generators
from gradedcone.groebner import syzygy_module

from oracles import lift_order2_joint

EXPECTED = [30, 23, 16, 11, 6, 4, 2, 1, 0, 0]


@pytest.fixture(scope="module")
def P():
    return rc2q_problem()


@pytest.fixture(scope="module")
def PB():
    return cone_problem()


def test_dimensions(P):
    assert [hom_graded_dim(P, k) for k in range(10)] == EXPECTED
    assert hom_graded_dim(P, 12) == 0


def test_dimensions_general_d(sample_D):
    Q = rc2q_problem(sample_D)
    assert [hom_graded_dim(Q, k) for k in range(10)] == EXPECTED


def test_five_syzygies(P):
    assert [five_syzygy_check(P, k) for k in range(10)] == EXPECTED


def test_dimensions_with_computed_syzygies(P):
    syz = syzygy_module(list(P.generators), 16)
    Q = DeformationProblem(P.ring, P.generators, [s.coefficients for s in syz])
    assert [hom_graded_dim(Q, k) for k in range(10)] == EXPECTED


def test_problem_rejects_bad_syzygy(P):
    bad = [RING_A.one()] + [RING_A.zero()] * 8
    with pytest.raises(ValueError):
        DeformationProblem(P.ring, P.generators, [bad])


def test_basis_k7(P):
    (b,) = hom_graded_basis(P, 7)
    g = RING_A.var
    target = FirstOrderDirection((RING_A.zero(),) * 6 + (g("x2"), g("y"), g("z1")))
    assert in_span(P, [b], target) and in_span(P, [target], b)
    assert hom_graded_basis(P, 8) == []


def test_bases_are_cocycles(P):
    for k in range(8):
        basis = hom_graded_basis(P, k)
        assert len(basis) == EXPECTED[k]
        assert all(P.check_cocycle(b) for b in basis)


def test_explicit_classes(P, sample_D):
    assert in_span(P, hom_graded_basis(P, 1), degree1_class(RING_A, RING_A.zero()))
    for D in (RING_A.zero(), sample_D):
        Q = rc2q_problem(D)
        assert Q.check_cocycle(degree0_class(RING_A, D))
        assert Q.check_cocycle(degree1_class(RING_A, D))


def test_exceptional_classes_are_not_format_induced(P):
    for k, cls in ((0, degree0_class(RING_A, RING_A.zero())), (1, degree1_class(RING_A, RING_A.zero()))):
        assert not in_span(P, format_induced_directions(P, k), cls)


def test_format_induced_codimension(P, sample_D):
    for D, Q in ((None, P), (sample_D, rc2q_problem(sample_D))):
        codim = [hom_graded_dim(Q, k) - format_induced_dim(Q, k, D) for k in range(10)]
        assert codim == [1, 1, 0, 0, 0, 0, 0, 0, 0, 0]


def test_split_d(sample_D):
    pc = split_d(sample_D)
    g = RING_A.var
    assert pc.delta == 0
    assert g("y") * pc.D_y + g("z1") * pc.D_z1 + (g("z2") * g("u")).scale(pc.d02) == sample_D
    with pytest.raises(ValueError):
        split_d(g("v") * g("x2") ** 2)


def test_degree0_class_with_zero_d():
    d = degree0_class(RING_B, RING_B.zero())
    g = RING_B.var
    z = RING_B.zero()
    assert d.components == (-g("u"), -g("v"), z, -g("z2") ** 2, z, z, z, z, z)


def test_reduced_direction_zero(PB):
    rd = reduced_direction(ParameterPoint(), problem=PB)
    assert rd.direction.is_zero() and not rd.used_fallback


def test_reduced_direction_a5(PB):
    rd = reduced_direction(ParameterPoint(a5=1), problem=PB)
    g = RING_B.var
    # d/de pf along n1 -> v + e*x1^5 only touches generators containing A
    f = rc2q_generators(ring=RING_B)
    expected = [(fi.substitute({"v": g("v")}) - fi).is_zero() for fi in f]
    assert PB.check_cocycle(rd.direction)
    assert rd.direction[6] == g("z1") * g("x1") ** 5
    assert rd.direction[7] == g("u") * g("x1") ** 5
    assert rd.direction[8] == g("v") * g("x1") ** 5


def test_reduced_direction_rejects_x2_seventh():
    with pytest.raises(ValueError):
        reduced_direction(ParameterPoint(c0=1), RING_B.parse("x2^7"))


def test_designated_points(PB):
    cases = [(ParameterPoint(), True), (ParameterPoint(c0=1, a5=1), False),
             (ParameterPoint(a5=1), True), (ParameterPoint(c0=1, c1=1, d7=1, b6=1), True)]
    for pt, expected in cases:
        res = lift_order2(PB, reduced_direction(pt, problem=PB).direction)
        assert res.feasible is expected, pt
        if expected:
            assert res.witness is not None


def test_zero_direction_feasible(PB):
    res = lift_order2(PB, PB.zero_direction())
    assert res.feasible and res.witness.is_zero()


@pytest.mark.parametrize("pt", [ParameterPoint(c0=1, a5=1), ParameterPoint(a5=1), ParameterPoint(c0=1, d7=1),
                                ParameterPoint(c0=1, c1=1, d7=1, b6=1), ParameterPoint(c1=1, a5=-1)])
def test_lift_matches_joint_system(PB, pt):
    d = reduced_direction(pt, problem=PB).direction
    assert lift_order2(PB, d).feasible == lift_order2_joint(PB.ring, PB.generators, PB.syzygies, d.components)


def test_lift_rejects_non_cocycle(PB):
    bad = FirstOrderDirection((RING_B.parse("x1^4"),) + (RING_B.zero(),) * 8)
    with pytest.raises(CocycleError):
        lift_order2(PB, bad)


def test_d7_line(PB):
    for d7 in (-1, 0, 1, 2):
        pt = ParameterPoint(c0=1, d7=d7)
        assert lift_order2(PB, reduced_direction(pt, problem=PB).direction).feasible is (d7 == 0)


def test_scan_grid(PB, sample_D):
    rows = obstruction_scan(PB, default_grid())
    assert all(r.feasible == r.predicted for r in rows)
    assert sum(r.feasible for r in rows) == 11
    DB = sample_D.to_ring(RING_B)
    Q = cone_problem(DB)
    rows = obstruction_scan(Q, default_grid(), DB)
    assert all(r.feasible == r.predicted for r in rows)


@settings(max_examples=15, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-2, 2), st.integers(-2, 2),
       st.sampled_from([Fraction(1), Fraction(-2), Fraction(3, 5)]))
def test_feasibility_scale_invariant_and_matches_quadrics(c0, c1, a5, b6, d7, lam):
    PB = _cone()
    pt = ParameterPoint(c0=c0, c1=c1, a5=a5, b6=b6, d7=d7)
    d = reduced_direction(pt, problem=PB).direction
    f = lift_order2(PB, d).feasible
    assert f == lift_order2(PB, d.scale(lam)).feasible
    assert f == quadrics_vanish(pt)


_CONE = []


def _cone():
    if not _CONE:
        _CONE.append(cone_problem())
    return _CONE[0]


def test_entry_variations_lift(PB):
    """Random combinations of entry variations (with x1) always lift."""
    rng = random.Random(11)
    for _ in range(20):
        kw = {name: rng.randint(-3, 3) for name in ("a5", "b1", "b2", "b3", "b6", "d11", "d12", "d21", "d22",
                                                      "d3", "d41", "d42", "d5", "d7", "delta_prime", "d02_prime")}
        pt = ParameterPoint(**kw)
        assert lift_order2(PB, reduced_direction(pt, problem=PB).direction).feasible


def test_parameter_point_dict_round_trip():
    pt = ParameterPoint.from_dict({"c0": "1/2", "d7": 3})
    assert pt.c0 == Fraction(1, 2)
    assert ParameterPoint.from_dict(pt.as_dict()) == pt
    with pytest.raises(ValueError):
        ParameterPoint.from_dict({"zz": 1})
