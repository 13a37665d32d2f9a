import random
from fractions import Fraction

import pytest

from evainject import (
    ACF,
    QQ,
    RCF,
    Bounds,
    Matrix,
    MultiPoly,
    PrimeField,
    Reason,
    Status,
    UniPoly,
    mat_poly_eval,
    monotonicity_violation,
    multivariate_injectivity,
    rational_grid,
    search_matrix_collisions,
    search_rational_collisions,
    search_tuple_collisions,
    verify_witness,
)
from evainject.errors import ArityMismatchError, EnumerationCapExceededError

F2 = PrimeField(2)
F3 = PrimeField(3)

U = UniPoly.from_ints
GOLDEN = U(QQ, [0, 2, 0, 0, 1])


def test_pigeonhole_example():
    f = MultiPoly.from_ints(F3, 2, {(1, 0): 1, (0, 1): 1})
    v = multivariate_injectivity(f)
    assert v.status is Status.NOT_INJECTIVE
    assert v.reason == Reason.PIGEONHOLE
    assert v.witness.lhs == (F3.zero(), F3.one())
    assert v.witness.rhs == (F3.one(), F3.zero())
    assert v.witness.image == F3.one()


def test_pigeonhole_small_sweep():
    f = MultiPoly.from_ints(F2, 2, {(2, 0): 1, (0, 3): 1})
    v = multivariate_injectivity(f)
    assert v.status is Status.NOT_INJECTIVE
    assert f.eval(v.witness.lhs) == f.eval(v.witness.rhs)


def test_multivariate_over_q():
    f = MultiPoly.from_ints(QQ, 2, {(1, 1): 1})
    v = multivariate_injectivity(f)
    assert v.status is Status.NOT_INJECTIVE
    assert v.reason == Reason.SEARCH_COLLISION

    # collision-free on the search grid: x1 + 1000003 * x2
    g = MultiPoly.from_ints(QQ, 2, {(1, 0): 1, (0, 1): 1000003})
    v = multivariate_injectivity(g, bounds=Bounds(height=3))
    assert v.status is Status.UNDECIDED
    assert v.reason == Reason.SEARCH_EXHAUSTED


def test_multivariate_over_tags():
    f = MultiPoly.from_ints(QQ, 2, {(2, 0): 1, (0, 2): 1})
    v = multivariate_injectivity(f, RCF)
    assert v.status is Status.NOT_INJECTIVE
    assert v.reason == Reason.TOPOLOGICAL_ARGUMENT
    v = multivariate_injectivity(f, ACF)
    assert v.status is Status.NOT_INJECTIVE
    assert v.reason == Reason.INFINITE_ROOT_LOCUS


def test_multivariate_validation():
    with pytest.raises(ArityMismatchError):
        multivariate_injectivity(MultiPoly.from_ints(QQ, 1, {(1,): 1}))
    big = MultiPoly.from_ints(PrimeField(101), 3, {(1, 0, 0): 1})
    with pytest.raises(EnumerationCapExceededError):
        multivariate_injectivity(big)


def test_rational_grid_contents():
    grid = rational_grid(2)
    assert len(grid) == len(set(grid))
    assert Fraction(3, 2) in grid and Fraction(-3, 2) in grid
    assert Fraction(2) in grid and Fraction(-2) in grid
    assert all(abs(r) <= 2 and r.denominator <= 2 for r in grid)
    assert rational_grid(1) == [Fraction(-1), Fraction(0), Fraction(1)]


def test_scalar_search():
    w = search_rational_collisions(U(QQ, [0, 0, 1]), 1)
    assert {w.lhs.value, w.rhs.value} == {Fraction(-1), Fraction(1)}
    assert w.image == QQ.one()
    assert search_rational_collisions(GOLDEN, 20) is None
    assert search_rational_collisions(U(QQ, [0, 0, 0, 1]), 10) is None  # x^3 injective


def test_matrix_search_finds_quartic_collision():
    w = search_matrix_collisions(GOLDEN, 2, 2)
    assert w is not None
    assert mat_poly_eval(GOLDEN, w.lhs) == mat_poly_eval(GOLDEN, w.rhs) == w.image
    assert w.lhs != w.rhs
    # the collision family lives off the zero fiber: images are scalar
    # multiples of I with the two minimal polynomials sharing a value
    assert w.image.entries[0][1].is_zero()


def test_matrix_search_cap():
    with pytest.raises(EnumerationCapExceededError):
        search_matrix_collisions(GOLDEN, 2, 20)


def test_golden_pair_verifies():
    a = Matrix.from_rows(QQ, [["0", "1/2"], ["1", "-1"]])
    b = Matrix.from_rows(QQ, [["0", "-3/2"], ["1", "1"]])
    w = verify_witness(GOLDEN, a, b)
    assert w.image == Matrix.identity(QQ, 2).scale(QQ.element(Fraction(3, 4)))


def test_tuple_search_shrinks_to_cap():
    f = MultiPoly.from_ints(QQ, 2, {(2, 0): 1, (0, 2): 1})
    w, used = search_tuple_collisions(f, 20, cap=1000)
    assert w is not None
    assert used < 20
    assert f.eval(w.lhs) == f.eval(w.rhs)


def test_monotonicity_violation_quartic():
    triple = monotonicity_violation(GOLDEN, 10)
    assert triple is not None
    u, v, w = triple
    assert u < v < w
    vals = [GOLDEN.eval(QQ.element(t)).value for t in (u, v, w)]
    assert (vals[1] - vals[0]) * (vals[2] - vals[1]) < 0


def test_monotonicity_violation_absent_for_monotone():
    assert monotonicity_violation(U(QQ, [0, 1, 0, 1]), 5) is None


def test_search_determinism():
    rng = random.Random(0)
    f = U(QQ, [rng.randint(-3, 3) for _ in range(4)] + [1])
    first = search_rational_collisions(f, 4)
    second = search_rational_collisions(f, 4)
    assert (first is None) == (second is None)
    if first is not None:
        assert (first.lhs, first.rhs) == (second.lhs, second.rhs)
