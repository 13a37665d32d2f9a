"""Acceptance suite: one test per criterion, each timed and reported.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS/FAIL line
per criterion.  Criterion 3 is split in three: its middle clause asserts a
2-adic valuation identity for all odd pairs that direct computation
refutes (the valuation is 2 exactly when the pair agrees mod 4, see
test_fields.test_two_adic_odd_pair_structure for the true statement); that
clause is implemented as stated and is expected to fail.
"""
import itertools
import random
import time
from fractions import Fraction

import pytest

from evainject import (
    QQ,
    Matrix,
    MultiPoly,
    PrimeField,
    Reason,
    Status,
    UniPoly,
    bezout_noncollision_certificate,
    brute_force_scalar,
    brute_force_zero_fiber,
    companion,
    factor_profile,
    factor_rationals,
    flatten,
    is_strictly_monotone,
    mat_poly_eval,
    matrix_injectivity,
    minimal_polynomial,
    monotonicity_violation,
    multivariate_injectivity,
    permutation_check,
    scalar_injectivity,
    search_rational_collisions,
    two_adic_valuation,
    unflatten,
)
from evainject.cli import main

from oracles import all_polys, charpoly_cofactor

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)

U = UniPoly.from_ints
GOLDEN = U(QQ, [0, 2, 0, 0, 1])  # x^4 + 2x


class _Criterion:
    def __init__(self, label, limit_s):
        self.label = label
        self.limit = limit_s

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None and elapsed < self.limit else "FAIL"
        print(f"ACCEPTANCE {self.label}: {status} ({elapsed:.2f}s, limit {self.limit}s)")
        if exc_type is None:
            assert elapsed < self.limit, f"{self.label} exceeded {self.limit}s"
        return False


def test_criterion_1_golden_worked_example(capsys):
    with _Criterion("1 golden quartic pair", 1.0):
        a = Matrix.from_rows(QQ, [["0", "1/2"], ["1", "-1"]])
        b = Matrix.from_rows(QQ, [["0", "-3/2"], ["1", "1"]])
        expected = Matrix.identity(QQ, 2).scale(QQ.element(Fraction(3, 4)))
        assert mat_poly_eval(GOLDEN, a) == expected
        assert mat_poly_eval(GOLDEN, b) == expected
        assert a != b
        code = main(["verify", "--poly", "x^4+2*x", "--field", "Q",
                     "--lhs", '[["0","1/2"],["1","-1"]]',
                     "--rhs", '[["0","-3/2"],["1","1"]]'])
        capsys.readouterr()
        assert code == 1


def test_criterion_2_profile_and_case_split(capsys):
    with _Criterion("2 profile and n=2/n=3 split", 1.0):
        for c in (0, 7, Fraction(-5, 3)):
            f = U(QQ, [c, 2, 0, 0, 1])
            p = factor_profile(f)
            assert p.c == QQ.element(c)
            assert p.m_mult == 1
            assert p.h == U(QQ, [2, 0, 0, 1])
            assert p.factors == ((U(QQ, [2, 0, 0, 1]), 1),)
            assert p.d == 3
        code2 = main(["matrix", "--poly", "x^4+2*x", "--field", "Q", "--n", "2"])
        code3 = main(["matrix", "--poly", "x^4+2*x", "--field", "Q", "--n", "3"])
        capsys.readouterr()
        assert code2 == 2
        assert code3 == 1
        v2 = matrix_injectivity(GOLDEN, 2)
        assert v2.status is Status.UNDECIDED and v2.reason == Reason.OPEN_CASE_BELOW_D
        v3 = matrix_injectivity(GOLDEN, 3)
        assert v3.status is Status.NOT_INJECTIVE
        assert v3.reason == Reason.COMPANION_WITNESS
        assert v3.witness.rhs == Matrix.zeros(QQ, 3)
        assert v3.witness.image == Matrix.identity(QQ, 3).scale(GOLDEN.constant_term)
        assert mat_poly_eval(GOLDEN, v3.witness.lhs) == v3.witness.image


def test_criterion_3a_no_rational_collision_at_height_50():
    with _Criterion("3a scalar search height 50 empty", 5.0):
        assert search_rational_collisions(GOLDEN, 50) is None


def test_criterion_3b_two_adic_product_valuation_as_stated():
    # As stated: v2((a+b)(a^2+b^2)) = 2 for every random odd pair.  Direct
    # computation refutes this whenever a and b differ mod 4, for example
    # (1, 3) gives v2(4 * 10) = 3, so the assertion below is expected to
    # fail.  The structure that does hold for all odd pairs is covered by
    # test_fields.test_two_adic_odd_pair_structure.
    with _Criterion("3b 2-adic product valuation (as stated)", 5.0):
        rng = random.Random(303)
        failures = []
        for _ in range(1000):
            a = 2 * rng.randint(-10 ** 6, 10 ** 6) + 1
            b = 2 * rng.randint(-10 ** 6, 10 ** 6) + 1
            if two_adic_valuation((a + b) * (a * a + b * b)) != 2:
                failures.append((a, b))
        assert not failures, (
            f"{len(failures)}/1000 odd pairs have valuation != 2, first "
            f"counterexample {failures[0]}: the identity holds only when "
            "a and b agree mod 4")


def test_criterion_3c_two_adic_cube_valuation():
    with _Criterion("3c 2-adic cube valuation", 5.0):
        rng = random.Random(304)
        for _ in range(1000):
            u = rng.choice([1, -1]) * rng.randint(1, 10 ** 9)
            v = two_adic_valuation(-2 * u ** 3)
            assert v == 1 + 3 * two_adic_valuation(u)
            assert v != 2


def test_criterion_4_scalar_oracle_equivalence():
    with _Criterion("4 scalar oracle equivalence", 30.0):
        disagreements = 0
        for spec in (F2, F3):
            for f in all_polys(spec, 3):
                fast = scalar_injectivity(f)
                oracle = brute_force_scalar(f)
                if fast.status != oracle.status:
                    disagreements += 1
                check = permutation_check(f)  # raises if methods disagree
                assert check.exhaustive is not None
        assert disagreements == 0


def test_criterion_5_matrix_oracle_equivalence():
    with _Criterion("5 matrix oracle equivalence", 60.0):
        violations = 0
        for f in all_polys(F2, 3):
            if f.degree < 2:
                continue
            v = matrix_injectivity(f, 2)
            if v.status is Status.NOT_INJECTIVE:
                w = v.witness
                if not (w.lhs != w.rhs
                        and mat_poly_eval(f, w.lhs) == mat_poly_eval(f, w.rhs) == w.image):
                    violations += 1
            elif v.status is Status.UNDECIDED:
                if brute_force_zero_fiber(f, 2) != []:
                    violations += 1
            else:
                violations += 1
        assert violations == 0


def test_criterion_6_unit_witnesses():
    with _Criterion("6 nilpotent and companion unit witnesses", 1.0):
        v = matrix_injectivity(U(QQ, [1, 0, 1]), 2)
        assert v.reason == Reason.NILPOTENT_WITNESS
        assert v.witness.lhs == Matrix.from_rows(QQ, [[0, 1], [0, 0]])
        assert mat_poly_eval(U(QQ, [1, 0, 1]), v.witness.lhs) == Matrix.identity(QQ, 2)
        assert v.witness.image == Matrix.identity(QQ, 2)

        v = matrix_injectivity(U(QQ, [0, 1, 0, 1]), 2)
        assert v.reason == Reason.COMPANION_WITNESS
        c = v.witness.lhs
        assert mat_poly_eval(U(QQ, [0, 1, 0, 1]), c) == Matrix.zeros(QQ, 2)
        assert v.witness.image == Matrix.zeros(QQ, 2)


def test_criterion_7_monotonicity_and_witnesses():
    with _Criterion("7 real-line monotonicity", 5.0):
        for coeffs in ([0, 1], [0, 1, 0, 1], [0, 1, 0, 2, 0, 1]):
            assert is_strictly_monotone(U(QQ, coeffs))
        for coeffs in ([0, 0, 1], [0, -1, 0, 1], [0, 2, 0, 0, 1]):
            assert not is_strictly_monotone(U(QQ, coeffs))
        # collision witnesses at height <= 10 where a rational one exists
        for coeffs in ([0, 0, 1], [0, -1, 0, 1]):
            f = U(QQ, coeffs)
            w = search_rational_collisions(f, 10)
            assert w is not None
            assert f.eval(w.lhs) == f.eval(w.rhs) == w.image
        # x^4+2x has no rational collision at any height (criterion 3a), so
        # its non-monotonicity witness is a verified strict rise-and-fall
        assert search_rational_collisions(GOLDEN, 10) is None
        triple = monotonicity_violation(GOLDEN, 10)
        assert triple is not None
        u, v, w = triple
        vals = [GOLDEN.eval(QQ.element(t)).value for t in (u, v, w)]
        assert u < v < w
        assert (vals[1] - vals[0]) * (vals[2] - vals[1]) < 0


def test_criterion_8_bezout_certificates():
    with _Criterion("8 Bezout certificates on n < d family", 10.0):
        rng = random.Random(808)
        cubes = {k ** 3 for k in range(1, 10)}
        done = 0
        while done < 100:
            a = rng.randint(2, 60)
            if a in cubes:
                continue
            c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            f = U(QQ, [c, a, 0, 0, 1])  # x^4 + a*x + c, h = x^3 + a irreducible
            profile = factor_profile(f)
            assert profile.d == 3
            while True:
                entries = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                            for _ in range(2)] for _ in range(2)]
                det = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]
                if det != 0:
                    break
            mat = Matrix.from_rows(QQ, entries)
            cert = bezout_noncollision_certificate(f, mat)
            assert cert.u * cert.m_a + cert.v * cert.g == U(QQ, [1])
            lhs = (mat_poly_eval(cert.u, mat) * mat_poly_eval(cert.m_a, mat)
                   + mat_poly_eval(cert.v, mat) * mat_poly_eval(cert.g, mat))
            assert lhs == Matrix.identity(QQ, 2)
            done += 1


def test_criterion_9_multivariate_pigeonhole_sweep():
    with _Criterion("9 pigeonhole sweep over F2, 2 vars, deg <= 2", 10.0):
        monomials = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        for mask in range(2 ** len(monomials)):
            terms = {m: 1 for i, m in enumerate(monomials) if mask >> i & 1}
            f = MultiPoly.from_ints(F2, 2, terms)
            v = multivariate_injectivity(f)
            assert v.status is Status.NOT_INJECTIVE
            assert v.reason == Reason.PIGEONHOLE
            w = v.witness
            assert w.lhs != w.rhs
            assert f.eval(w.lhs) == f.eval(w.rhs) == w.image


def test_criterion_10_property_suites():
    with _Criterion("10 randomized property suites", 60.0):
        rng = random.Random(1010)
        specs = [F2, F3, F5, QQ]

        def rand_el(spec, small=False):
            if spec.is_finite:
                return spec.element_from_index(rng.randrange(spec.order))
            bound = 4 if small else 9
            return spec.element(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))

        # field axioms (500 triples)
        for _ in range(500):
            spec = rng.choice(specs)
            a, b, c = (rand_el(spec) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            if not a.is_zero():
                assert a * a.inv() == spec.one()

        # factorization reconstruction (500 polynomials)
        for i in range(500):
            spec = specs[i % 3] if i % 2 == 0 else QQ
            deg = rng.randint(1, 6)
            coeffs = [rand_el(spec, small=True) for _ in range(deg)]
            lead = rand_el(spec, small=True)
            while lead.is_zero():
                lead = rand_el(spec, small=True)
            f = UniPoly(spec, coeffs + [lead])
            if spec.is_finite:
                from evainject import factor_finite
                unit, factors = factor_finite(f)
            else:
                unit, factors = factor_rationals(f)
            rebuilt = UniPoly.constant(spec, unit)
            for q, e in factors:
                rebuilt = rebuilt * q ** e
            assert rebuilt == f

        # flatten/unflatten round-trip (500 matrices)
        for _ in range(500):
            spec = rng.choice(specs)
            n = rng.randint(1, 4)
            mat = Matrix(spec, [[rand_el(spec) for _ in range(n)] for _ in range(n)])
            assert unflatten(flatten(mat), n) == mat

        # companion annihilation (500 monic polynomials)
        for _ in range(500):
            spec = rng.choice(specs)
            d = rng.randint(1, 6)
            q = UniPoly(spec, [rand_el(spec, small=True) for _ in range(d)] + [spec.one()])
            assert mat_poly_eval(q, companion(q)).is_zero()

        # minimal polynomial divides the cofactor characteristic polynomial
        for _ in range(500):
            spec = rng.choice(specs)
            n = rng.randint(1, 4)
            mat = Matrix(spec, [[rand_el(spec, small=True) for _ in range(n)]
                                for _ in range(n)])
            m = minimal_polynomial(mat)
            assert (charpoly_cofactor(mat) % m).is_zero()
