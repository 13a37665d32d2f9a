"""Injectivity decision procedures with machine-verified counterexamples.

Verdict semantics
-----------------
* Injective is emitted only where a proof of sufficiency exists: degree-1
  affine maps over any field, permutation polynomials over a finite field
  (scalar case), strict monotonicity over the reals (scalar case), and
  complete enumeration in the brute-force oracles.
* NotInjective always carries a Witness, a pair of distinct inputs with
  equal images that is re-verified at construction.  A non-injectivity
  claim without a checkable witness is never emitted with this status.
* NecessaryConditionFails records that injectivity is impossible (or a
  necessary condition is violated) without an exact witness in reach, for
  example over the closed-field tags where the colliding points need not
  have rational coordinates.
* Undecided is the honest fallback: notably the n < d matrix case, where
  no nonzero A satisfies f(A) = f(0) * I (certified by the Bezout
  identity on minimal polynomials) but collisions between two nonzero
  matrices are not ruled out, and the scalar case over Q, where no
  sufficient criterion is implemented.

Dispatch by base field (scalar case): algebraically closed -> injective
iff degree 1; finite -> injective iff permutation polynomial (Hermite test
cross-checked by exhaustive scan at small q); the reals -> injective iff
strictly monotone; Q -> bounded search only, never Injective for degree
at least 2.

Everything is a pure function of its inputs, the seed, and the bounds;
enumerations report the first collision in a documented scan order, so
witnesses are reproducible.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import (
    AlgebraError,
    ArityMismatchError,
    ConstantPolynomialError,
    DimensionTooSmallError,
    EnumerationCapExceededError,
    GcdNotOneError,
    InconsistentMethodsError,
    InternalInvariantError,
    NotAWitnessError,
    SpecMismatchError,
)
from .fields import (
    QQ,
    AlgClosedTag,
    FieldElement,
    FieldSpec,
    Rationals,
    RealClosedTag,
)
from .matrices import (
    Matrix,
    block_embed,
    companion,
    jordan_nilpotent_embed,
    mat_poly_eval,
    minimal_polynomial,
)
from .polynomials import (
    MultiPoly,
    UniPoly,
    extended_gcd,
    factor_profile,
    is_strictly_monotone,
    rational_roots,
)
from .polynomials.core import root_multiplicity
from .polynomials.factor import DEFAULT_SEED

__all__ = [
    "Bounds",
    "DEFAULT_BOUNDS",
    "DEFAULT_SEED",
    "Status",
    "Reason",
    "Witness",
    "Verdict",
    "PermutationCheck",
    "SimpleRootsReport",
    "BezoutCertificate",
    "verify_witness",
    "first_scalar_collision",
    "scalar_injectivity",
    "permutation_check",
    "simple_roots_condition",
    "matrix_injectivity",
    "bezout_noncollision_certificate",
    "multivariate_injectivity",
    "brute_force_scalar",
    "brute_force_matrix",
    "brute_force_zero_fiber",
    "search_rational_collisions",
    "search_matrix_collisions",
    "search_tuple_collisions",
    "rational_grid",
    "monotonicity_violation",
]


@dataclass(frozen=True)
class Bounds:
    """Search and enumeration limits; all overridable from the CLI."""

    height: int = 20
    scalar_cap: int = 49
    matrix_cap: int = 1_000_000


DEFAULT_BOUNDS = Bounds()


class Status(str, Enum):
    INJECTIVE = "Injective"
    NOT_INJECTIVE = "NotInjective"
    NECESSARY_CONDITION_FAILS = "NecessaryConditionFails"
    UNDECIDED = "Undecided"


class Reason:
    """Stable tags naming the criterion that produced a verdict."""

    DEGREE_ONE = "DegreeOne"
    CONSTANT = "ConstantPolynomial"
    REPEATED_ROOT_WITNESS = "RepeatedRootWitness"
    DISTINCT_ROOTS_WITNESS = "DistinctRootsWitness"
    NILPOTENT_WITNESS = "NilpotentWitness"
    COMPANION_WITNESS = "CompanionWitness"
    PIGEONHOLE = "Pigeonhole"
    OPEN_CASE_BELOW_D = "OpenCaseBelowD"
    CHAR_P_DEGENERATE = "CharPDegenerate"
    SEARCH_EXHAUSTED = "SearchExhausted"
    SEARCH_COLLISION = "SearchCollision"
    ROOTS_OUTSIDE_COMPUTABLE_FIELD = "RootsOutsideComputableField"
    PERMUTATION_POLYNOMIAL = "PermutationPolynomial"
    NOT_PERMUTATION = "NotPermutation"
    STRICTLY_MONOTONE = "StrictlyMonotone"
    NOT_MONOTONE = "NotMonotone"
    TOPOLOGICAL_ARGUMENT = "TopologicalArgument"
    INFINITE_ROOT_LOCUS = "InfiniteRootLocus"
    EXHAUSTIVE = "Exhaustive"
    SIMPLE_ROOTS_HOLD = "SimpleRootsHold"
    SIMPLE_ROOTS_FAIL = "SimpleRootsFail"
    NOT_A_WITNESS = "NotAWitness"
    VERIFIED_PAIR = "VerifiedPair"


@dataclass(frozen=True)
class Witness:
    """Verified collision: lhs != rhs and both map to image under f.

    Build through verify_witness, which re-checks the claim exactly;
    nothing else in the engine constructs these directly.
    """

    lhs: object
    rhs: object
    image: object


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str
    detail: str
    witness: Witness | None = None

    def __post_init__(self):
        if self.status is Status.NOT_INJECTIVE and self.witness is None:
            raise InternalInvariantError(
                "NotInjective requires a verified witness")
        if self.status is not Status.NOT_INJECTIVE and self.witness is not None:
            raise InternalInvariantError(
                f"{self.status.value} must not carry a witness")


@dataclass(frozen=True)
class PermutationCheck:
    is_permutation: bool
    hermite: bool
    exhaustive: bool | None


@dataclass(frozen=True)
class SimpleRootsReport:
    """Whether every f - t (t in F) has only simple roots in F.

    When the condition fails, violating_b is a repeated root of f - lam
    with the recorded multiplicity.  char_p_degenerate marks the f' = 0
    case, where every root of every f - t has multiplicity divisible by
    the characteristic.
    """

    holds: bool
    violating_b: FieldElement | None = None
    lam: FieldElement | None = None
    multiplicity_k: int | None = None
    char_p_degenerate: bool = False


@dataclass(frozen=True)
class BezoutCertificate:
    """u * m_a + v * g = 1, checked at A: u(A) m_a(A) + v(A) g(A) = I.

    Since m_a(A) = 0, the identity shows g(A) is invertible and therefore
    nonzero, so f(A) != f(0) * I.
    """

    u: UniPoly
    v: UniPoly
    m_a: UniPoly
    g: UniPoly


# ---------------------------------------------------------------------------
# Witness verification
# ---------------------------------------------------------------------------

def _evaluate(f, point):
    if isinstance(f, MultiPoly):
        if not isinstance(point, tuple):
            raise NotAWitnessError("multivariate inputs must be tuples")
        return f.eval(point)
    if isinstance(point, Matrix):
        return mat_poly_eval(f, point)
    if isinstance(point, FieldElement):
        return f.eval(point)
    raise NotAWitnessError(f"cannot evaluate at {type(point).__name__}")


def verify_witness(f, lhs, rhs) -> Witness:
    """Check lhs != rhs and f(lhs) = f(rhs); return the verified Witness."""
    if type(lhs) is not type(rhs):
        raise NotAWitnessError("witness sides have different shapes")
    if lhs == rhs:
        raise NotAWitnessError("witness sides are equal")
    left = _evaluate(f, lhs)
    right = _evaluate(f, rhs)
    if left != right:
        raise NotAWitnessError(f"images differ: {left} vs {right}")
    return Witness(lhs, rhs, left)


# ---------------------------------------------------------------------------
# Rational search grids
# ---------------------------------------------------------------------------

def rational_grid(height: int) -> list[Fraction]:
    """Reduced fractions a/b with 1 <= b <= height and |a/b| <= height.

    Ordered by (denominator, numerator); this order fixes which collision
    a search reports.
    """
    if height < 1:
        raise AlgebraError("search height must be at least 1")
    out = []
    for den in range(1, height + 1):
        for num in range(-height * den, height * den + 1):
            if math.gcd(abs(num), den) == 1:
                out.append(Fraction(num, den))
    return out


def search_rational_collisions(f: UniPoly, height: int) -> Witness | None:
    """Scan the rational grid for two points with equal values under f.

    Returns the first verified collision in grid order, or None.
    """
    if not isinstance(f.spec, Rationals):
        raise SpecMismatchError("rational collision search needs coefficients in Q")
    seen: dict[FieldElement, Fraction] = {}
    for r in rational_grid(height):
        a = f.spec.element(r)
        v = f.eval(a)
        if v in seen:
            return verify_witness(f, f.spec.element(seen[v]), a)
        seen[v] = r
    return None


def search_matrix_collisions(f: UniPoly, n: int, height: int,
                             cap: int = DEFAULT_BOUNDS.matrix_cap) -> Witness | None:
    """Scan n x n matrices with grid entries for f(A) = f(B), A != B.

    The grid has len(rational_grid(height)) ** (n * n) points; exceeding
    the cap raises rather than running for hours.
    """
    if not isinstance(f.spec, Rationals):
        raise SpecMismatchError("rational collision search needs coefficients in Q")
    grid = [f.spec.element(r) for r in rational_grid(height)]
    total = len(grid) ** (n * n)
    if total > cap:
        raise EnumerationCapExceededError(
            f"{total} candidate matrices exceed the cap {cap}; lower the height")
    seen: dict[Matrix, Matrix] = {}
    for flat in itertools.product(grid, repeat=n * n):
        a = Matrix(f.spec, [flat[i * n:(i + 1) * n] for i in range(n)])
        v = mat_poly_eval(f, a)
        if v in seen:
            return verify_witness(f, seen[v], a)
        seen[v] = a
    return None


def search_tuple_collisions(f: MultiPoly, height: int,
                            cap: int = DEFAULT_BOUNDS.matrix_cap
                            ) -> tuple[Witness | None, int]:
    """Bounded collision search on Q^m; shrinks the height to fit the cap.

    Returns (witness or None, effective height used).
    """
    if not isinstance(f.spec, Rationals):
        raise SpecMismatchError("rational collision search needs coefficients in Q")
    h = max(height, 1)
    while h > 1 and len(rational_grid(h)) ** f.m > cap:
        h -= 1
    grid = [f.spec.element(r) for r in rational_grid(h)]
    if len(grid) ** f.m > cap:
        raise EnumerationCapExceededError(
            f"even height 1 yields {len(grid) ** f.m} points over the cap {cap}")
    seen: dict[FieldElement, tuple] = {}
    for point in itertools.product(grid, repeat=f.m):
        v = f.eval(point)
        if v in seen:
            return verify_witness(f, seen[v], point), h
        seen[v] = point
    return None, h


def monotonicity_violation(f: UniPoly, height: int) -> tuple[Fraction, ...] | None:
    """Rational u < v < w showing f is not monotone: strict rise and fall.

    Used to document a NecessaryConditionFails verdict when no exact
    collision exists at the search height.
    """
    points = sorted(rational_grid(height))
    values = [f.eval(f.spec.element(x)).value for x in points]
    last_sign = 0
    last_start = 0
    for i in range(len(values) - 1):
        delta = values[i + 1] - values[i]
        sign = (delta > 0) - (delta < 0)
        if sign == 0:
            continue
        if last_sign != 0 and sign != last_sign:
            return (points[last_start], points[i], points[i + 1])
        if sign != last_sign:
            last_sign = sign
            last_start = i
    return None


# ---------------------------------------------------------------------------
# Scalar decisions
# ---------------------------------------------------------------------------

def _coefficient_spec(spec: FieldSpec) -> FieldSpec:
    return QQ if spec.is_symbolic else spec


def _check_pairing(f, spec: FieldSpec):
    if f.spec != _coefficient_spec(spec):
        raise SpecMismatchError(
            f"a polynomial over {f.spec} cannot be analyzed over {spec}; "
            "symbolic tags take rational coefficients")


def first_scalar_collision(f: UniPoly) -> Witness:
    seen: dict[FieldElement, FieldElement] = {}
    for a in f.spec.elements():
        v = f.eval(a)
        if v in seen:
            return verify_witness(f, seen[v], a)
        seen[v] = a
    raise InternalInvariantError("no collision found in a full scan")


def _reduce_mod_field_poly(f: UniPoly) -> UniPoly:
    """Reduce modulo x^q - x by folding exponents e >= q to ((e-1) mod (q-1)) + 1."""
    spec = f.spec
    q = spec.order
    out = [spec.zero()] * q
    for e, c in enumerate(f.coeffs):
        if c.is_zero():
            continue
        e2 = e if e < q else ((e - 1) % (q - 1)) + 1
        out[e2] = out[e2] + c
    return UniPoly(spec, out)


def _hermite_is_permutation(f: UniPoly) -> bool:
    """Degree-reduction permutation test over F_q.

    f permutes F_q iff it has exactly one root in F_q and, for every t
    with 1 <= t <= q - 2 not divisible by the characteristic, the
    reduction of f^t modulo x^q - x has degree at most q - 2.
    """
    spec = f.spec
    q = spec.order
    p = spec.characteristic
    roots = sum(1 for a in spec.elements() if f.eval(a).is_zero())
    if roots != 1:
        return False
    reduced_f = _reduce_mod_field_poly(f)
    ft = reduced_f
    for t in range(1, q - 1):
        if t > 1:
            ft = _reduce_mod_field_poly(ft * reduced_f)
        if t % p != 0 and ft.degree > q - 2:
            return False
    return True


def permutation_check(f: UniPoly, cross_check_cap: int = DEFAULT_BOUNDS.scalar_cap
                      ) -> PermutationCheck:
    """Run the degree-reduction test, cross-checked by exhaustive image scan.

    The scan runs when q <= cross_check_cap; a disagreement between the
    two methods is an implementation bug and raises loudly.
    """
    spec = f.spec
    if not spec.is_finite:
        raise SpecMismatchError("permutation polynomials live over finite fields")
    q = spec.order
    hermite = _hermite_is_permutation(f)
    exhaustive = None
    if q <= cross_check_cap:
        exhaustive = len({f.eval(a) for a in spec.elements()}) == q
        if exhaustive != hermite:
            raise InconsistentMethodsError(
                f"degree-reduction test says {hermite}, exhaustive scan says "
                f"{exhaustive} for {f} over {spec}")
    return PermutationCheck(hermite, hermite, exhaustive)


def simple_roots_condition(f: UniPoly, spec: FieldSpec | None = None) -> SimpleRootsReport:
    """Check that f - t has only simple roots in F for every t.

    A root b of f' in F violates the condition with t = f(b), since b then
    has multiplicity at least 2 in f - f(b).  Finite fields are scanned;
    over Q the rational root test runs on f'.  When f' vanishes
    identically (characteristic p), the condition fails degenerately.
    """
    spec = spec or f.spec
    if spec != f.spec:
        raise SpecMismatchError("report field must match the coefficient field")
    if spec.is_symbolic:
        raise SpecMismatchError("simple-roots check needs a concrete field")
    if f.degree < 1:
        raise ConstantPolynomialError("simple-roots check needs degree >= 1")
    fp = f.derivative()
    if fp.is_zero():
        b = spec.zero()
        lam = f.eval(b)
        k = root_multiplicity(f - UniPoly.constant(spec, lam), b)
        return SimpleRootsReport(False, b, lam, k, char_p_degenerate=True)
    if spec.is_finite:
        for b in spec.elements():
            if fp.eval(b).is_zero():
                lam = f.eval(b)
                k = root_multiplicity(f - UniPoly.constant(spec, lam), b)
                return SimpleRootsReport(False, b, lam, k)
        return SimpleRootsReport(True)
    roots = rational_roots(fp)
    if roots:
        b = spec.element(roots[0])
        lam = f.eval(b)
        k = root_multiplicity(f - UniPoly.constant(spec, lam), b)
        return SimpleRootsReport(False, b, lam, k)
    return SimpleRootsReport(True)


def _pure_power_center(f: UniPoly) -> FieldElement | None:
    """b with f = lc * (x - b)^deg + f(b), if f is a shifted pure power."""
    spec = f.spec
    d = f.degree
    b = -(f.coeffs[d - 1] / (spec.from_int(d) * f.leading))
    shifted = f.compose_shift(b)
    if all(shifted.coeff(i).is_zero() for i in range(1, d)):
        return b
    return None


def scalar_injectivity(f: UniPoly, spec: FieldSpec | None = None,
                       bounds: Bounds = DEFAULT_BOUNDS,
                       seed: int = DEFAULT_SEED) -> Verdict:
    """Decide injectivity of the evaluation map on the base field itself."""
    spec = spec or f.spec
    _check_pairing(f, spec)
    cspec = f.spec
    if f.degree < 1:
        w = verify_witness(f, cspec.zero(), cspec.one())
        return Verdict(Status.NOT_INJECTIVE, Reason.CONSTANT,
                       "a constant map collides everywhere", w)
    if f.degree == 1:
        return Verdict(Status.INJECTIVE, Reason.DEGREE_ONE,
                       "an affine map a*x+b with a != 0 is injective on any "
                       "algebra over the field")

    if spec.is_finite:
        check = permutation_check(f, cross_check_cap=bounds.scalar_cap)
        if check.is_permutation:
            method = ("degree-reduction test, confirmed by exhaustive scan"
                      if check.exhaustive is not None else "degree-reduction test")
            return Verdict(Status.INJECTIVE, Reason.PERMUTATION_POLYNOMIAL,
                           f"f permutes the {spec.order} field elements ({method})")
        w = first_scalar_collision(f)
        return Verdict(Status.NOT_INJECTIVE, Reason.NOT_PERMUTATION,
                       "f is not a permutation of the field; first collision "
                       "in enumeration order", w)

    if isinstance(spec, RealClosedTag):
        if is_strictly_monotone(f):
            return Verdict(Status.INJECTIVE, Reason.STRICTLY_MONOTONE,
                           "the derivative keeps one sign on the whole real "
                           "line and deg f is odd, so f is strictly monotone")
        w = search_rational_collisions(f, bounds.height)
        if w is not None:
            return Verdict(Status.NOT_INJECTIVE, Reason.NOT_MONOTONE,
                           "f is not strictly monotone; rational collision "
                           f"found at height {bounds.height}", w)
        detail = ("f is not strictly monotone on the real line, so it is not "
                  "injective on R, but no collision with rational coordinates "
                  f"was found at height {bounds.height}")
        triple = monotonicity_violation(f, min(bounds.height, 10))
        if triple is not None:
            u, v, x = triple
            detail += (f"; monotonicity violation at u={u}, v={v}, w={x}: "
                       f"f(u)={f.eval(cspec.element(u))}, "
                       f"f(v)={f.eval(cspec.element(v))}, "
                       f"f(w)={f.eval(cspec.element(x))}")
        return Verdict(Status.NECESSARY_CONDITION_FAILS, Reason.NOT_MONOTONE, detail)

    if isinstance(spec, AlgClosedTag):
        roots = rational_roots(f)
        if len(roots) >= 2:
            w = verify_witness(f, cspec.element(roots[0]), cspec.element(roots[1]))
            return Verdict(Status.NOT_INJECTIVE, Reason.DISTINCT_ROOTS_WITNESS,
                           "two distinct rational roots map to 0", w)
        if f.degree % 2 == 0:
            center = _pure_power_center(f)
            if center is not None:
                one = cspec.one()
                w = verify_witness(f, center - one, center + one)
                return Verdict(Status.NOT_INJECTIVE, Reason.REPEATED_ROOT_WITNESS,
                               "f is a shifted even power, so points placed "
                               "symmetrically around the repeated root collide", w)
        w = search_rational_collisions(f, bounds.height)
        if w is not None:
            return Verdict(Status.NOT_INJECTIVE, Reason.SEARCH_COLLISION,
                           "degree >= 2 is never injective over an "
                           "algebraically closed field; rational collision "
                           "found by search", w)
        return Verdict(
            Status.NECESSARY_CONDITION_FAILS, Reason.ROOTS_OUTSIDE_COMPUTABLE_FIELD,
            "over an algebraically closed field a polynomial of degree >= 2 "
            "always takes some value twice, but the colliding points need "
            "not have rational coordinates; no exact witness was constructed "
            f"(search height {bounds.height})")

    # Q: no sufficient criterion for degree >= 2, so never Injective here.
    w = search_rational_collisions(f, bounds.height)
    if w is not None:
        return Verdict(Status.NOT_INJECTIVE, Reason.SEARCH_COLLISION,
                       f"collision found by rational search at height {bounds.height}", w)
    report = simple_roots_condition(f, spec)
    if report.holds:
        extra = "the simple-roots necessary condition holds"
    else:
        extra = (f"the simple-roots condition fails at b={report.violating_b} "
                 f"(multiplicity {report.multiplicity_k} in f - {report.lam}), "
                 "which rules out injectivity on any algebra containing an "
                 "index-2 nilpotent but decides nothing on Q itself")
    return Verdict(Status.UNDECIDED, Reason.SEARCH_EXHAUSTED,
                   f"no rational collision with denominator and magnitude up "
                   f"to {bounds.height}; {extra}")


# ---------------------------------------------------------------------------
# Matrix algebra decisions
# ---------------------------------------------------------------------------

def matrix_injectivity(f: UniPoly, n: int, spec: FieldSpec | None = None,
                       seed: int = DEFAULT_SEED) -> Verdict:
    """Decide injectivity of A -> f(A) on the n x n matrices over F.

    Writes f = c + x^m * h with h(0) != 0 and d the least degree among the
    irreducible factors of h.  m >= 2 gives the nilpotent witness, d <= n
    the embedded-companion witness (both collide with the zero matrix);
    n < d leaves injectivity undecided, although no nonzero A can collide
    with 0 there.
    """
    spec = spec or f.spec
    _check_pairing(f, spec)
    if n < 2:
        raise DimensionTooSmallError("matrix analysis needs n >= 2; use the "
                                     "scalar analysis for n = 1")
    if f.degree < 1:
        raise ConstantPolynomialError("matrix analysis needs degree >= 1")
    if f.degree == 1:
        return Verdict(Status.INJECTIVE, Reason.DEGREE_ONE,
                       "an affine map a*x+b with a != 0 is injective on any "
                       "algebra over the field")
    cspec = f.spec
    profile = factor_profile(f, seed)
    tag_note = ""
    if spec.is_symbolic:
        tag_note = (" (the witness has coordinates in Q, which embeds in any "
                    f"{'algebraically closed' if isinstance(spec, AlgClosedTag) else 'real closed'}"
                    " field of characteristic 0)")

    if profile.m_mult >= 2:
        nilpotent = jordan_nilpotent_embed(n, cspec)
        w = verify_witness(f, nilpotent, Matrix.zeros(cspec, n))
        return Verdict(Status.NOT_INJECTIVE, Reason.NILPOTENT_WITNESS,
                       f"0 has multiplicity m={profile.m_mult} >= 2 in f - f(0), "
                       "so the index-2 nilpotent N satisfies f(N) = f(0)*I"
                       + tag_note, w)
    if profile.d is not None and profile.d <= n:
        comp = companion(profile.chosen_q)
        w = verify_witness(f, block_embed(comp, n), Matrix.zeros(cspec, n))
        return Verdict(Status.NOT_INJECTIVE, Reason.COMPANION_WITNESS,
                       f"h has an irreducible factor q = {profile.chosen_q} of "
                       f"minimal degree d={profile.d} <= n={n}; its companion "
                       "block C' satisfies f(C') = f(0)*I" + tag_note, w)

    if spec.is_symbolic:
        kind = ("algebraically closed" if isinstance(spec, AlgClosedTag)
                else "real closed")
        return Verdict(
            Status.NECESSARY_CONDITION_FAILS, Reason.ROOTS_OUTSIDE_COMPUTABLE_FIELD,
            f"over a {kind} field every irreducible factor has degree "
            f"{'1' if isinstance(spec, AlgClosedTag) else 'at most 2'} <= n={n}, "
            "so the map is not injective, but the companion construction needs "
            f"a factor over that field and the factors over Q all have degree "
            f">= {profile.d}; no exact witness was constructed")
    return Verdict(
        Status.UNDECIDED, Reason.OPEN_CASE_BELOW_D,
        f"n={n} < d={profile.d}: every nonzero A has f(A) != f(0)*I, because "
        "gcd(m_A, f - f(0)) = 1 would be contradicted (Bezout identity on the "
        "minimal polynomial); collisions between two nonzero matrices remain "
        "undecided")


def bezout_noncollision_certificate(f: UniPoly, a: Matrix,
                                    seed: int = DEFAULT_SEED) -> BezoutCertificate:
    """Certificate that f(A) != f(0) * I for a nonzero A in the n < d case.

    Computes u, v with u * m_A + v * g = 1 (g = f - f(0)) and checks the
    identity at A exactly.  The gcd is 1 precisely when A is nonsingular:
    a singular A shares the factor x with g, and the certificate then does
    not exist (GcdNotOneError), although the non-collision conclusion still
    holds.
    """
    if a.is_zero():
        raise AlgebraError("the certificate concerns nonzero matrices")
    profile = factor_profile(f, seed)
    if profile.m_mult >= 2 or profile.d is None or profile.d <= a.n:
        raise AlgebraError("the certificate applies only to profiles with n < d")
    spec = f.spec
    m_a = minimal_polynomial(a)
    g = f - UniPoly.constant(spec, f.constant_term)
    gcd, u, v = extended_gcd(m_a, g)
    if gcd.degree != 0:
        raise GcdNotOneError(
            f"gcd(m_A, g) = {gcd} is not 1; A is singular and shares the "
            "factor x with g")
    identity = Matrix.identity(spec, a.n)
    lhs = mat_poly_eval(u, a) * mat_poly_eval(m_a, a) + mat_poly_eval(v, a) * mat_poly_eval(g, a)
    if lhs != identity:
        raise InternalInvariantError("Bezout identity fails at A")
    return BezoutCertificate(u, v, m_a, g)


# ---------------------------------------------------------------------------
# Multivariate decisions
# ---------------------------------------------------------------------------

def multivariate_injectivity(f: MultiPoly, spec: FieldSpec | None = None,
                             bounds: Bounds = DEFAULT_BOUNDS) -> Verdict:
    """Decide injectivity of F^m -> F for m >= 2 variables.

    Finite fields: q^m > q forces a collision; enumeration finds the first
    one.  The reals: never injective (a continuity argument on the sphere);
    a rational collision is searched.  Algebraically closed: never
    injective (the zero locus in the last nonconstant variable is
    infinite); same search.  Q: bounded search only.
    """
    spec = spec or f.spec
    _check_pairing(f, spec)
    if f.m < 2:
        raise ArityMismatchError("multivariate analysis needs m >= 2 variables")

    if spec.is_finite:
        q = spec.order
        total = q ** f.m
        if total > bounds.matrix_cap:
            raise EnumerationCapExceededError(
                f"q^m = {total} points exceed the enumeration cap {bounds.matrix_cap}")
        elements = list(spec.elements())
        seen: dict[FieldElement, tuple] = {}
        for point in itertools.product(elements, repeat=f.m):
            v = f.eval(point)
            if v in seen:
                w = verify_witness(f, seen[v], point)
                return Verdict(Status.NOT_INJECTIVE, Reason.PIGEONHOLE,
                               f"|F^{f.m}| = {total} exceeds |F| = {q}, so the "
                               "map cannot be injective; first collision in "
                               "enumeration order", w)
            seen[v] = point
        raise InternalInvariantError("no collision in a full scan of F^m")

    w, used_height = search_tuple_collisions(f, bounds.height, bounds.matrix_cap)
    if isinstance(spec, RealClosedTag):
        if w is not None:
            return Verdict(Status.NOT_INJECTIVE, Reason.TOPOLOGICAL_ARGUMENT,
                           "a polynomial in m >= 2 variables is never injective "
                           "on R^m (restricting to the unit sphere gives a "
                           "continuous injection of a connected compact space "
                           "into R, which cannot exist); collision found at "
                           f"height {used_height}", w)
        return Verdict(Status.NECESSARY_CONDITION_FAILS, Reason.TOPOLOGICAL_ARGUMENT,
                       "a polynomial in m >= 2 variables is never injective on "
                       "R^m, but no collision with rational coordinates was "
                       f"found up to height {used_height}")
    if isinstance(spec, AlgClosedTag):
        if w is not None:
            return Verdict(Status.NOT_INJECTIVE, Reason.INFINITE_ROOT_LOCUS,
                           "over an algebraically closed field a nonconstant "
                           "polynomial in m >= 2 variables has an infinite "
                           "fiber, so the map is never injective; collision "
                           f"found at height {used_height}", w)
        return Verdict(Status.NECESSARY_CONDITION_FAILS, Reason.INFINITE_ROOT_LOCUS,
                       "never injective over an algebraically closed field for "
                       "m >= 2, but no collision with rational coordinates was "
                       f"found up to height {used_height}")
    if w is not None:
        return Verdict(Status.NOT_INJECTIVE, Reason.SEARCH_COLLISION,
                       f"collision found by rational search at height {used_height}", w)
    return Verdict(Status.UNDECIDED, Reason.SEARCH_EXHAUSTED,
                   f"no collision among rational points up to height {used_height}; "
                   "no criterion for Q^m is implemented")


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------

def brute_force_scalar(f: UniPoly, bounds: Bounds = DEFAULT_BOUNDS) -> Verdict:
    """Exhaustive scalar oracle: scan all of F_q and compare image size."""
    spec = f.spec
    if not spec.is_finite:
        raise SpecMismatchError("brute force enumerates finite fields")
    if spec.order > bounds.scalar_cap:
        raise EnumerationCapExceededError(
            f"q = {spec.order} exceeds the scalar cap {bounds.scalar_cap}")
    seen: dict[FieldElement, FieldElement] = {}
    for a in spec.elements():
        v = f.eval(a)
        if v in seen:
            w = verify_witness(f, seen[v], a)
            return Verdict(Status.NOT_INJECTIVE, Reason.EXHAUSTIVE,
                           "collision found by complete enumeration", w)
        seen[v] = a
    return Verdict(Status.INJECTIVE, Reason.EXHAUSTIVE,
                   f"all {spec.order} values are distinct")


def _all_matrices(spec: FieldSpec, n: int) -> Iterable[Matrix]:
    elements = list(spec.elements())
    for flat in itertools.product(elements, repeat=n * n):
        yield Matrix(spec, [flat[i * n:(i + 1) * n] for i in range(n)])


def brute_force_matrix(f: UniPoly, n: int, spec: FieldSpec | None = None,
                       bounds: Bounds = DEFAULT_BOUNDS) -> Verdict:
    """Exhaustive matrix oracle over a finite field: scan all of M_n(F_q)."""
    spec = spec or f.spec
    if spec != f.spec:
        raise SpecMismatchError("oracle field must match the coefficient field")
    if not spec.is_finite:
        raise SpecMismatchError("brute force enumerates finite fields")
    total = spec.order ** (n * n)
    if total > bounds.matrix_cap:
        raise EnumerationCapExceededError(
            f"q^(n^2) = {total} matrices exceed the cap {bounds.matrix_cap}")
    seen: dict[Matrix, Matrix] = {}
    for a in _all_matrices(spec, n):
        v = mat_poly_eval(f, a)
        if v in seen:
            w = verify_witness(f, seen[v], a)
            return Verdict(Status.NOT_INJECTIVE, Reason.EXHAUSTIVE,
                           "collision found by complete enumeration", w)
        seen[v] = a
    return Verdict(Status.INJECTIVE, Reason.EXHAUSTIVE,
                   f"all {total} values are distinct")


def brute_force_zero_fiber(f: UniPoly, n: int, spec: FieldSpec | None = None,
                           bounds: Bounds = DEFAULT_BOUNDS) -> list[Matrix]:
    """All nonzero A with f(A) = f(0) * I, by complete enumeration.

    Empty exactly when no nonzero matrix collides with 0; confirms the
    n < d conclusion on small instances.
    """
    spec = spec or f.spec
    if spec != f.spec:
        raise SpecMismatchError("oracle field must match the coefficient field")
    if not spec.is_finite:
        raise SpecMismatchError("brute force enumerates finite fields")
    total = spec.order ** (n * n)
    if total > bounds.matrix_cap:
        raise EnumerationCapExceededError(
            f"q^(n^2) = {total} matrices exceed the cap {bounds.matrix_cap}")
    target = Matrix.identity(spec, n).scale(f.constant_term)
    out = []
    for a in _all_matrices(spec, n):
        if not a.is_zero() and mat_poly_eval(f, a) == target:
            out.append(a)
    return out
