"""Exact field arithmetic: prime fields F_p, small extensions F_{p^k}, and Q.

A FieldSpec names a field and owns arithmetic on canonical values; a
FieldElement is an immutable (spec, value) pair with operator overloads.
Canonical values are

  * an int in [0, p) for F_p,
  * a length-k tuple of ints in [0, p) for F_{p^k} (coefficients of the
    generator, ascending degree, reduced modulo the defining polynomial),
  * a reduced Fraction (positive denominator) for Q.

Equality of elements is equality of canonical values, so witnesses verify
bit-exactly.  There is no floating point anywhere in this package.

ACF and RCF are verdict-only tags for the algebraically closed and real
closed cases: they drive engine dispatch but never carry elements, and any
attempt to construct an element in them raises SymbolicFieldError.

Field grammar accepted by the CLI parser (cli.parse_field):
  "Q", "Fp" (such as "F7"), "Fq:modulus=<poly>" (such as
  "F9:modulus=x^2+1"), "ACF", "RCF", and "R" as an alias of "RCF".
Bare "Fq" with q = p^k, k >= 2 draws the modulus from a built-in table of
irreducible polynomials for q <= 64.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    DivisionByZeroError,
    InfiniteFieldError,
    InvalidFieldError,
    SpecMismatchError,
    SymbolicFieldError,
)

PRIME_CAP = 2 ** 31


def is_prime(n: int) -> bool:
    """Trial-division primality test, capped at desk scale (n < 2^31)."""
    if n < 2:
        return False
    if n >= PRIME_CAP:
        raise InvalidFieldError(f"characteristic {n} exceeds the 2^31 cap")
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Dense F_p[x] arithmetic on plain int lists (ascending degree, trimmed).
# Used for extension-field element arithmetic and for certifying that a
# defining modulus is irreducible; the polynomials module has its own richer
# machinery on top of FieldElement.
# ---------------------------------------------------------------------------

def _gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        out[i] = ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
    return _gf_trim(out)


def _gf_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        out[i] = ((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
    return _gf_trim(out)


def _gf_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _gf_trim(out)


def _gf_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise DivisionByZeroError("polynomial division by zero")
    r = list(a)
    _gf_trim(r)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        coeff = (r[-1] * inv_lead) % p
        q[shift] = coeff
        for i in range(db + 1):
            r[shift + i] = (r[shift + i] - coeff * b[i]) % p
        _gf_trim(r)
    return _gf_trim(q), r


def _gf_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = [(c * inv_lead) % p for c in a]
    return a


def _gf_xgcd(a: Sequence[int], b: Sequence[int], p: int):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if r0:
        inv_lead = pow(r0[-1], p - 2, p)
        scale = lambda v: [(c * inv_lead) % p for c in v]
        return scale(r0), scale(s0), scale(t0)
    return r0, s0, t0


def _gf_powmod(a: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _gf_divmod(a, mod, p)[1]
    while e > 0:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), mod, p)[1]
        base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _gf_is_irreducible(m: Sequence[int], p: int) -> bool:
    """Rabin test: monic m of degree k is irreducible over F_p iff
    x^(p^k) = x mod m and gcd(x^(p^(k/l)) - x, m) = 1 for prime l | k."""
    k = len(m) - 1
    if k < 1:
        return False
    x = [0, 1]
    for ell in _prime_divisors(k):
        h = _gf_sub(_gf_powmod(x, p ** (k // ell), m, p), x, p)
        if len(_gf_gcd(h, m, p)) != 1:
            return False
    return _gf_sub(_gf_powmod(x, p ** k, m, p), x, p) == []


def _gf_poly_str(coeffs: Sequence[int], var: str = "x") -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(var if c == 1 else f"{c}*{var}")
        else:
            parts.append(f"{var}^{i}" if c == 1 else f"{c}*{var}^{i}")
    return "+".join(parts) if parts else "0"


# Irreducible defining polynomials for the bare "Fq" spellings with
# q = p^k <= 64 and k >= 2, ascending coefficients.
BUILTIN_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),              # x^2+x+1
    (2, 3): (1, 1, 0, 1),           # x^3+x+1
    (2, 4): (1, 1, 0, 0, 1),        # x^4+x+1
    (2, 5): (1, 0, 1, 0, 0, 1),     # x^5+x^2+1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),  # x^6+x+1
    (3, 2): (1, 0, 1),              # x^2+1
    (3, 3): (1, 2, 0, 1),           # x^3+2x+1
    (5, 2): (2, 0, 1),              # x^2+2
    (7, 2): (1, 0, 1),              # x^2+1
}


class FieldSpec:
    """Abstract description of a field; concrete subclasses own arithmetic."""

    is_finite = False
    is_symbolic = False

    @property
    def order(self) -> int:
        raise InfiniteFieldError(f"{self} is not a finite field")

    @property
    def characteristic(self) -> int:
        raise SymbolicFieldError(f"{self} has no fixed characteristic")

    def element(self, value) -> "FieldElement":
        raise NotImplementedError

    def from_int(self, k: int) -> "FieldElement":
        raise NotImplementedError

    def zero(self) -> "FieldElement":
        return self.from_int(0)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def elements(self) -> Iterator["FieldElement"]:
        """Yield every element once, in the canonical enumeration order."""
        raise InfiniteFieldError(f"cannot enumerate the elements of {self}")

    def element_from_index(self, i: int) -> "FieldElement":
        raise InfiniteFieldError(f"{self} is not a finite field")

    # hooks implemented by concrete specs ----------------------------------
    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _sort_key(self, a):
        raise NotImplementedError

    def _format(self, a) -> str:
        raise NotImplementedError


class PrimeField(FieldSpec):
    """F_p, elements stored as ints in [0, p)."""

    is_finite = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise InvalidFieldError(f"{p} is not prime")
        self.p = p

    @property
    def order(self) -> int:
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p

    def element(self, value) -> "FieldElement":
        return FieldElement(self, int(value) % self.p)

    def from_int(self, k: int) -> "FieldElement":
        return FieldElement(self, k % self.p)

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.p):
            yield FieldElement(self, v)

    def element_from_index(self, i: int) -> "FieldElement":
        if not 0 <= i < self.p:
            raise IndexError(i)
        return FieldElement(self, i)

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        if a == 0:
            raise DivisionByZeroError(f"0 is not invertible in {self}")
        return pow(a, self.p - 2, self.p)

    def _sort_key(self, a):
        return a

    def _format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"F{self.p}"


class ExtensionField(FieldSpec):
    """F_{p^k} = F_p[x]/(modulus), modulus monic irreducible of degree k >= 2.

    Elements are coefficient tuples of length k, ascending degree.  The
    enumeration order indexes an element by sum(c_i * p^i), so printing the
    canonical representation highest coefficient first lists elements in
    lexicographic order.
    """

    is_finite = True

    def __init__(self, p: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise InvalidFieldError(f"{p} is not prime")
        mod = _gf_trim([c % p for c in modulus])
        if len(mod) < 3:
            raise InvalidFieldError("extension modulus must have degree >= 2")
        if mod[-1] != 1:
            raise InvalidFieldError("extension modulus must be monic")
        if not _gf_is_irreducible(mod, p):
            raise InvalidFieldError(
                f"modulus {_gf_poly_str(mod)} is reducible over F{p}")
        self.p = p
        self.modulus = tuple(mod)
        self.k = len(mod) - 1

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def characteristic(self) -> int:
        return self.p

    def _canon(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        reduced = _gf_divmod([c % self.p for c in coeffs], list(self.modulus), self.p)[1]
        return tuple(reduced) + (0,) * (self.k - len(reduced))

    def element(self, value) -> "FieldElement":
        if isinstance(value, int):
            return self.from_int(value)
        return FieldElement(self, self._canon(value))

    def from_int(self, k: int) -> "FieldElement":
        return FieldElement(self, self._canon([k]))

    def elements(self) -> Iterator["FieldElement"]:
        for i in range(self.order):
            yield self.element_from_index(i)

    def element_from_index(self, i: int) -> "FieldElement":
        if not 0 <= i < self.order:
            raise IndexError(i)
        digits = []
        for _ in range(self.k):
            digits.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(digits))

    def _add(self, a, b):
        s = _gf_add(list(a), list(b), self.p)
        return tuple(s) + (0,) * (self.k - len(s))

    def _neg(self, a):
        n = [(-c) % self.p for c in a]
        return tuple(n)

    def _mul(self, a, b):
        prod = _gf_mul(_gf_trim(list(a)), _gf_trim(list(b)), self.p)
        return self._canon(prod)

    def _inv(self, a):
        va = _gf_trim(list(a))
        if not va:
            raise DivisionByZeroError(f"0 is not invertible in {self}")
        g, s, _ = _gf_xgcd(va, list(self.modulus), self.p)
        if len(g) != 1:
            raise InvalidFieldError("modulus is not irreducible")  # unreachable
        return self._canon(s)

    def _sort_key(self, a):
        return sum(c * self.p ** i for i, c in enumerate(a))

    def _format(self, a) -> str:
        return _gf_poly_str(_gf_trim(list(a)))

    def __eq__(self, other):
        return (isinstance(other, ExtensionField)
                and other.p == self.p and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ext", self.p, self.modulus))

    def __repr__(self):
        return f"F{self.order}:modulus={_gf_poly_str(self.modulus)}"

    @classmethod
    def from_order(cls, q: int) -> "ExtensionField":
        """Look up a built-in modulus for q = p^k <= 64."""
        for (p, k), mod in BUILTIN_MODULI.items():
            if p ** k == q:
                return cls(p, mod)
        raise InvalidFieldError(
            f"no built-in modulus for F{q}; pass an explicit modulus")


class Rationals(FieldSpec):
    """Q with Fraction values (always reduced, positive denominator)."""

    @property
    def characteristic(self) -> int:
        return 0

    def element(self, value) -> "FieldElement":
        return FieldElement(self, Fraction(value))

    def from_int(self, k: int) -> "FieldElement":
        return FieldElement(self, Fraction(k))

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if a == 0:
            raise DivisionByZeroError("0 is not invertible in Q")
        return 1 / a

    def _sort_key(self, a):
        return a

    def _format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Q"


class _SymbolicTag(FieldSpec):
    is_symbolic = True
    _name = "?"

    def element(self, value):
        raise SymbolicFieldError(
            f"{self._name} is a verdict-only tag and carries no elements")

    def from_int(self, k):
        raise SymbolicFieldError(
            f"{self._name} is a verdict-only tag and carries no elements")

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(self._name)

    def __repr__(self):
        return self._name


class AlgClosedTag(_SymbolicTag):
    """Marks an algebraically closed base field.  Dispatch only."""
    _name = "ACF"


class RealClosedTag(_SymbolicTag):
    """Marks a real closed base field (the reals at the scalar level)."""
    _name = "RCF"

    @property
    def characteristic(self) -> int:
        return 0


QQ = Rationals()
ACF = AlgClosedTag()
RCF = RealClosedTag()


class FieldElement:
    """Immutable element of a concrete field, in canonical form."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatchError(
                    f"mixed fields: {self.spec} and {other.spec}")
            return other
        if isinstance(other, int):
            return self.spec.from_int(other)
        if isinstance(other, Fraction) and isinstance(self.spec, Rationals):
            return self.spec.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec._add(self.value, o.value))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, self.spec._neg(self.value))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec._mul(self.value, o.value))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec._inv(self.value))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.spec.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self == self.spec.zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.spec == self.spec and other.value == self.value
        if isinstance(other, (int, Fraction)):
            o = self._coerce(other)
            return o is not None and o.value == self.value
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def sort_key(self):
        return self.spec._sort_key(self.value)

    def __str__(self):
        return self.spec._format(self.value)

    def __repr__(self):
        return f"<{self} in {self.spec}>"


def two_adic_valuation(r) -> int | float:
    """v_2 of a rational: v_2(num) - v_2(den), with math.inf for 0.

    Accepts a FieldElement over Q, a Fraction, or an int.
    """
    if isinstance(r, FieldElement):
        if not isinstance(r.spec, Rationals):
            raise SpecMismatchError("2-adic valuation is defined over Q")
        r = r.value
    r = Fraction(r)
    if r == 0:
        return math.inf
    num, den = abs(r.numerator), r.denominator
    v = 0
    while num % 2 == 0:
        num //= 2
        v += 1
    while den % 2 == 0:
        den //= 2
        v -= 1
    return v
