"""Command-line front end: parse, dispatch to the engine, report.

Verbs
  analyze     scalar (or, with --vars m, multivariate) injectivity
  matrix      injectivity of A -> f(A) on M_n(F), requires --n
  permcheck   permutation-polynomial test over a finite field
  simpleroots the simple-roots necessary condition
  bruteforce  exhaustive oracle (scalar, or matrix with --n)
  search      bounded rational collision search (scalar, or matrix with --n)
  verify      check a claimed collision pair given as --lhs / --rhs

Exit codes: 0 Injective, 1 NotInjective, 2 Undecided or
NecessaryConditionFails, 64 usage or domain error, 70 internal invariant
failure.  Reports go to stdout as text (default) or JSON conforming to the
shipped report_schema.json; diagnostics go to stderr.

Polynomial grammar: terms like "x^4+2*x+7" with explicit '*', rational
coefficients like "3/4", unary minus, whitespace ignored; variables are x
(univariate) or x1..xm (multivariate).  Matrix literals are row-major JSON
arrays of coefficient strings, e.g. [["0","1/2"],["1","-1"]].
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from importlib import resources

from . import engine
from .engine import Bounds, Reason, Status, Verdict, Witness
from .errors import (
    AlgebraError,
    DivisionByZeroError,
    InternalInvariantError,
    InvalidFieldError,
    ParseError,
)
from .fields import (
    ACF,
    QQ,
    RCF,
    ExtensionField,
    FieldElement,
    FieldSpec,
    PrimeField,
    Rationals,
)
from .matrices import Matrix
from .polynomials import MultiPoly, UniPoly, factor_profile


# ---------------------------------------------------------------------------
# Tokenizer and polynomial parser
# ---------------------------------------------------------------------------

_OPS = set("+-*^()/")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum()):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
        elif ch in _OPS:
            tokens.append(("OP", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    return tokens


class _PolyParser:
    """Recursive descent over: expr := term (+- term)*; term := unary (* unary)*;
    unary := - unary | atom [^ INT]; atom := rational | var | ( expr )."""

    def __init__(self, text: str, spec: FieldSpec, nvars: int | None):
        self.text = text
        self.spec = spec
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.text))

    def _next(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _expect_op(self, op: str):
        kind, val, at = self._next()
        if kind != "OP" or val != op:
            raise ParseError(f"expected {op!r}", self.text, at)

    def _constant(self, value):
        if self.nvars is None:
            return UniPoly.constant(self.spec, self.spec.element(value))
        return MultiPoly.constant(self.spec, self.nvars, self.spec.element(value))

    def _variable(self, name: str, at: int):
        if self.nvars is None:
            if name != "x":
                raise ParseError(f"unknown variable {name!r}; univariate input uses x",
                                 self.text, at)
            return UniPoly.x(self.spec)
        if name == "x" and self.nvars >= 1:
            return MultiPoly.variable(self.spec, self.nvars, 0)
        if name.startswith("x") and name[1:].isdigit():
            idx = int(name[1:])
            if 1 <= idx <= self.nvars:
                return MultiPoly.variable(self.spec, self.nvars, idx - 1)
        raise ParseError(f"unknown variable {name!r}; expected x1..x{self.nvars}",
                         self.text, at)

    def parse(self):
        if not self.tokens:
            raise ParseError("empty polynomial", self.text, 0)
        value = self._expr()
        kind, val, at = self._peek()
        if kind is not None:
            raise ParseError(f"unexpected token {val!r}", self.text, at)
        return value

    def _expr(self):
        value = self._term()
        while True:
            kind, val, _ = self._peek()
            if kind == "OP" and val in "+-":
                self._next()
                rhs = self._term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def _term(self):
        value = self._unary()
        while True:
            kind, val, _ = self._peek()
            if kind == "OP" and val == "*":
                self._next()
                value = value * self._unary()
            else:
                return value

    def _unary(self):
        kind, val, _ = self._peek()
        if kind == "OP" and val == "-":
            self._next()
            return -self._unary()
        return self._power()

    def _power(self):
        base = self._atom()
        kind, val, _ = self._peek()
        if kind == "OP" and val == "^":
            self._next()
            kind, val, at = self._next()
            if kind != "INT":
                raise ParseError("exponent must be a nonnegative integer", self.text, at)
            return base ** int(val)
        return base

    def _atom(self):
        kind, val, at = self._next()
        if kind == "INT":
            num = int(val)
            kind2, val2, _ = self._peek()
            if kind2 == "OP" and val2 == "/":
                self._next()
                kind3, val3, at3 = self._next()
                if kind3 != "INT":
                    raise ParseError("denominator must be an integer", self.text, at3)
                return self._rational(num, int(val3), at)
            return self._constant(num)
        if kind == "NAME":
            return self._variable(val, at)
        if kind == "OP" and val == "(":
            value = self._expr()
            self._expect_op(")")
            return value
        raise ParseError(f"unexpected token {val!r}", self.text, at)

    def _rational(self, num: int, den: int, at: int):
        if isinstance(self.spec, Rationals):
            if den == 0:
                raise ParseError("zero denominator", self.text, at)
            return self._constant(Fraction(num, den))
        try:
            inv = self.spec.from_int(den).inv()
        except DivisionByZeroError:
            raise ParseError(f"denominator {den} is not invertible in {self.spec}",
                             self.text, at) from None
        element = self.spec.from_int(num) * inv
        if self.nvars is None:
            return UniPoly.constant(self.spec, element)
        return MultiPoly.constant(self.spec, self.nvars, element)


def parse_poly(text: str, spec: FieldSpec, nvars: int | None = None):
    """Parse a polynomial over spec; nvars selects the multivariate ring."""
    return _PolyParser(text, spec, nvars).parse()


def parse_field(text: str) -> FieldSpec:
    """Parse the field grammar: Q, Fp, Fq:modulus=<poly>, ACF, RCF, R."""
    s = text.strip()
    if s == "Q":
        return QQ
    if s == "ACF":
        return ACF
    if s in ("R", "RCF"):
        return RCF
    if s.startswith("F"):
        body = s[1:]
        mod_text = None
        if ":" in body:
            body, _, opt = body.partition(":")
            if not opt.startswith("modulus="):
                raise ParseError(f"unknown field option {opt!r}", text, 0)
            mod_text = opt[len("modulus="):]
        if not body.isdigit():
            raise ParseError(f"bad field size {body!r}", text, 0)
        q = int(body)
        p, k = _prime_power(q, text)
        if mod_text is not None:
            if k == 1:
                raise ParseError("a prime field takes no modulus", text, 0)
            mod_poly = parse_poly(mod_text, PrimeField(p))
            if mod_poly.degree != k:
                raise ParseError(
                    f"modulus degree {mod_poly.degree} does not match F{q}", text, 0)
            return ExtensionField(p, [c.value for c in mod_poly.coeffs])
        if k == 1:
            return PrimeField(p)
        return ExtensionField.from_order(q)
    raise ParseError(f"unrecognized field {text!r}", text, 0)


def _prime_power(q: int, text: str) -> tuple[int, int]:
    if q < 2:
        raise ParseError(f"field size must be at least 2, got {q}", text, 0)
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if q % p != 0:
        p = q
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ParseError(f"{q} is not a prime power", text, 0)
    return p, k


def parse_element(text: str, spec: FieldSpec) -> FieldElement:
    """Parse one field element; extension elements are polynomials in x."""
    if isinstance(spec, ExtensionField):
        over_prime = parse_poly(text, PrimeField(spec.p))
        return spec.element([c.value for c in over_prime.coeffs])
    poly = parse_poly(text, spec)
    if not poly.is_constant():
        raise ParseError(f"expected a field element, got {text!r}", text, 0)
    return poly.constant_term


def parse_matrix(text: str, spec: FieldSpec) -> Matrix:
    """Row-major JSON array of coefficient strings."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad matrix literal: {e}", text, 0) from None
    if (not isinstance(data, list) or not data
            or not all(isinstance(row, list) for row in data)):
        raise ParseError("matrix literal must be a list of rows", text, 0)
    rows = [[parse_element(str(entry), spec) for entry in row] for row in data]
    return Matrix(spec, rows)


def parse_operand(text: str, spec: FieldSpec, nvars: int | None):
    """Scalar string, JSON tuple (multivariate point), or JSON matrix."""
    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        if data and isinstance(data[0], list):
            return parse_matrix(stripped, spec)
        return tuple(parse_element(str(entry), spec) for entry in data)
    return parse_element(stripped, spec)


# ---------------------------------------------------------------------------
# Report construction
# ---------------------------------------------------------------------------

def _value_to_json(value):
    if value is None:
        return None
    if isinstance(value, FieldElement):
        return str(value)
    if isinstance(value, tuple):
        return [str(e) for e in value]
    if isinstance(value, Matrix):
        return [[str(e) for e in row] for row in value.entries]
    raise InternalInvariantError(f"unserializable value {value!r}")


def _witness_to_json(w: Witness | None):
    if w is None:
        return None
    if isinstance(w.lhs, Matrix):
        kind = "matrix"
    elif isinstance(w.lhs, tuple):
        kind = "tuple"
    else:
        kind = "scalar"
    return {"kind": kind, "lhs": _value_to_json(w.lhs), "rhs": _value_to_json(w.rhs),
            "image": _value_to_json(w.image)}


def build_report(command: str, verdict: Verdict, *, poly, field: FieldSpec,
                 n: int | None, nvars: int | None, lhs=None, rhs=None,
                 bounds: Bounds, seed: int, extra: dict | None,
                 timing_ms: int) -> dict:
    return {
        "schema_version": "1",
        "command": command,
        "inputs": {
            "poly": str(poly),
            "field": str(field),
            "n": n,
            "vars": nvars,
            "lhs": _value_to_json(lhs),
            "rhs": _value_to_json(rhs),
        },
        "bounds": {
            "height": bounds.height,
            "scalar_cap": bounds.scalar_cap,
            "matrix_cap": bounds.matrix_cap,
            "seed": seed,
        },
        "verdict": {
            "status": verdict.status.value,
            "reason": verdict.reason,
            "detail": verdict.detail,
            "witness": _witness_to_json(verdict.witness),
        },
        "theorem_clause": verdict.reason,
        "extra": extra,
        "timing_ms": timing_ms,
    }


def report_schema() -> dict:
    return json.loads(
        resources.files("evainject").joinpath("report_schema.json").read_text())


def _render_text(report: dict) -> str:
    lines = []
    v = report["verdict"]
    lines.append(f"verdict: {v['status']}")
    lines.append(f"reason: {v['reason']}")
    lines.append(f"detail: {v['detail']}")
    w = v["witness"]
    if w is not None:
        lines.append(f"witness lhs: {json.dumps(w['lhs'])}")
        lines.append(f"witness rhs: {json.dumps(w['rhs'])}")
        lines.append(f"witness image: {json.dumps(w['image'])}")
    inputs = report["inputs"]
    echoed = [f"poly: {inputs['poly']}", f"field: {inputs['field']}"]
    if inputs["n"] is not None:
        echoed.append(f"n: {inputs['n']}")
    if inputs["vars"] is not None:
        echoed.append(f"vars: {inputs['vars']}")
    lines.append("inputs: " + "  ".join(echoed))
    if report["extra"]:
        lines.append("extra: " + json.dumps(report["extra"], sort_keys=True))
    b = report["bounds"]
    lines.append(f"bounds: height={b['height']} scalar_cap={b['scalar_cap']} "
                 f"matrix_cap={b['matrix_cap']} seed={b['seed']}")
    lines.append(f"time: {report['timing_ms']} ms")
    return "\n".join(lines)


_EXIT_BY_STATUS = {
    Status.INJECTIVE.value: 0,
    Status.NOT_INJECTIVE.value: 1,
    Status.NECESSARY_CONDITION_FAILS.value: 2,
    Status.UNDECIDED.value: 2,
}

EX_USAGE = 64
EX_INTERNAL = 70


# ---------------------------------------------------------------------------
# Argument handling and dispatch
# ---------------------------------------------------------------------------

class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--poly", required=True, help="polynomial, e.g. \"x^4+2*x\"")
    common.add_argument("--field", required=True,
                        help="Q | Fp | Fq:modulus=<poly> | ACF | RCF | R")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized factorization internals "
                             "(default: EVA_INJECT_SEED or a fixed constant)")
    common.add_argument("--height", type=int, default=Bounds.height,
                        help="rational search bound on denominators and magnitude")
    common.add_argument("--scalar-cap", type=int, default=Bounds.scalar_cap,
                        dest="scalar_cap", help="largest q scanned exhaustively")
    common.add_argument("--matrix-cap", type=int, default=Bounds.matrix_cap,
                        dest="matrix_cap", help="largest enumeration size")

    parser = _Parser(prog="evainject",
                     description="injectivity of polynomial evaluation maps, "
                                 "with verified counterexamples")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="scalar or multivariate injectivity over the base field")
    p.add_argument("--vars", type=int, default=None,
                   help="number of variables for the multivariate case")

    p = sub.add_parser("matrix", parents=[common],
                       help="injectivity of A -> f(A) on n x n matrices")
    p.add_argument("--n", type=int, required=True)

    sub.add_parser("permcheck", parents=[common],
                   help="permutation-polynomial check over a finite field")
    sub.add_parser("simpleroots", parents=[common],
                   help="simple-roots necessary condition")

    p = sub.add_parser("bruteforce", parents=[common],
                       help="exhaustive oracle over a finite field")
    p.add_argument("--n", type=int, default=None)

    p = sub.add_parser("search", parents=[common],
                       help="bounded rational collision search")
    p.add_argument("--n", type=int, default=None)

    p = sub.add_parser("verify", parents=[common],
                       help="verify a claimed collision pair")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--vars", type=int, default=None)
    return parser


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("EVA_INJECT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"EVA_INJECT_SEED={env!r} is not an integer") from None
    return engine.DEFAULT_SEED


def _coefficient_spec(spec: FieldSpec) -> FieldSpec:
    return QQ if spec.is_symbolic else spec


def _dispatch(args) -> dict:
    spec = parse_field(args.field)
    cspec = _coefficient_spec(spec)
    nvars = getattr(args, "vars", None)
    if nvars is not None and nvars < 1:
        raise _UsageError("--vars must be at least 1")
    poly = parse_poly(args.poly, cspec, nvars if nvars and nvars >= 2 else None)
    bounds = Bounds(height=args.height, scalar_cap=args.scalar_cap,
                    matrix_cap=args.matrix_cap)
    seed = _resolve_seed(args)
    n = getattr(args, "n", None)
    lhs = rhs = None
    extra = None

    start = time.perf_counter()
    if args.verb == "analyze":
        if isinstance(poly, MultiPoly):
            verdict = engine.multivariate_injectivity(poly, spec, bounds)
        else:
            verdict = engine.scalar_injectivity(poly, spec, bounds, seed)
    elif args.verb == "matrix":
        verdict = engine.matrix_injectivity(poly, n, spec, seed)
        if not cspec.is_symbolic and poly.degree >= 1:
            profile = factor_profile(poly, seed)
            extra = {
                "c": str(profile.c),
                "m": profile.m_mult,
                "h": str(profile.h),
                "d": profile.d,
                "chosen_q": None if profile.chosen_q is None else str(profile.chosen_q),
            }
    elif args.verb == "permcheck":
        check = engine.permutation_check(poly, cross_check_cap=bounds.scalar_cap)
        extra = {"hermite": check.hermite, "exhaustive": check.exhaustive}
        if check.is_permutation:
            verdict = Verdict(Status.INJECTIVE, Reason.PERMUTATION_POLYNOMIAL,
                              f"f permutes the {spec.order} elements of {spec}")
        else:
            verdict = Verdict(Status.NOT_INJECTIVE, Reason.NOT_PERMUTATION,
                              "f is not a permutation polynomial",
                              engine.first_scalar_collision(poly))
    elif args.verb == "simpleroots":
        report = engine.simple_roots_condition(poly, spec)
        extra = {
            "holds": report.holds,
            "b": None if report.violating_b is None else str(report.violating_b),
            "lambda": None if report.lam is None else str(report.lam),
            "multiplicity": report.multiplicity_k,
            "char_p_degenerate": report.char_p_degenerate,
        }
        if report.holds:
            verdict = Verdict(Status.UNDECIDED, Reason.SIMPLE_ROOTS_HOLD,
                              "every f - t has only simple roots in the field; "
                              "this necessary condition decides nothing alone")
        else:
            reason = (Reason.CHAR_P_DEGENERATE if report.char_p_degenerate
                      else Reason.SIMPLE_ROOTS_FAIL)
            verdict = Verdict(
                Status.NECESSARY_CONDITION_FAILS, reason,
                f"f - {report.lam} has the root {report.violating_b} with "
                f"multiplicity {report.multiplicity_k}; the map cannot be "
                "injective on any algebra containing an index-2 nilpotent")
    elif args.verb == "bruteforce":
        if n is None:
            verdict = engine.brute_force_scalar(poly, bounds)
        else:
            verdict = engine.brute_force_matrix(poly, n, spec, bounds)
    elif args.verb == "search":
        if n is None:
            witness = engine.search_rational_collisions(poly, bounds.height)
        else:
            witness = engine.search_matrix_collisions(poly, n, bounds.height,
                                                      bounds.matrix_cap)
        if witness is not None:
            verdict = Verdict(Status.NOT_INJECTIVE, Reason.SEARCH_COLLISION,
                              f"collision found at height {bounds.height}", witness)
        else:
            verdict = Verdict(Status.UNDECIDED, Reason.SEARCH_EXHAUSTED,
                              f"no collision up to height {bounds.height}")
    elif args.verb == "verify":
        lhs = parse_operand(args.lhs, cspec, nvars)
        rhs = parse_operand(args.rhs, cspec, nvars)
        try:
            witness = engine.verify_witness(poly, lhs, rhs)
            verdict = Verdict(Status.NOT_INJECTIVE, Reason.VERIFIED_PAIR,
                              "the claimed pair verifies: distinct inputs, "
                              "equal images", witness)
        except AlgebraError as e:
            verdict = Verdict(Status.UNDECIDED, Reason.NOT_A_WITNESS,
                              f"the claimed pair does not verify: {e}")
    else:  # pragma: no cover
        raise _UsageError(f"unknown verb {args.verb}")
    timing_ms = int((time.perf_counter() - start) * 1000)

    return build_report(args.verb, verdict, poly=poly, field=spec, n=n,
                        nvars=nvars, lhs=lhs, rhs=rhs, bounds=bounds, seed=seed,
                        extra=extra, timing_ms=timing_ms)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EX_USAGE
    try:
        report = _dispatch(args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EX_USAGE
    except InternalInvariantError as e:
        print(f"internal invariant failure: {e}", file=sys.stderr)
        return EX_INTERNAL
    except (ParseError, InvalidFieldError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EX_USAGE
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return EX_USAGE
    if args.output == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(_render_text(report))
    return _EXIT_BY_STATUS[report["verdict"]["status"]]


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
