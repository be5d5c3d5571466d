"""Multivariate polynomials with dense exponent vectors over an exact field.

Terms are kept sorted strictly decreasing in the ring's monomial order, so
two equal polynomials are structurally identical and the leading term is
``terms[0]``.
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from gaussian_ideals.algebra.field import FieldSpec, Scalar, prime_field
from gaussian_ideals.errors import ParseError, RingMismatchError

Monomial = tuple[int, ...]
Term = tuple[Monomial, Scalar]

LEX = "lex"
DEGREVLEX = "degrevlex"
BLOCK_ELIM = "block-elim"


@lru_cache(maxsize=1 << 20)
def _order_key(kind: str, block: int, m: Monomial) -> tuple:
    if kind == LEX:
        return m
    if kind == DEGREVLEX:
        return (sum(m), *(-e for e in reversed(m)))
    head, tail = m[:block], m[block:]
    return (
        sum(head),
        *(-e for e in reversed(head)),
        sum(tail),
        *(-e for e in reversed(tail)),
    )


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = DEGREVLEX
    block: int = 0

    def __post_init__(self) -> None:
        if self.kind not in {LEX, DEGREVLEX, BLOCK_ELIM}:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == BLOCK_ELIM and self.block <= 0:
            raise ValueError("block-elim needs a positive block size")
        if self.kind != BLOCK_ELIM and self.block:
            raise ValueError(f"{self.kind} takes no block size")

    def key(self, m: Monomial) -> tuple:
        """Sort key: larger key means larger monomial."""
        return _order_key(self.kind, self.block, m)

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise RingMismatchError(f"arity mismatch: {len(a)} vs {len(b)}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    @property
    def is_graded(self) -> bool:
        return self.kind == DEGREVLEX

    def __str__(self) -> str:
        return f"{self.kind}({self.block})" if self.kind == BLOCK_ELIM else self.kind


def lex() -> MonomialOrder:
    return MonomialOrder(LEX)


def degrevlex() -> MonomialOrder:
    return MonomialOrder(DEGREVLEX)


def block_elim(k: int) -> MonomialOrder:
    return MonomialOrder(BLOCK_ELIM, k)


def order_cmp(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    return order.compare(a, b)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomials_of_degree(arity: int, degree: int) -> Iterable[Monomial]:
    """All exponent vectors of the given total degree, in lex-descending order."""
    if arity == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(arity - 1, degree - first):
            yield (first, *rest)


@dataclass(frozen=True)
class PolyRing:
    variables: tuple[str, ...]
    field: FieldSpec = dataclasses.field(default_factory=prime_field)
    order: MonomialOrder = dataclasses.field(default_factory=degrevlex)

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"variable names must be distinct: {self.variables}")
        for name in self.variables:
            if not _NAME.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        if self.order.kind == BLOCK_ELIM and self.order.block >= self.arity:
            raise ValueError(
                f"block-elim({self.order.block}) needs fewer than {self.arity} variables in the block"
            )

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError as exc:
            raise RingMismatchError(f"no variable {name!r} in ring {self.variables}") from exc

    def with_order(self, order: MonomialOrder) -> PolyRing:
        return PolyRing(self.variables, self.field, order)

    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, value: int | Scalar) -> Polynomial:
        return self.monomial((0,) * self.arity, value)

    def monomial(self, exps: Sequence[int], coeff: int | Scalar = 1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.arity:
            raise RingMismatchError(f"exponent vector {exps} does not fit arity {self.arity}")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        c = self.field.coerce(coeff)
        if not c:
            return self.zero()
        return Polynomial(self, ((exps, c),))

    def var(self, name: str | int) -> Polynomial:
        i = name if isinstance(name, int) else self.index(name)
        exps = [0] * self.arity
        exps[i] = 1
        return self.monomial(exps)

    def gens(self) -> list[Polynomial]:
        return [self.var(i) for i in range(self.arity)]

    def from_dict(self, data: Mapping[Monomial, Scalar]) -> Polynomial:
        return Polynomial.from_dict(self, data)

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(self, text)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.variables, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: tuple[Term, ...]) -> None:
        self.ring = ring
        self.terms = terms
        self._hash: int | None = None

    @classmethod
    def from_dict(cls, ring: PolyRing, data: Mapping[Monomial, Scalar]) -> Polynomial:
        key = ring.order.key
        items = [(m, c) for m, c in data.items() if c]
        items.sort(key=lambda t: key(t[0]), reverse=True)
        return cls(ring, tuple(items))

    def _check(self, other: Polynomial) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring.variables}/{self.ring.order} vs "
                f"{other.ring.variables}/{other.ring.order}"
            )

    def _coerce(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return self.ring.constant(other)  # type: ignore[arg-type]
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def as_dict(self) -> dict[Monomial, Scalar]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.variables, self.terms))
        return self._hash

    def __add__(self, other: object) -> Polynomial:
        other = self._coerce(other)
        fld = self.ring.field
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = fld.add(acc[m], c) if m in acc else c
        return Polynomial.from_dict(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def __sub__(self, other: object) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other: object) -> Polynomial:
        other = self._coerce(other)
        fld = self.ring.field
        acc: dict[Monomial, Scalar] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = monomial_mul(ma, mb)
                c = fld.mul(ca, cb)
                acc[m] = fld.add(acc[m], c) if m in acc else c
        return Polynomial.from_dict(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int | Scalar) -> Polynomial:
        fld = self.ring.field
        c = fld.coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, fld.mul(a, c)) for m, a in self.terms))

    def mul_term(self, m: Monomial, c: Scalar) -> Polynomial:
        fld = self.ring.field
        return Polynomial(
            self.ring, tuple((monomial_mul(m, t), fld.mul(a, c)) for t, a in self.terms)
        )

    @property
    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def leading_coeff(self) -> Scalar:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coeff))

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def support(self) -> set[int]:
        return {i for m, _ in self.terms for i, e in enumerate(m) if e}

    def to_ring(self, ring: PolyRing) -> Polynomial:
        """Re-express over ``ring`` by variable name; every used variable must exist there."""
        if ring == self.ring:
            return self
        if ring.field != self.ring.field:
            raise RingMismatchError(f"field mismatch: {self.ring.field} vs {ring.field}")
        positions = []
        for i, name in enumerate(self.ring.variables):
            positions.append(ring.variables.index(name) if name in ring.variables else None)
        acc: dict[Monomial, Scalar] = {}
        for m, c in self.terms:
            exps = [0] * ring.arity
            for i, e in enumerate(m):
                if not e:
                    continue
                if positions[i] is None:
                    raise RingMismatchError(
                        f"variable {self.ring.variables[i]!r} does not exist in {ring.variables}"
                    )
                exps[positions[i]] = e
            acc[tuple(exps)] = c
        return Polynomial.from_dict(ring, acc)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    fld = p.ring.field
    pieces: list[str] = []
    for m, c in p.terms:
        coeff = fld.format(c)
        mono = p.ring.format_monomial(m)
        if mono == "1":
            text = coeff
        elif coeff == "1":
            text = mono
        elif coeff == "-1":
            text = f"-{mono}"
        else:
            text = f"{coeff}*{mono}"
        if not pieces:
            pieces.append(text)
        elif text.startswith("-"):
            pieces.append(f" - {text[1:]}")
        else:
            pieces.append(f" + {text}")
    return "".join(pieces)


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TERM = re.compile(r"([+-]?)([^+-]+)")
_NUMBER = re.compile(r"\d+(/\d+)?")


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse ``3*x0^2*y1 - 1/2*y0`` style text."""
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty polynomial text")
    if compact == "0":
        return ring.zero()
    fld = ring.field
    position = 0
    acc: dict[Monomial, Scalar] = {}
    for match in _TERM.finditer(compact):
        if match.start() != position:
            raise ParseError(f"cannot parse {text!r} near offset {position}")
        position = match.end()
        sign, body = match.groups()
        coeff = fld.coerce(-1 if sign == "-" else 1)
        exps = [0] * ring.arity
        for factor in body.split("*"):
            if not factor:
                raise ParseError(f"empty factor in {text!r}")
            if _NUMBER.fullmatch(factor):
                coeff = fld.mul(coeff, fld.coerce(factor))
                continue
            name, _, power = factor.partition("^")
            if not _NAME.fullmatch(name):
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            if power and not power.isdigit():
                raise ParseError(f"bad exponent in {factor!r}")
            try:
                i = ring.index(name)
            except RingMismatchError as exc:
                raise ParseError(str(exc)) from exc
            exps[i] += int(power) if power else 1
        m = tuple(exps)
        acc[m] = fld.add(acc[m], coeff) if m in acc else coeff
    if position != len(compact):
        raise ParseError(f"trailing input in {text!r}")
    return Polynomial.from_dict(ring, acc)


class UniPoly:
    """Polynomial in the auxiliary variable t with Polynomial coefficients (index = power)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs: Sequence[Polynomial]) -> None:
        items = list(coeffs)
        for c in items:
            if c.ring != ring:
                raise RingMismatchError("UniPoly coefficients must share one ring")
        while items and not items[-1]:
            items.pop()
        self.ring = ring
        self.coeffs: tuple[Polynomial, ...] = tuple(items)

    @classmethod
    def generic(cls, ring: PolyRing, names: Sequence[str]) -> UniPoly:
        return cls(ring, [ring.var(name) for name in names])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def coefficient(self, q: int) -> Polynomial:
        return self.coeffs[q] if 0 <= q < len(self.coeffs) else self.ring.zero()

    def __add__(self, other: UniPoly) -> UniPoly:
        if self.ring != other.ring:
            raise RingMismatchError("UniPoly ring mismatch")
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.ring, [self.coefficient(q) + other.coefficient(q) for q in range(size)])

    def __mul__(self, other: UniPoly) -> UniPoly:
        return unipoly_mul(self, other)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*t^{q}" for q, c in enumerate(self.coeffs) if c)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def unipoly_mul(f: UniPoly, g: UniPoly) -> UniPoly:
    if f.ring != g.ring:
        raise RingMismatchError("UniPoly ring mismatch")
    if not f.coeffs or not g.coeffs:
        return UniPoly(f.ring, [])
    out = [f.ring.zero() for _ in range(len(f.coeffs) + len(g.coeffs) - 1)]
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = out[i + j] + a * b
    return UniPoly(f.ring, out)
