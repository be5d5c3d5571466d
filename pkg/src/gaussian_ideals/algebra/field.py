"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from gaussian_ideals.errors import FieldError, ParseError

Scalar = Union[int, Fraction]

RATIONALS = "rationals"
PRIME_FIELD = "prime-field"
DEFAULT_MODULUS = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if self.modulus is None or not is_prime(self.modulus):
                raise ValueError(f"modulus must be prime, got {self.modulus}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def characteristic(self) -> int:
        return self.modulus or 0

    @property
    def zero(self) -> Scalar:
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.is_prime_field else Fraction(1)

    def coerce(self, value: int | Fraction | str) -> Scalar:
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"not a rational number: {value!r}") from exc
        if not self.is_prime_field:
            return Fraction(value)
        p = self.modulus
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise FieldError(f"denominator {value.denominator} vanishes in GF({p})")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_prime_field:
            return (a + b) % self.modulus
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_prime_field:
            return (a - b) % self.modulus
        return a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_prime_field:
            return a * b % self.modulus
        return a * b

    def neg(self, a: Scalar) -> Scalar:
        if self.is_prime_field:
            return -a % self.modulus
        return -a

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise FieldError("inverse of zero")
        if self.is_prime_field:
            return pow(a, -1, self.modulus)
        return 1 / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def format(self, a: Scalar) -> str:
        if self.is_prime_field:
            # symmetric residues read better: p - 1 prints as -1
            return str(a - self.modulus if a > self.modulus // 2 else a)
        return str(a)

    def __str__(self) -> str:
        return f"gf:{self.modulus}" if self.is_prime_field else "q"


def rationals() -> FieldSpec:
    return FieldSpec(RATIONALS)


def prime_field(modulus: int = DEFAULT_MODULUS) -> FieldSpec:
    return FieldSpec(PRIME_FIELD, modulus)


def parse_field(text: str) -> FieldSpec:
    """Parse the CLI field string: ``q`` or ``gf:<p>``."""
    value = text.strip().lower()
    if value in {"q", "qq", "rationals"}:
        return rationals()
    if value.startswith("gf:"):
        try:
            modulus = int(value[3:])
        except ValueError as exc:
            raise ParseError(f"bad modulus in field string {text!r}") from exc
        try:
            return prime_field(modulus)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"field must be 'q' or 'gf:<p>', got {text!r}")
