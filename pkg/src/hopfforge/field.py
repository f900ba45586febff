"""Exact ground fields: the rationals and prime fields F_p.

Field elements are plain Python values in normal form: ``Fraction`` for the
rationals and ``int`` in ``range(p)`` for F_p.  :class:`Scalar` wraps such a
value together with its field for callers that want checked arithmetic.
"""

from __future__ import annotations

import operator
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch

RawScalar = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rational numbers (``p is None``) or the prime field F_p."""

    kind: str = "rational"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", int(p))

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"rational"`` or ``"fp:<p>"``."""
        text = text.strip()
        if text in ("rational", "Q", "QQ"):
            return cls.rational()
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad prime field spec {text!r}") from None
            return cls.prime(p)
        raise ValueError(f"bad field spec {text!r}")

    def __str__(self) -> str:
        return "rational" if self.p is None else f"fp:{self.p}"

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    # -- raw element handling -------------------------------------------------

    def element(self, value) -> RawScalar:
        """Normal form of an int, Fraction or scalar string in this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar over {value.field} used over {self}")
            return value.value
        if isinstance(value, str):
            return self.parse_scalar(value)
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def parse_scalar(self, text: str) -> RawScalar:
        """Parse ``"n"`` or ``"n/d"``."""
        text = text.strip()
        num, _, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if den else 1
        except ValueError:
            raise ValueError(f"bad scalar literal {text!r}") from None
        if d == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return self.element(Fraction(n, d))

    def format_scalar(self, value: RawScalar) -> str:
        if self.p is None:
            value = Fraction(value)
            if value.denominator == 1:
                return str(value.numerator)
            return f"{value.numerator}/{value.denominator}"
        return str(int(value) % self.p)

    @property
    def zero(self) -> RawScalar:
        return Fraction(0) if self.p is None else 0

    @property
    def one(self) -> RawScalar:
        return Fraction(1) if self.p is None else 1

    def add(self, a: RawScalar, b: RawScalar) -> RawScalar:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: RawScalar, b: RawScalar) -> RawScalar:
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a: RawScalar, b: RawScalar) -> RawScalar:
        return a * b if self.p is None else (a * b) % self.p

    def inv(self, a: RawScalar) -> RawScalar:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(a) if self.p is None else pow(int(a), -1, self.p)

    def div(self, a: RawScalar, b: RawScalar) -> RawScalar:
        return self.mul(a, self.inv(b))

    def neg(self, a: RawScalar) -> RawScalar:
        return -a if self.p is None else (-a) % self.p

    def power(self, a: RawScalar, n: int) -> RawScalar:
        if n < 0:
            return self.power(self.inv(a), -n)
        return a**n if self.p is None else pow(int(a), n, self.p)

    def random_element(self, rng: random.Random, bound: int = 3) -> RawScalar:
        """Uniform element of F_p, or a small random rational over Q."""
        if self.p is not None:
            return rng.randrange(self.p)
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def multiplicative_order(self, a: RawScalar) -> int | None:
        """Order of ``a`` in the unit group, or ``None`` if it is infinite."""
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        if self.p is None:
            if a == 1:
                return 1
            return 2 if a == -1 else None
        x, n = int(a) % self.p, 1
        while x != 1:
            x = x * a % self.p
            n += 1
        return n


@dataclass(frozen=True)
class Scalar:
    """A field element bound to its field, with checked arithmetic."""

    field: FieldSpec
    value: RawScalar

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.element(self.value))

    def _other(self, other) -> RawScalar:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} versus {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    def _binary(self, other, fn, reverse=False):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        a = self.value
        if reverse:
            a, b = b, a
        return Scalar(self.field, fn(a, b))

    def __add__(self, other):
        return self._binary(other, self.field.add)

    def __radd__(self, other):
        return self._binary(other, self.field.add, True)

    def __sub__(self, other):
        return self._binary(other, self.field.sub)

    def __rsub__(self, other):
        return self._binary(other, self.field.sub, True)

    def __mul__(self, other):
        return self._binary(other, self.field.mul)

    def __rmul__(self, other):
        return self._binary(other, self.field.mul, True)

    def __truediv__(self, other):
        return self._binary(other, self.field.div)

    def __rtruediv__(self, other):
        return self._binary(other, self.field.div, True)

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __str__(self) -> str:
        return self.field.format_scalar(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field}, {self})"


_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply one of ``+ - * /`` to two scalars over the same field."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} versus {b.field}")
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)
