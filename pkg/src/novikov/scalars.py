"""Exact scalars: arbitrary-precision rationals and residues modulo a prime.

A :class:`Field` is a small immutable descriptor; calling it coerces a
Python value into a :class:`Scalar` of that field::

    >>> QQ(1, 2) + QQ(1, 3)
    5/6
    >>> F5 = Field.gf(5)
    >>> F5(3) * F5(4)
    2 (mod 5)

Scalars of different fields never mix; plain ``int`` operands are accepted
everywhere since the integers map into every field.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Either the rationals (``p is None``) or GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            p = int(p)
            if not is_prime(p):
                raise NotPrime(f"{p} is not prime")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @classmethod
    def rational(cls) -> "Field":
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def spelling(self) -> str:
        """Spelling used by the algebra document format."""
        return "rational" if self.p is None else f"gf {self.p}"

    def __call__(self, value=0, denominator=None) -> "Scalar":
        if denominator is not None:
            return self(value) / self(denominator)
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"cannot coerce {value.field!r} scalar into {self!r}")
            return value
        if isinstance(value, float):
            raise TypeError("floating point values are not exact scalars")
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.p is None:
            return Scalar(self, Fraction(value))
        if isinstance(value, int):
            return Scalar(self, value % self.p)
        frac = Fraction(value)
        if frac.denominator % self.p == 0:
            raise DivisionByZero(f"{frac} has no image in GF({self.p})")
        return Scalar(self, frac.numerator * pow(frac.denominator, -1, self.p) % self.p)

    def zero(self) -> "Scalar":
        return self(0)

    def one(self) -> "Scalar":
        return self(1)

    def elements(self):
        """All elements of a prime field, in residue order."""
        if self.p is None:
            raise ValueError("the rationals cannot be enumerated")
        return [Scalar(self, r) for r in range(self.p)]

    # function-style aliases; the operators on Scalar do the same work
    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return a.inv()

    @staticmethod
    def eq(a, b):
        return a == b


QQ = Field.rational()


class Scalar:
    """Immutable field element in canonical form.

    ``value`` is a reduced :class:`fractions.Fraction` over QQ and a residue
    in ``range(p)`` over GF(p).
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} and {other.field!r} operands")
            return other.value
        if isinstance(other, int):
            return other if self.field.p is None else other % self.field.p
        if isinstance(other, Fraction) and self.field.p is None:
            return other
        return NotImplemented

    def _wrap(self, raw):
        p = self.field.p
        return Scalar(self.field, raw if p is None else raw % p)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def __pos__(self):
        return self

    def inv(self) -> "Scalar":
        if not self.value:
            raise DivisionByZero("inverse of zero")
        p = self.field.p
        if p is None:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, p))

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = self.field(other)
        elif other.field != self.field:
            raise FieldMismatch(f"{self.field!r} and {other.field!r} operands")
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.field(other) * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} and {other.field!r} operands")
            return self.value == other.value
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return bool(self.value)

    def __int__(self):
        if self.field.p is None and self.value.denominator != 1:
            raise ValueError(f"{self.value} is not an integer")
        return int(self.value)

    def __repr__(self):
        if self.field.p is None:
            return str(self.value)
        return f"{self.value} (mod {self.field.p})"

    def __str__(self):
        return str(self.value)

    def signed(self) -> Fraction | int:
        """Representative closest to zero; handy for printing GF(p) tables."""
        p = self.field.p
        if p is None:
            return self.value
        return self.value - p if self.value > p // 2 else self.value
