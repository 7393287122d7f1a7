"""Exact scalars: rationals (``fractions.Fraction``) and residues mod an odd prime.

Both kinds support the usual arithmetic operators, so the linear algebra code
never needs to know which field it is working over.  A :class:`Field` object
carries the field itself and knows how to coerce, parse and format its
elements.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .errors import (
    DenominatorNotInvertible,
    DenominatorZero,
    DivisionByZero,
    FieldError,
    MixedFields,
    ParseError,
)


class Fp:
    """Residue class modulo an odd prime ``p``, stored reduced in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int:
        if type(other) is Fp:
            if other.p != self.p:
                raise MixedFields(f"GF({self.p}) and GF({other.p})")
            return other.v
        if type(other) is int or type(other) is bool:
            return int(other)
        raise MixedFields(f"cannot combine GF({self.p}) with {type(other).__name__}")

    def __add__(self, other):
        return Fp(self.v + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.v - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Fp(self._coerce(other) - self.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Fp":
        if not self.v:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other) % self.p
        if not o:
            raise DivisionByZero(f"division by 0 in GF({self.p})")
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return Fp(self._coerce(other), self.p) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if type(other) is Fp:
            if other.p != self.p:
                raise MixedFields(f"GF({self.p}) and GF({other.p})")
            return self.v == other.v
        if type(other) is int:
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, Fp]

_SCALAR_RE = re.compile(r"^\s*([-−]?)(\d+)(?:\s*/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class Field:
    """Either the rationals (``p is None``) or the prime field GF(p), p odd."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
                raise FieldError(f"{self.p!r} is not a prime")
            if self.p == 2:
                raise FieldError("characteristic 2 is not supported")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> int | None:
        return self.p

    @property
    def zero(self) -> Scalar:
        return Fp(0, self.p) if self.p else Fraction(0)

    @property
    def one(self) -> Scalar:
        return Fp(1, self.p) if self.p else Fraction(1)

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction, string or element of this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            if isinstance(x, Fp):
                raise MixedFields("GF element used where a rational was expected")
            return Fraction(x)
        if type(x) is Fp:
            if x.p != self.p:
                raise MixedFields(f"GF({x.p}) element used in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DenominatorNotInvertible(f"{x} has no image in GF({self.p})")
            return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Fp(int(x), self.p)

    def vector(self, v) -> tuple:
        """Coerce every entry of ``v``; entries already in the field pass through."""
        t = Fraction if self.p is None else Fp
        if self.p is None:
            return tuple(a if type(a) is t else self(a) for a in v)
        return tuple(a if type(a) is t and a.p == self.p else self(a) for a in v)

    def parse(self, text: str) -> Scalar:
        m = _SCALAR_RE.match(text)
        if m is None:
            raise ParseError(f"not a scalar: {text!r}")
        sign, num, den = m.groups()
        a = -int(num) if sign else int(num)
        b = int(den) if den is not None else 1
        if b == 0:
            raise DenominatorZero(f"zero denominator in {text!r}")
        if self.p is None:
            return Fraction(a, b)
        if b % self.p == 0:
            raise DenominatorNotInvertible(f"{b} is not invertible mod {self.p}")
        return Fp(a * pow(b, -1, self.p), self.p)

    def fmt(self, x: Scalar) -> str:
        """Canonical text form, accepted back by :meth:`parse`."""
        return str(x)

    def elements(self) -> Iterator[Fp]:
        if self.p is None:
            raise FieldError("the rationals are infinite")
        return (Fp(i, self.p) for i in range(self.p))

    def sqrt(self, x: Scalar) -> Scalar | None:
        """A square root of ``x`` in the field, or None if ``x`` is not a square."""
        if self.p is None:
            x = Fraction(x)
            if x < 0:
                return None
            rn, rd = _isqrt_exact(x.numerator), _isqrt_exact(x.denominator)
            if rn is None or rd is None:
                return None
            return Fraction(rn, rd)
        r = sqrt_mod(int(self(x)), self.p)
        return None if r is None else Fp(r, self.p)

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


def _isqrt_exact(n: int) -> int | None:
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def parse_scalar(text: str, field: Field) -> Scalar:
    return field.parse(text)
