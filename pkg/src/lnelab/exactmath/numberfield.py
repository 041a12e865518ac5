"""Arithmetic in simple algebraic extensions Q(alpha) = Q[t]/(m(t)).

``m`` must be irreducible over Q, so that every nonzero residue is
invertible and "reduces to zero modulo m" is an exact zero test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from lnelab.exactmath import dense


class NumberField:
    __slots__ = ("modulus", "degree", "_hash")

    def __init__(self, modulus: Sequence[Fraction]):
        m = dense.monic(dense.trim([Fraction(c) for c in modulus]))
        if len(m) < 2:
            raise ValueError("modulus must have positive degree")
        self.modulus = tuple(m)
        self.degree = len(m) - 1
        self._hash = hash(self.modulus)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"NumberField({list(map(str, self.modulus))})"

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, (int, Fraction)):
            return NFElement(self, (Fraction(value),) if value else ())
        return NFElement(self, tuple(dense.rem([Fraction(c) for c in value], list(self.modulus))))

    @property
    def generator(self) -> "NFElement":
        return self([0, 1])

    def zero(self) -> "NFElement":
        return NFElement(self, ())

    def one(self) -> "NFElement":
        return NFElement(self, (Fraction(1),))


class NFElement:
    """Residue class of a rational polynomial modulo an irreducible modulus."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other) -> "NFElement":
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("mixing elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, tuple(dense.add(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, tuple(dense.sub(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(dense.scale(self.coeffs, Fraction(other))))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        prod = dense.mul(self.coeffs, other.coeffs)
        if len(prod) > self.field.degree:
            prod = dense.rem(prod, list(self.field.modulus))
        return NFElement(self.field, tuple(prod))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in number field")
        g, s, _ = dense.ext_gcd(list(self.coeffs), list(self.field.modulus))
        if len(g) != 1:
            raise ArithmeticError("modulus is not irreducible: zero divisor found")
        return NFElement(self.field, tuple(dense.rem(s, list(self.field.modulus))))

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, NFElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def numeric(self, alpha: complex) -> complex:
        return complex(dense.evaluate([complex(float(c)) for c in self.coeffs], alpha))

    def __repr__(self):
        return f"NFElement({[str(c) for c in self.coeffs]})"
