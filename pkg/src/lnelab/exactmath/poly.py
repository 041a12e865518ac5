"""Sparse multivariate polynomials with rational coefficients.

A :class:`Poly` is an immutable map from exponent vectors to nonzero
:class:`fractions.Fraction` coefficients over an ordered tuple of variable
names drawn from ``x, y, z, t, u, v``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from lnelab.errors import DegenerateInputError, UsageError

ALLOWED_VARIABLES = ("x", "y", "z", "t", "u", "v")

Scalar = Union[int, Fraction]
NEG_INF = -math.inf


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Poly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None,
                 variables: Sequence[str] = ("x", "y")):
        variables = tuple(variables)
        for v in variables:
            if v not in ALLOWED_VARIABLES:
                raise UsageError(f"unknown variable {v!r}")
        if len(set(variables)) != len(variables):
            raise UsageError(f"repeated variable in {variables}")
        n = len(variables)
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for variables {variables}")
            c = _as_fraction(c)
            if c:
                s = clean.get(exps, 0) + c
                if s:
                    clean[exps] = s
                else:
                    clean.pop(exps, None)
        self.variables = variables
        self.terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar, variables: Sequence[str] = ("x", "y")) -> "Poly":
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def var(cls, name: str, variables: Sequence[str] = ("x", "y")) -> "Poly":
        variables = tuple(variables)
        if name not in variables:
            raise UsageError(f"variable {name!r} not in {variables}")
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls({tuple(e): 1}, variables)

    @classmethod
    def univariate(cls, coeffs: Iterable[Scalar], var: str = "t") -> "Poly":
        """Build from dense coefficients, lowest degree first."""
        return cls({(i,): c for i, c in enumerate(coeffs)}, (var,))

    # -- basic queries --------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    @property
    def degree(self):
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def _index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise UsageError(f"variable {var!r} not among {self.variables}") from None

    def deg(self, var: str):
        i = self._index(var)
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def involves(self, var: str) -> bool:
        i = self._index(var)
        return any(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self) -> tuple[tuple, Fraction]:
        """Lexicographically largest exponent vector and its coefficient."""
        if not self.terms:
            raise DegenerateInputError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise UsageError(
                    f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(out, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw({}, self.variables)
            return Poly._raw({e: c * other for e, c in self.terms.items()}, self.variables)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c}, self.variables)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of polynomial by zero")
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(1, self.variables)
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
            other = Poly.constant(other, self.variables)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    @classmethod
    def _raw(cls, terms: dict, variables: tuple) -> "Poly":
        p = cls.__new__(cls)
        p.variables = variables
        p.terms = terms
        p._hash = None
        return p

    # -- structural operations -------------------------------------------
    def with_variables(self, variables: Sequence[str]) -> "Poly":
        """Re-embed into a variable tuple containing every variable used."""
        variables = tuple(variables)
        pos = []
        for i, v in enumerate(self.variables):
            if v in variables:
                pos.append(variables.index(v))
            elif any(e[i] for e in self.terms):
                raise UsageError(f"variable {v!r} is used but absent from {variables}")
            else:
                pos.append(None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for i, p in enumerate(pos):
                if p is not None:
                    ne[p] = e[i]
            out[tuple(ne)] = c
        return Poly(out, variables)

    def derivative(self, var: str) -> "Poly":
        i = self._index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return Poly._raw(out, self.variables)

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) == k}, self.variables)

    def lowest_degree(self):
        if not self.terms:
            return NEG_INF
        return min(sum(e) for e in self.terms)

    def coeffs_in(self, var: str) -> list["Poly"]:
        """Coefficients as polynomials (same variable tuple), index = power of ``var``."""
        i = self._index(var)
        if not self.terms:
            return []
        buckets: list[dict] = [dict() for _ in range(self.deg(var) + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            buckets[k][tuple(ne)] = c
        return [Poly._raw(b, self.variables) for b in buckets]

    @classmethod
    def from_coeffs_in(cls, coeffs: Sequence["Poly"], var: str,
                       variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        i = variables.index(var)
        out: dict[tuple, Fraction] = {}
        for k, cp in enumerate(coeffs):
            for e, c in cp.terms.items():
                ne = list(e)
                ne[i] += k
                ne = tuple(ne)
                out[ne] = out.get(ne, 0) + c
        return Poly({e: c for e, c in out.items()}, variables)

    def substitute(self, mapping: Mapping[str, "Poly | Scalar"],
                   variables: Sequence[str] | None = None) -> "Poly":
        """Compose: replace each mapped variable by a polynomial.

        The result lives in ``variables`` (default: this polynomial's tuple).
        Unmapped variables are kept as themselves.
        """
        variables = tuple(variables) if variables is not None else self.variables
        images = []
        for v in self.variables:
            img = mapping.get(v, None)
            if img is None:
                img = Poly.var(v, variables)
            elif isinstance(img, Poly):
                img = img.with_variables(variables) if img.variables != variables else img
            else:
                img = Poly.constant(img, variables)
            images.append(img)
        power_cache: list[dict[int, Poly]] = [dict() for _ in images]

        def power(i, k):
            cache = power_cache[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        result = Poly({}, variables)
        for e, c in self.terms.items():
            term = Poly.constant(c, variables)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at a point; values may be any ring elements (Fraction, complex, ...)."""
        total = 0
        vals = [values[v] for v in self.variables]
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def univariate_coeffs(self) -> list[Fraction]:
        """Dense coefficients, lowest first, for a polynomial in one variable."""
        if len(self.variables) != 1:
            used = [v for v in self.variables if self.involves(v)]
            if len(used) > 1:
                raise UsageError("polynomial is not univariate")
            idx = self.variables.index(used[0]) if used else 0
        else:
            idx = 0
        if not self.terms:
            return []
        d = max(e[idx] for e in self.terms)
        out = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            out[e[idx]] = c
        return out

    # -- normalization -----------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Integer coefficients with gcd 1 and positive lexicographic leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        _, lc = self.leading_term()
        if lc < 0:
            c = -c
        return Poly._raw({e: v / c for e, v in self.terms.items()}, self.variables)

    def monic(self) -> "Poly":
        _, lc = self.leading_term()
        return self / lc

    # -- printing ------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms by descending total degree, then descending lexicographic order."""
        return sorted(self.terms.items(), key=lambda it: (sum(it[0]), it[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                v if p == 1 else f"{v}^{p}" for v, p in zip(self.variables, e) if p)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt_rational(mag)}*{mono}"
            else:
                body = _fmt_rational(mag)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r}, variables={self.variables})"


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
