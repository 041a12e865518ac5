"""Dense univariate polynomial arithmetic over an exact field.

Polynomials are Python lists of coefficients, lowest degree first, with no
trailing zeros. Coefficients may be any exact field elements supporting
``+ - * /`` and truthiness as a zero test: :class:`fractions.Fraction` and
:class:`lnelab.exactmath.numberfield.NFElement` both qualify.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence


def trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def degree(a: Sequence) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(a) - 1


def add(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return trim(out)


def neg(a: Sequence) -> list:
    return [-c for c in a]


def sub(a: Sequence, b: Sequence) -> list:
    return add(a, neg(b))


def scale(a: Sequence, c) -> list:
    if not c:
        return []
    return trim([x * c for x in a])


def mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_(a: Sequence, b: Sequence) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv = _inv(b[-1])
    if len(r) - 1 < db:
        return [], trim(r)
    q = [b[-1] * 0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * b[j]
    return trim(q), trim(r[:db])


def rem(a: Sequence, b: Sequence) -> list:
    return divmod_(a, b)[1]


def monic(a: Sequence) -> list:
    if not a:
        return []
    inv = _inv(a[-1])
    return [c * inv for c in a]


def gcd(a: Sequence, b: Sequence) -> list:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def ext_gcd(a: Sequence, b: Sequence) -> tuple[list, list, list]:
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    one = _one_like(a, b)
    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    inv = _inv(r0[-1])
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(a: Sequence) -> list:
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def squarefree_part(a: Sequence) -> list:
    a = trim(list(a))
    if len(a) <= 1:
        return monic(a)
    g = gcd(a, derivative(a))
    q, r = divmod_(a, g)
    assert not r
    return monic(q)


def squarefree_decomposition(a: Sequence) -> list[list]:
    """Yun's algorithm: monic [a_1, a_2, ...] with a = lc * prod a_i^i."""
    a = trim(list(a))
    if len(a) <= 1:
        return []
    out = []
    d = derivative(a)
    g = gcd(a, d)
    b = divmod_(a, g)[0]
    c = divmod_(d, g)[0]
    dd = sub(c, derivative(b))
    while len(b) > 1:
        ai = gcd(b, dd)
        out.append(ai)
        b = divmod_(b, ai)[0]
        c = divmod_(dd, ai)[0]
        dd = sub(c, derivative(b))
    while out and len(out[-1]) == 1:
        out.pop()
    return out


def compose_linear(a: Sequence, shift) -> list:
    """Return a(t + shift) by Horner's scheme."""
    out: list = []
    for c in reversed(a):
        out = add(mul(out, [shift, shift * 0 + 1]), [c])
    return out


def _inv(c):
    if isinstance(c, int):
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    return c.inverse()


def _one_like(a: Sequence, b: Sequence):
    for c in list(a) + list(b):
        if c:
            return c * 0 + 1
    return Fraction(1)


def map_coeffs(a: Sequence, fn: Callable) -> list:
    return trim([fn(c) for c in a])
