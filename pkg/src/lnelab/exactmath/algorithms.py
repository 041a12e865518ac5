"""GCD, exact division, resultants and squarefree tests for :class:`Poly`.

Multivariate gcds use the recursive primitive PRS: a polynomial is viewed as
univariate in its main variable with coefficients in the ring of the
remaining variables. Resultants use the subresultant PRS, whose
intermediate coefficients stay polynomial in size.
"""

from __future__ import annotations

from fractions import Fraction

from lnelab.errors import DegenerateInputError, UsageError
from lnelab.exactmath import dense
from lnelab.exactmath.poly import Poly


def _main_variable(*polys: Poly) -> str | None:
    for v in polys[0].variables:
        if any(p.involves(v) for p in polys):
            return v
    return None


def divexact(a: Poly, b: Poly) -> Poly:
    """Exact quotient a / b; raises ArithmeticError when b does not divide a."""
    q, r = divide(a, b)
    if r:
        raise ArithmeticError(f"{b} does not divide {a}")
    return q


def divide(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Lexicographic multivariate division: a = q*b + r."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lb, lcb = b.leading_term()
    q: dict = {}
    r: dict = {}
    rem = dict(a.terms)
    while rem:
        e = max(rem)
        c = rem[e]
        if all(x >= y for x, y in zip(e, lb)):
            qe = tuple(x - y for x, y in zip(e, lb))
            qc = c / lcb
            q[qe] = q.get(qe, 0) + qc
            for eb, cb in b.terms.items():
                t = tuple(x + y for x, y in zip(qe, eb))
                s = rem.get(t, 0) - qc * cb
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        else:
            r[e] = c
            del rem[e]
    return Poly(q, a.variables), Poly(r, a.variables)


def _content_in(p: Poly, var: str) -> Poly:
    g = Poly({}, p.variables)
    for c in p.coeffs_in(var):
        if c:
            g = c if not g else poly_gcd(g, c)
            if g.is_constant():
                return Poly.constant(1, p.variables)
    return g


def prem(a: Poly, b: Poly, var: str) -> Poly:
    """Pseudo-remainder of a by b with respect to ``var``."""
    db = b.deg(var)
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    cb = b.coeffs_in(var)
    lc = cb[-1]
    xv = Poly.var(var, a.variables)
    r = a
    e = a.deg(var) - db + 1
    while r and r.deg(var) >= db:
        cr = r.coeffs_in(var)
        k = len(cr) - 1
        r = r * lc - cr[-1] * b * xv ** (k - db)
        e -= 1
    if e > 0:
        r = r * lc ** e
    return r


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor, primitive with positive lexicographic leading coefficient."""
    if p.variables != q.variables:
        raise UsageError(f"variable mismatch: {p.variables} vs {q.variables}")
    if not p and not q:
        raise DegenerateInputError("gcd of two zero polynomials")
    if not p:
        return q.primitive()
    if not q:
        return p.primitive()
    var = _main_variable(p, q)
    if var is None:
        return Poly.constant(1, p.variables)
    if len([v for v in p.variables if p.involves(v) or q.involves(v)]) == 1:
        g = dense.gcd(_dense(p, var), _dense(q, var))
        return _from_dense(g, var, p.variables).primitive()
    cp = _content_in(p, var)
    cq = _content_in(q, var)
    c = poly_gcd(cp, cq)
    a = divexact(p, cp)
    b = divexact(q, cq)
    if a.deg(var) < b.deg(var):
        a, b = b, a
    while b and b.deg(var) > 0:
        r = prem(a, b, var)
        a = b
        b = divexact(r, _content_in(r, var)) if r else r
    if b:
        g = Poly.constant(1, p.variables)
    else:
        g = divexact(a, _content_in(a, var))
    return (c * g).primitive()


def _dense(p: Poly, var: str) -> list[Fraction]:
    i = p.variables.index(var)
    out = [Fraction(0)] * (max((e[i] for e in p.terms), default=-1) + 1)
    for e, c in p.terms.items():
        out[e[i]] = c
    return out


def _from_dense(coeffs, var: str, variables: tuple) -> Poly:
    i = variables.index(var)
    terms = {}
    for k, c in enumerate(coeffs):
        e = [0] * len(variables)
        e[i] = k
        terms[tuple(e)] = c
    return Poly(terms, variables)


def resultant_eliminate(p: Poly, q: Poly, var: str) -> Poly:
    """Sylvester resultant of p and q with respect to ``var`` (subresultant PRS)."""
    if p.variables != q.variables:
        raise UsageError(f"variable mismatch: {p.variables} vs {q.variables}")
    if var not in p.variables:
        raise UsageError(f"variable {var!r} not among {p.variables}")
    zero = Poly({}, p.variables)
    if not p or not q:
        return zero
    a, b = p, q
    da, db = a.deg(var), b.deg(var)
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            sign = -1
    if db == 0:
        return b ** da * sign
    g = Poly.constant(1, p.variables)
    h = Poly.constant(1, p.variables)
    while True:
        da, db = a.deg(var), b.deg(var)
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = prem(a, b, var)
        if not r:
            return zero
        a = b
        b = divexact(r, g * h ** delta)
        g = a.coeffs_in(var)[-1]
        if delta:
            h = divexact(g ** delta, h ** (delta - 1))
        db = b.deg(var)
        if db == 0:
            da = a.deg(var)
            lb = b
            if da == 1:
                res = lb
            else:
                res = divexact(lb ** da, h ** (da - 1))
            return res * sign


def is_squarefree(p: Poly) -> bool:
    """Squarefree test for a univariate polynomial or a binary form over Q."""
    if not p:
        raise DegenerateInputError("squarefree test of the zero polynomial")
    used = [v for v in p.variables if p.involves(v)]
    if len(used) <= 1:
        coeffs = p.univariate_coeffs()
        return dense.degree(dense.gcd(coeffs, dense.derivative(coeffs))) == 0
    if len(used) == 2 and p.is_homogeneous():
        i, j = (p.variables.index(v) for v in used)
        m = p.degree
        form = [Fraction(0)] * (m + 1)
        for e, c in p.terms.items():
            form[e[j]] = c
        return binary_form_squarefree(form)
    raise UsageError("is_squarefree expects a univariate polynomial or a binary form")


def binary_form_dehomogenized(form: list):
    """Shear a binary form so the pure power of its second variable survives.

    ``form[k]`` is the coefficient of ``X^(m-k) * Y^k``. Returns the univariate
    polynomial u(s) = h(1 + sigma*s, s) of exact degree m for the first shear
    sigma in 0, 1, -1, 2, -2, ... that keeps the top coefficient nonzero.
    """
    m = len(form) - 1
    for sigma in _small_integers():
        # h(X + sigma*Y, Y) expanded, then X -> 1
        coeffs = [form[0] * 0] * (m + 1)
        for k, c in enumerate(form):
            if not c:
                continue
            # c * (1 + sigma s)^(m-k) * s^k
            binom = 1
            n = m - k
            for i in range(n + 1):
                coeffs[k + i] = coeffs[k + i] + c * (binom * sigma ** i)
                binom = binom * (n - i) // (i + 1)
        if coeffs[m]:
            return coeffs
    raise AssertionError("unreachable: nonzero binary form")


def binary_form_squarefree(form: list) -> bool:
    if not any(form):
        raise DegenerateInputError("squarefree test of the zero form")
    u = dense.trim(binary_form_dehomogenized(form))
    return dense.degree(dense.gcd(u, dense.derivative(u))) == 0


def binary_form_distinct_roots(form: list) -> int:
    """Number of distinct linear factors of a nonzero binary form over C."""
    u = dense.trim(binary_form_dehomogenized(form))
    return dense.degree(u) - dense.degree(dense.gcd(u, dense.derivative(u)))


def squarefree_part(p: Poly) -> Poly:
    """Product of the distinct irreducible factors (primitive normalization)."""
    if not p:
        raise DegenerateInputError("squarefree part of the zero polynomial")
    if p.is_constant():
        return Poly.constant(1, p.variables)
    g = p
    for v in p.variables:
        if p.involves(v):
            g = poly_gcd(g, p.derivative(v))
    return divexact(p, g).primitive()


def _small_integers():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1
