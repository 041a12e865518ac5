import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lnelab.errors import DegenerateInputError, NonIsolatedSolutionsError, UsageError
from lnelab.exactmath import (
    Box, NumberField, Poly, algebraic_point_context, divexact, is_squarefree, isolate_roots,
    poly_gcd, resultant_eliminate, squarefree_part,
)
from lnelab.exactmath import dense
from lnelab.exactmath.algorithms import divide

x = Poly.var("x")
y = Poly.var("y")


def test_poly_arithmetic_and_printing():
    p = x ** 2 * y - Fraction(3, 2)
    assert p.terms == {(2, 1): 1, (0, 0): Fraction(-3, 2)}
    assert str(p) == "x^2*y - 3/2"
    assert str(-x ** 2) == "-x^2"
    assert (x + y) ** 2 == x ** 2 + 2 * x * y + y ** 2
    assert Poly({}, ("x", "y")).degree == float("-inf")
    assert not (x - x)


def test_poly_variable_mismatch():
    with pytest.raises(UsageError):
        x + Poly.var("z", ("x", "y", "z"))


def test_gcd_examples():
    assert poly_gcd(x ** 2 - y ** 2, x - y) == x - y
    p = 3 * x ** 2 * y + 6 * y
    assert poly_gcd(p, p) == p.primitive()
    assert poly_gcd(x ** 2 + 1, x - 1) == Poly.constant(1)


def test_gcd_of_zeros_is_degenerate():
    with pytest.raises(DegenerateInputError):
        poly_gcd(Poly({}), Poly({}))


def test_squarefree_examples():
    assert not is_squarefree(y ** 2)
    assert is_squarefree(x * y * (x + y))
    assert is_squarefree(x ** 3 + y ** 3)
    assert not is_squarefree((x - 2 * y) ** 2 * (x + y))
    with pytest.raises(DegenerateInputError):
        is_squarefree(Poly({}))


def test_resultant_examples():
    assert resultant_eliminate(y - x, y + x, "y") == 2 * x
    assert resultant_eliminate(y ** 2 - x ** 3, 2 * y, "y") == -4 * x ** 3
    p = x ** 2 + x * y + 1
    assert not resultant_eliminate(p, p, "y")
    with pytest.raises(UsageError):
        resultant_eliminate(p, p, "z")


def test_squarefree_part():
    assert squarefree_part((x * y - 1) ** 2 * (x + 1)) == ((x * y - 1) * (x + 1)).primitive()


def test_dense_yun_decomposition():
    # (t - 1) (t + 2)^2 (t^2 + 1)^3
    p = dense.mul(dense.mul([-1, 1], dense.mul([2, 1], [2, 1])),
                  dense.mul([1, 0, 1], dense.mul([1, 0, 1], [1, 0, 1])))
    parts = dense.squarefree_decomposition([Fraction(c) for c in p])
    assert parts[0] == [-1, 1]
    assert parts[1] == [2, 1]
    assert parts[2] == [1, 0, 1]


def test_number_field_inverse():
    K = NumberField([Fraction(-2), Fraction(0), Fraction(1)])
    a = K.generator
    assert a * a == K(2)
    inv = (a + 1).inverse()
    assert inv * (a + 1) == K.one()


def test_isolate_roots_separates_close_roots():
    eps = Fraction(1, 1000)
    coeffs = dense.mul([-1 - eps, 1], [-1 + eps, 1])
    boxes = isolate_roots(coeffs)
    assert len(boxes) == 2
    for b in boxes:
        assert b.width < Fraction(1, 2 ** 20)
    assert sorted(round(b.midpoint.real, 6) for b in boxes) == [0.999, 1.001]


def test_isolate_roots_fifth_roots_of_minus_one():
    boxes = isolate_roots([Fraction(1), 0, 0, 0, 0, Fraction(1)])
    assert len(boxes) == 5
    for b in boxes:
        assert abs(b.midpoint ** 5 + 1) < 1e-5


def test_algebraic_context_sqrt2():
    ctxs = algebraic_point_context([x ** 2 - 2, y - 1])
    assert len(ctxs) == 2
    xs = sorted(c.numeric()[0].real for c in ctxs)
    assert xs == pytest.approx([-2 ** 0.5, 2 ** 0.5])
    for c in ctxs:
        assert c.minpoly == Poly.univariate([-2, 0, 1])
        assert c.coordinate_exprs[1] == Poly.univariate([1])
        assert c.is_zero(x ** 2 - 2)
        assert not c.is_zero(x - 1)
        assert not c.interval_evaluate(x - 1).contains_zero()


def test_algebraic_context_rational_point():
    (c,) = algebraic_point_context([x - 3, y - 2])
    assert c.minpoly.degree == 1
    assert c.is_rational
    assert c.numeric() == (3, 2)


def test_algebraic_context_non_isolated():
    with pytest.raises(NonIsolatedSolutionsError):
        algebraic_point_context([x * y, x * (y + 1)])


def test_algebraic_context_irrational_both_coordinates():
    ctxs = algebraic_point_context([x ** 2 + y ** 2 - 1, x - y])
    assert len(ctxs) == 2
    for c in ctxs:
        a, b = c.numeric()
        assert abs(a - b) < 1e-12 and abs(2 * a * a - 1) < 1e-12
        assert c.is_zero(x ** 2 + y ** 2 - 1)


# ---------------------------------------------------------------- randomized oracles

def _random_factor(rng: random.Random) -> Poly:
    terms = {}
    deg = rng.randint(1, 2)
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            if rng.random() < 0.6:
                terms[(i, j)] = rng.randint(-3, 3)
    p = Poly(terms)
    return p if not p.is_constant() else x + rng.randint(-2, 2)


def _products(seed):
    rng = random.Random(seed)
    common = _random_factor(rng) if rng.random() < 0.5 else Poly.constant(1)
    a = common * _random_factor(rng)
    b = common * _random_factor(rng)
    return a, b, common


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_gcd_divides_and_is_greatest(seed):
    a, b, common = _products(seed)
    g = poly_gcd(a, b)
    assert not divide(a, g)[1] and not divide(b, g)[1]
    if not common.is_constant():
        assert not divide(g, common.primitive())[1]
    ref = sympy.gcd(sympy.sympify(str(a).replace("^", "**")), sympy.sympify(str(b).replace("^", "**")))
    assert sympy.Poly(ref, *sympy.symbols("x y")).total_degree() == max(g.degree, 0)


def _brute_common_factor(a: Poly, b: Poly, var: str) -> bool:
    fa = sympy.factor_list(sympy.sympify(str(a).replace("^", "**")))[1]
    fb = sympy.factor_list(sympy.sympify(str(b).replace("^", "**")))[1]
    s = sympy.Symbol(var)
    return any(sympy.degree(p, s) > 0 and any(sympy.expand(p - q) == 0 or sympy.expand(p + q) == 0 for q, _ in fb)
               for p, _ in fa)


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_resultant_vanishes_iff_common_factor(seed):
    a, b, _ = _products(seed)
    r = resultant_eliminate(a, b, "y")
    assert (not r) == (poly_gcd(a, b).deg("y") > 0)
    assert (not r) == _brute_common_factor(a, b, "y")


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_resultant_matches_sympy(seed):
    a, b, _ = _products(seed)
    if a.deg("y") <= 0 or b.deg("y") <= 0:
        return
    X, Y = sympy.symbols("x y")
    ref = sympy.resultant(sympy.sympify(str(a).replace("^", "**")),
                          sympy.sympify(str(b).replace("^", "**")), Y)
    got = sympy.sympify(str(resultant_eliminate(a, b, "y")).replace("^", "**"))
    assert sympy.expand(ref - got) == 0


@settings(max_examples=500, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=6), st.integers(1, 3), st.integers(-3, 3))
def test_squarefree_matches_gcd_with_derivative(coeffs, power, root):
    if not any(coeffs[1:]):
        coeffs = coeffs[:1] + [1]
    base = dense.trim([Fraction(c) for c in coeffs])
    p = dense.mul(base, [Fraction(1)])
    for _ in range(power - 1):
        p = dense.mul(p, [Fraction(-root), Fraction(1)])
    poly = Poly.univariate(p, "x").with_variables(("x", "y"))
    expected = sympy.Poly(list(reversed(p)), sympy.Symbol("x")).sqf_part().degree() == dense.degree(p)
    assert is_squarefree(poly) == expected


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=5))
def test_binary_form_squarefree_matches_sympy(coeffs):
    if not any(coeffs):
        return
    m = len(coeffs) - 1
    form = Poly({(m - k, k): c for k, c in enumerate(coeffs) if c})
    X, Y = sympy.symbols("x y")
    ref = sympy.factor_list(sum(c * X ** (m - k) * Y ** k for k, c in enumerate(coeffs)))[1]
    expected = all(e == 1 for f, e in ref if sympy.Poly(f, X, Y).total_degree() > 0)
    assert is_squarefree(form) == expected


def _random_expr(rng: random.Random) -> Poly:
    p = Poly({})
    for _ in range(rng.randint(1, 4)):
        p = p + Poly({(rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-5, 5), rng.randint(1, 3))})
    return p


@pytest.mark.parametrize("system", [
    [x ** 2 - 2, y - 1],
    [x ** 3 - 2, y - x],
    [x ** 2 + y ** 2 - 3, x - 2 * y],
])
def test_zero_test_agrees_with_interval_evaluation(system):
    rng = random.Random(7)
    for ctx in algebraic_point_context(system):
        for _ in range(100):
            e = _random_expr(rng)
            if rng.random() < 0.3:
                e = e * system[0]
            zero = ctx.is_zero(e)
            for bits in (20, 40, 60):
                box = ctx.interval_evaluate(e, bits)
                if not box.contains_zero():
                    assert not zero
                if zero:
                    assert box.contains_zero()


def test_box_arithmetic_contains_products():
    a = Box(Fraction(1), Fraction(2), Fraction(-1), Fraction(1))
    b = a * a
    for z in (1 + 1j, 2 - 1j, 1.5):
        assert b.contains(z * z) or abs(z) > 3
    assert divexact(x ** 2 - 1, x - 1) == x + 1
