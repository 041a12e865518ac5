import pytest
from hypothesis import given, strategies as st

from corpus import CORPUS, IRREDUCIBLE_LNE, REDUCIBLE_LNE, apply_affine, curve, random_affine
from lnelab.errors import InconsistencyError, PreconditionError
from lnelab.invariants import DsgmInvariant, compute_dsgm, dsgm_equivalent, formula_genus, monodromy_genus
from lnelab.invariants.monodromy import cycle_count, orbits
from lnelab.plane import CurveInput, lne_verdict


def dsgm_of(text):
    c = curve(text)
    v = lne_verdict(c)
    return compute_dsgm(c, v, list(v.singular), v.infinity, irreducible=True)


@pytest.mark.parametrize("f, expected", [
    ("x^3 + y^3 - 1", (3, 0, 1, ())),
    ("x^3 + y^3 - x*y", (3, 1, 0, (2,))),
    ("x - 5", (1, 0, 0, ())),
])
def test_compute_dsgm(f, expected):
    d = dsgm_of(f)
    assert (d.degree, d.num_singular, d.genus, d.singular_data) == expected


def test_compute_dsgm_rejects_non_lne():
    c = curve("y^2 - x^3")
    v = lne_verdict(c)
    with pytest.raises(PreconditionError):
        compute_dsgm(c, v, list(v.singular), v.infinity, irreducible=True)


def test_compute_dsgm_detects_false_irreducibility():
    # three lines in general position: formula genus 1 - 3 = -2
    c = curve("x*y*(x + y - 1)")
    v = lne_verdict(c)
    with pytest.raises(InconsistencyError):
        compute_dsgm(c, v, list(v.singular), v.infinity, irreducible=True)


def test_dsgm_equivalence_examples():
    a = DsgmInvariant(3, 1, 0, (2,), points=((0, 0, 0, 0),))
    b = DsgmInvariant(3, 1, 0, (2,), points=((1, 0, 2, 0),))
    assert dsgm_equivalent(a, b)
    assert not dsgm_equivalent(DsgmInvariant(3, 0, 1, ()), a)
    assert not dsgm_equivalent(DsgmInvariant(4, 0, 3, ()), DsgmInvariant(4, 0, 0, ()))


@pytest.mark.parametrize("f, genus", IRREDUCIBLE_LNE)
def test_monodromy_genus_matches_formula(f, genus):
    m = monodromy_genus(curve(f))
    assert m.num_components == 1
    assert m.genus == genus == dsgm_of(f).genus
    assert m.max_residual < 1e-8


@pytest.mark.parametrize("f, n", REDUCIBLE_LNE)
def test_monodromy_counts_components(f, n):
    m = monodromy_genus(curve(f))
    assert m.num_components == n
    assert m.genus_per_component == (0,) * n


@pytest.mark.parametrize("f, _", CORPUS)
def test_monodromy_relations(f, _):
    m = monodromy_genus(curve(f))
    assert m.product_is_identity()
    assert m.euler_char % 2 == 0
    assert sum(2 - 2 * g for g in m.genus_per_component) == m.euler_char


def test_cusp_monodromy_is_a_transposition():
    m = monodromy_genus(curve("y^2 - x^3"))
    assert m.num_components == 1 and m.genus == 0
    assert sorted(cycle_count(p) for p in m.local_permutations + (m.infinity_permutation,))[0] == 1


def test_orbits_and_cycles():
    assert cycle_count((1, 0, 2)) == 2
    assert orbits([(1, 0, 2, 3), (0, 1, 3, 2)], 4) == [[0, 1], [2, 3]]


def test_affine_invariance_of_dsgm():
    import random
    rng = random.Random(3)
    base = dsgm_of("x^3 + y^3 - x*y")
    for _ in range(3):
        m, b = random_affine(rng)
        c = CurveInput.from_poly(apply_affine(curve("x^3 + y^3 - x*y").f, m, b))
        v = lne_verdict(c)
        d = compute_dsgm(c, v, list(v.singular), v.infinity, irreducible=True)
        assert dsgm_equivalent(base, d)
        assert monodromy_genus(c).genus == d.genus


def test_formula_genus():
    assert formula_genus(4, ()) == 3
    assert formula_genus(4, (3,)) == 0


invariants = st.builds(
    lambda d, g, data: DsgmInvariant(d, len(data), g, tuple(data)),
    st.integers(1, 3), st.integers(0, 1), st.lists(st.integers(2, 3), max_size=2))


@given(invariants, invariants, invariants)
def test_equivalence_is_an_equivalence_relation(a, b, c):
    assert dsgm_equivalent(a, a)
    assert dsgm_equivalent(a, b) == dsgm_equivalent(b, a)
    if dsgm_equivalent(a, b) and dsgm_equivalent(b, c):
        assert dsgm_equivalent(a, c)
