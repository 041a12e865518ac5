"""Acceptance suite: one PASS/FAIL line per criterion, at the pinned tolerances and time limits.

Run under pytest (lines are printed even with output capture on) or directly with
``python3 tests/test_acceptance.py``.
"""

import math
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import CORPUS, IRREDUCIBLE_LNE, REDUCIBLE_LNE, apply_affine, curve, random_affine  # noqa: E402
from lnelab.cli.main import run_captured  # noqa: E402
from lnelab.cli.parser import parse_curve_input  # noqa: E402
from lnelab.invariants import compute_dsgm, dsgm_equivalent, monodromy_genus  # noqa: E402
from lnelab.plane import (  # noqa: E402
    CurveInput, InfinityFailure, NonOrdinarySingularPoint, general_position_trace, lne_verdict,
)
from lnelab.probe import (  # noqa: E402
    empirical_lne_constant, hint_from_verdict, sample_curve, witness_series,
)
from lnelab.probe.witness import INFINITY_SCALES, LOCAL_SCALES  # noqa: E402


def timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def criterion_1():
    (code_a, out_a, _), ta = timed(run_captured, ["check", "x*y-1"])
    (code_b, _, _), _ = timed(run_captured, ["check", "y-x^2"])
    v, tb = timed(lne_verdict, curve("y-x^2"))
    w = v.certificate.witness if isinstance(v.certificate, InfinityFailure) else None
    ok = (code_a == 0 and "LNE: yes" in out_a and code_b == 0 and not v.is_lne and w is not None
          and w.label() == "[0:1]" and w.multiplicity == 2 and ta < 1 and tb < 1)
    return ok, f"hyperbola LNE, parabola InfinityFailure {w.label() if w else None} (m={w.multiplicity if w else None}); {ta:.2f}s, {tb:.2f}s"


def criterion_2():
    cusp, t1 = timed(lne_verdict, curve("y^2-x^3"))
    node, t2 = timed(lne_verdict, curve("x*y"))
    folium, t3 = timed(lne_verdict, curve("x^3+y^3-x*y"))
    cert = cusp.certificate
    ok = (isinstance(cert, NonOrdinarySingularPoint) and cert.record.multiplicity == 2
          and cert.record.cone_str() == "y^2" and not cusp.is_lne
          and all(r.ordinary for r in node.singular) and node.is_lne and folium.is_lne
          and max(t1, t2, t3) < 1)
    return ok, f"cusp m=2 cone y^2, node ordinary, folium LNE; slowest {max(t1, t2, t3):.2f}s"


def criterion_3():
    t = time.perf_counter()
    checks = bad = 0
    rng = random.Random(2024)
    for f, lne in CORPUS:
        base = curve(f).f
        for _ in range(20):
            m, b = random_affine(rng)
            checks += 1
            bad += lne_verdict(CurveInput.from_poly(apply_affine(base, m, b))).is_lne is not lne
        for k in (Fraction(-7, 3), Fraction(5, 11)):
            bad += lne_verdict(CurveInput.from_poly(base * k)).is_lne is not lne
    dt = time.perf_counter() - t
    return bad == 0 and checks == 240 and dt < 120, f"{checks} affine checks plus rescalings, {bad} changed; {dt:.1f}s"


def criterion_4():
    t = time.perf_counter()
    ok, worst = True, 0.0
    for f, genus in IRREDUCIBLE_LNE:
        c = curve(f)
        m = monodromy_genus(c)
        v = lne_verdict(c)
        d = compute_dsgm(c, v, list(v.singular), v.infinity, irreducible=True)
        ok &= m.num_components == 1 and m.genus == d.genus == genus
        worst = max(worst, m.max_residual)
    for f, n in REDUCIBLE_LNE:
        m = monodromy_genus(curve(f))
        ok &= m.num_components == n and m.genus_per_component == (0,) * n
        worst = max(worst, m.max_residual)
    dt = time.perf_counter() - t
    return ok and worst < 1e-8 and dt < 60, f"genera and component counts agree; residual {worst:.1e}; {dt:.1f}s"


def _dsgm(c):
    v = lne_verdict(c)
    return compute_dsgm(c, v, list(v.singular), v.infinity, irreducible=True)


def criterion_5():
    fermat, folium = _dsgm(curve("x^3+y^3-1")), _dsgm(curve("x^3+y^3-x*y"))
    m = [[Fraction(2), Fraction(1, 3)], [Fraction(-1), Fraction(1)]]
    moved = _dsgm(CurveInput.from_poly(apply_affine(curve("x^3+y^3-x*y").f, m, [Fraction(3), Fraction(-1, 2)])))
    ok = not dsgm_equivalent(fermat, folium) and dsgm_equivalent(folium, moved)
    return ok, f"Fermat {fermat} vs folium {folium}: different; folium vs moved {moved}: equivalent"


def criterion_6():
    results = []
    t = time.perf_counter()
    cloud = sample_curve(curve("x*y"), 1.0, 0.01, special_points=[(0j, 0j)])
    L = empirical_lne_constant(cloud).empirical_L
    ta = time.perf_counter() - t
    results.append(("a", abs(L / math.sqrt(2) - 1) <= 0.05 and ta < 120, f"L={L:.4f} ({ta:.0f}s)"))
    for tag, f, scales, test in (
        ("b", "y^2-x^3", LOCAL_SCALES, lambda e: abs(e + 0.5) <= 0.075),
        ("c", "y-x^2", INFINITY_SCALES, lambda e: e >= 0.5),
        ("d", "x*y-1", INFINITY_SCALES, lambda e: abs(e) <= 0.1),
    ):
        t = time.perf_counter()
        c = curve(f)
        e = witness_series(c, hint_from_verdict(lne_verdict(c)), scales).fitted_exponent
        dt = time.perf_counter() - t
        results.append((tag, test(e) and dt < 120, f"exp={e:.3f} ({dt:.0f}s)"))
    return all(r[1] for r in results), "; ".join(f"({tag}) {d}" for tag, _, d in results)


def criterion_7():
    t = time.perf_counter()
    F = parse_curve_input("x*y - z^2", "projective").expanded
    rng = random.Random(7)
    traces = lne = 0
    while traces < 10:
        coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)]
        if not any(coeffs):
            continue
        H = parse_curve_input("{}*x + {}*y + {}*z".format(*(f"({q})" for q in coeffs)), "projective").expanded
        gp, trace = general_position_trace(F, H)
        if gp:
            traces += 1
            lne += lne_verdict(trace).is_lne
    # The tangent configuration is the parabola yz - x^2 with z = 0. The hyperbola xy - z^2 meets
    # z = 0 transversally at [1:0:0] and [0:1:0], which is why its affine trace xy - 1 is LNE.
    Z = parse_curve_input("z", "projective").expanded
    gp_parabola, _ = general_position_trace(parse_curve_input("y*z - x^2", "projective").expanded, Z)
    gp_hyperbola, _ = general_position_trace(F, Z)
    dt = time.perf_counter() - t
    ok = lne == 10 and not gp_parabola and gp_hyperbola and dt < 30
    return ok, (f"{lne}/10 traces LNE; tangent yz-x^2 vs z gp={gp_parabola}; "
                f"xy-z^2 vs z gp={gp_hyperbola}; {dt:.1f}s")


PROPERTY_TESTS = [
    "tests/test_exactmath.py::test_gcd_divides_and_is_greatest",
    "tests/test_exactmath.py::test_resultant_vanishes_iff_common_factor",
    "tests/test_exactmath.py::test_resultant_matches_sympy",
    "tests/test_exactmath.py::test_squarefree_matches_gcd_with_derivative",
    "tests/test_invariants.py::test_monodromy_relations",
    "tests/test_cli.py::test_round_trip",
    "tests/test_cli.py::test_report_bytes_are_deterministic_across_processes",
]


def criterion_8():
    root = Path(__file__).resolve().parent.parent
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *PROPERTY_TESTS],
                          cwd=root, capture_output=True, text=True)
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr.strip()
    return proc.returncode == 0, summary


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


def report(n, ok, detail):
    return f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + report(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failed += not ok
        print(report(n, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
