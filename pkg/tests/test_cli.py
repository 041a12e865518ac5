import json
import subprocess
import sys
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lnelab.cli.main import run_captured
from lnelab.cli.parser import BinOp, Neg, Num, Pow, Var, parse_curve_input
from lnelab.cli.report import CSV_HEADER, SCHEMA, jsonable
from lnelab.errors import ParseError
from lnelab.exactmath import Poly


# ---------------------------------------------------------------- parser

@pytest.mark.parametrize("text, expected", [
    ("x*y - 1", "x*y - 1"),
    ("-x^2", "-x^2"),
    ("(x - y)^2", "x^2 - 2*x*y + y^2"),
    ("3/4*x - 1/2", "3/4*x - 1/2"),
    ("x - -y", "x + y"),
    ("2*-x", "-2*x"),
])
def test_parse_examples(text, expected):
    assert str(parse_curve_input(text).expanded) == expected


def test_unary_minus_binds_looser_than_power():
    assert parse_curve_input("-x^2").ast == Neg(Pow(Var("x"), 2))


def test_projective_and_parametric_modes():
    assert parse_curve_input("x*y - z^2", "projective").expanded.variables == ("x", "y", "z")
    assert parse_curve_input("t^3", "parametric").expanded == Poly.var("t", ("t",)) ** 3


@pytest.mark.parametrize("text, fragment, column", [
    ("x + ", "expected operand", 5),
    ("x + w", "unknown variable 'w'", 5),
    ("x^-2", "exponent", 3),
    ("(x + y", "unbalanced parenthesis", 7),
    ("1/0*x", "zero denominator", 3),
    ("x $ y", "unexpected character", 3),
])
def test_parse_errors(text, fragment, column):
    with pytest.raises(ParseError) as info:
        parse_curve_input(text)
    assert fragment in str(info.value)
    assert info.value.column == column and info.value.line == 1


def test_parse_error_on_second_line():
    with pytest.raises(ParseError) as info:
        parse_curve_input("x +\n  * y")
    assert (info.value.line, info.value.column) == (2, 3)


def test_z_is_unknown_in_affine_mode():
    with pytest.raises(ParseError):
        parse_curve_input("x*z")


PREC = {"+": 1, "-": 1, "*": 2}


def render(node, need=0) -> str:
    """Print an AST with the fewest parentheses the grammar allows."""
    if isinstance(node, Num):
        v = node.value
        if v.denominator == 1:
            return str(v.numerator)
        # a fraction literal is atomic here but not in Python syntax, so bracket it under powers
        s, prec = f"{v.numerator}/{v.denominator}", 4
    elif isinstance(node, Var):
        return node.name
    elif isinstance(node, Pow):
        s, prec = f"{render(node.base, 5)}^{node.exponent}", 4
    elif isinstance(node, Neg):
        s, prec = "-" + render(node.operand, 3), 3
    else:
        prec = PREC[node.op]
        sep = "*" if node.op == "*" else f" {node.op} "
        s = render(node.left, prec) + sep + render(node.right, prec + 1)
    return f"({s})" if prec < need else s


numbers = st.builds(lambda n, d: Num(Fraction(n, d)), st.integers(0, 20), st.integers(1, 5))
variables = st.sampled_from([Var("x"), Var("y")])
asts = st.recursive(
    st.one_of(numbers, variables),
    lambda sub: st.one_of(
        st.builds(Neg, sub),
        st.builds(Pow, sub, st.integers(0, 3)),
        st.builds(BinOp, st.sampled_from(["+", "-", "*"]), sub, sub),
    ),
    max_leaves=8,
)


@settings(max_examples=1000, deadline=None)
@given(asts)
def test_round_trip(ast):
    text = render(ast)
    parsed = parse_curve_input(text)
    assert parsed.ast == ast
    assert parse_curve_input(render(parsed.ast)).ast == ast
    ref = sympy.expand(sympy.sympify(text.replace("^", "**"), rational=True))
    got = sympy.sympify(str(parsed.expanded).replace("^", "**"), rational=True) if parsed.expanded else 0
    assert sympy.expand(ref - got) == 0


# ---------------------------------------------------------------- reports

def test_jsonable():
    assert jsonable(Fraction(3, 4)) == "3/4"
    assert jsonable(Fraction(6, 3)) == 2
    assert jsonable(2 ** 60) == str(2 ** 60)
    assert jsonable(1 + 2j) == [1.0, 2.0]
    assert jsonable({1: (Fraction(1, 2),)}) == {"1": ["1/2"]}


# ---------------------------------------------------------------- commands

def test_check_exit_codes_and_text():
    code, out, _ = run_captured(["check", "x*y - 1"])
    assert code == 0 and "LNE: yes" in out
    code, out, _ = run_captured(["check", "y - x^2"])
    assert code == 0 and "LNE: no" in out and "[0:1]" in out and "multiplicity 2" in out


def test_usage_errors_exit_two():
    assert run_captured(["check"])[0] == 2
    assert run_captured(["check", "x", "--bogus"])[0] == 2
    code, _, err = run_captured(["check", "x + "])
    assert code == 2 and "expected operand" in err
    assert run_captured(["check", "7"])[0] == 1


def test_invariant_and_compare():
    code, out, _ = run_captured(["invariant", "x^3 + y^3 - x*y"])
    assert code == 0 and "(3; 1; 0; {2})" in out
    code, out, _ = run_captured(["invariant", "x*y"])
    assert code == 0 and "2 components" in out
    code, _, err = run_captured(["invariant", "y - x^2"])
    assert code == 1 and "not LNE" in err
    code, out, _ = run_captured(["compare", "x^3 + y^3 - 1", "x^3 + y^3 - x*y"])
    assert code == 0 and "equivalent: no" in out


def test_trace_command():
    code, out, _ = run_captured(["trace", "--projective", "x*y - z^2", "--line", "x + y - 3*z"])
    assert code == 0 and "general position: yes" in out and "trace LNE: yes" in out
    code, out, _ = run_captured(["trace", "--projective", "y*z - x^2", "--line", "z"])
    assert code == 0 and "general position: no" in out


def test_json_schema():
    code, out, _ = run_captured(["check", "y^2 - x^3", "--json"])
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == SCHEMA and doc["command"] == "check"
    assert set(doc) == {"schema", "tool_version", "command", "input", "result", "warnings", "settings"}
    assert doc["result"]["certificate"]["kind"] == "NonOrdinarySingularPoint"


def test_json_error_document():
    code, out, _ = run_captured(["check", "x + ", "--json"])
    assert code == 2 and json.loads(out)["error"]["type"] == "ParseError"


def test_reduced_input_warns():
    doc = json.loads(run_captured(["check", "(x*y - 1)^2", "--json"])[1])
    assert doc["warnings"] and doc["result"]["is_lne"]


def _cli(*args, env=None):
    return subprocess.run([sys.executable, "-m", "lnelab", *args], capture_output=True, env=env).stdout


def test_report_bytes_are_deterministic_across_processes():
    for args in (["check", "x^3 + y^3 - x*y", "--json"], ["invariant", "x^4 + y^4 - 1", "--monodromy", "--json"]):
        first = _cli(*args)
        assert first and first == _cli(*args)
        assert first.decode() == run_captured(args)[1]


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("LNE_LAB_SEED", "9")
    doc = json.loads(run_captured(["check", "x*y", "--json"])[1])
    assert doc["settings"]["shear_seed"] == 9
    doc = json.loads(run_captured(["check", "x*y", "--seed", "4", "--json"])[1])
    assert doc["settings"]["shear_seed"] == 4
    monkeypatch.setenv("LNE_LAB_SEED", "nine")
    assert run_captured(["check", "x*y"])[0] == 2


def test_probe_csv(tmp_path):
    path = tmp_path / "cloud.csv"
    code, out, _ = run_captured(["probe", "x*y - 1", "--radius", "3", "--pitch", "0.2", "--csv", str(path)])
    assert code == 0 and "empirical L" in out
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) > 10
    assert all(float(row.split(",")[-1]) < 1e-8 for row in lines[1:])


def test_probe_parametric_and_bad_pitch():
    code, _, _ = run_captured(["probe", "--param", "t;t^2", "--radius", "2", "--pitch", "0.1"])
    assert code == 0
    assert run_captured(["probe", "x*y", "--radius", "1", "--pitch", "-1"])[0] == 2
