"""Command-line entry point: ``lne-lab check|invariant|compare|probe|trace``.

Exit status is 0 when the command produced its report (a "not LNE" verdict
included), 1 for analysis failures, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import os
import sys

import numpy as np

from lnelab.cli.parser import parse_curve_input
from lnelab.cli.report import Report, error_json, write_cloud_csv
from lnelab.errors import DomainError, InconsistencyError, LneLabError, PreconditionError, UsageError
from lnelab.invariants import compute_dsgm, dsgm_equivalent, monodromy_genus
from lnelab.plane import CurveInput, general_position_trace, lne_verdict
from lnelab.probe.estimate import DEFAULT_PAIRS, DEFAULT_SEED, PairPolicy, empirical_lne_constant
from lnelab.probe.sampling import FiberSolver, sample_curve
from lnelab.probe.witness import hint_from_infinity, hint_from_point, witness_pair, witness_series

SEED_ENV = "LNE_LAB_SEED"


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="lne-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    c = sub.add_parser("check", help="decide whether a curve is LNE")
    c.add_argument("expr")
    c.add_argument("--seed", type=int)
    c.add_argument("--json", action="store_true")

    i = sub.add_parser("invariant", help="DSGM invariant of an LNE curve")
    i.add_argument("expr")
    i.add_argument("--monodromy", action="store_true", help="include the full monodromy data")
    i.add_argument("--json", action="store_true")

    m = sub.add_parser("compare", help="decide DSGM equivalence of two LNE curves")
    m.add_argument("expr_a")
    m.add_argument("expr_b")
    m.add_argument("--json", action="store_true")

    pr = sub.add_parser("probe", help="numerical inner/outer distance probe")
    pr.add_argument("expr", nargs="?")
    pr.add_argument("--param", help='parametrization "x(t);y(t)"')
    pr.add_argument("--radius", type=float, required=True)
    pr.add_argument("--pitch", type=float, required=True)
    pr.add_argument("--witness", help="x0,y0 or inf")
    pr.add_argument("--pairs", type=int, default=DEFAULT_PAIRS)
    pr.add_argument("--csv", help="write the sample cloud to this CSV file")
    pr.add_argument("--json", action="store_true")

    t = sub.add_parser("trace", help="general position of a projective curve and a line")
    t.add_argument("--projective", required=True)
    t.add_argument("--line", required=True)
    t.add_argument("--json", action="store_true")
    return p


def _seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _curve(text: str) -> tuple[CurveInput, list[str]]:
    c = CurveInput.from_poly(parse_curve_input(text).expanded)
    warnings = [f"input reduced to squarefree part {c.f}"] if c.was_reduced else []
    return c, warnings


def _format_point(coords) -> str:
    def one(z: complex) -> str:
        z = complex(z)
        if abs(z.imag) <= 1e-12 * max(1.0, abs(z)):
            return f"{z.real:.6g}"
        return f"{z.real:.6g}{z.imag:+.6g}i"
    return "(" + ", ".join(one(z) for z in coords) + ")"


def cmd_check(args) -> tuple[Report, str]:
    seed = _seed(args.seed)
    c, warn = _curve(args.expr)
    v = lne_verdict(c, seed)
    rep = Report("check", {"expr": args.expr}, v.describe(), warn, {"shear_seed": seed})
    lines = [f"curve: {c.f}", f"LNE: {'yes' if v.is_lne else 'no'}",
             f"certificate: {v.certificate.kind}"]
    if not v.is_lne:
        w = v.certificate.describe()["witness"]
        if v.certificate.kind == "InfinityFailure":
            lines.append(f"  direction {w['direction']} with multiplicity {w['multiplicity']}")
        else:
            lines.append(f"  point {_format_point(v.certificate.record.point.numeric())} multiplicity {w['multiplicity']}"
                         f" tangent cone {w['tangent_cone']}")
    lines.append("connectivity: implied (plane Bezout)")
    return rep, "\n".join(warn + lines)


def _invariant_data(c: CurveInput, seed: int):
    v = lne_verdict(c, seed)
    if not v.is_lne:
        raise PreconditionError(f"{c.f} is not LNE ({v.certificate.kind}); the invariant is undefined")
    mono = monodromy_genus(c)
    out = {"verdict": v.describe(), "components": mono.num_components,
           "component_evidence": f"components: {mono.num_components} (monodromy)"}
    dsgm = None
    if mono.num_components == 1:
        dsgm = compute_dsgm(c, v, list(v.singular), v.infinity, irreducible=True)
        if dsgm.genus != mono.genus:
            raise InconsistencyError(f"formula genus {dsgm.genus} != monodromy genus {mono.genus}")
        out["dsgm"] = dsgm.describe()
    else:
        out["component_genera"] = list(mono.genus_per_component)
        out["euler_char"] = mono.euler_char
    return v, mono, dsgm, out


def cmd_invariant(args) -> tuple[Report, str]:
    seed = _seed(None)
    c, warn = _curve(args.expr)
    _, mono, dsgm, out = _invariant_data(c, seed)
    if args.monodromy:
        out["monodromy"] = mono.describe()
    rep = Report("invariant", {"expr": args.expr}, out, warn, {"shear_seed": seed})
    if dsgm is not None:
        text = [f"curve: {c.f}", f"DSGM: {dsgm}", out["component_evidence"]]
    else:
        text = [f"curve: {c.f}", f"reducible: {mono.num_components} components (monodromy)",
                f"component genera: {list(mono.genus_per_component)}", f"euler characteristic: {mono.euler_char}"]
    if args.monodromy:
        text.append(f"permutations: {[list(p) for p in mono.local_permutations]}"
                    f" at infinity {list(mono.infinity_permutation)}")
    return rep, "\n".join(warn + text)


def cmd_compare(args) -> tuple[Report, str]:
    seed = _seed(None)
    results = []
    warnings = []
    for text in (args.expr_a, args.expr_b):
        c, warn = _curve(text)
        warnings += warn
        _, mono, dsgm, _ = _invariant_data(c, seed)
        if dsgm is None:
            raise PreconditionError(f"{c.f} is reducible ({mono.num_components} components); DSGM needs irreducible curves")
        results.append(dsgm)
    eq = dsgm_equivalent(*results)
    out = {"equivalent": eq, "a": results[0].describe(), "b": results[1].describe()}
    rep = Report("compare", {"expr_a": args.expr_a, "expr_b": args.expr_b}, out, warnings, {"shear_seed": seed})
    return rep, "\n".join(warnings + [f"A: {results[0]}", f"B: {results[1]}", f"equivalent: {'yes' if eq else 'no'}"])


def _parametrization(text: str):
    parts = [s for s in text.split(";")]
    if len(parts) != 2:
        raise UsageError("plane probe needs exactly two components \"x(t);y(t)\"")
    comps = []
    for part in parts:
        poly = parse_curve_input(part, "parametric").expanded
        coeffs = np.array([complex(c) for c in reversed(poly.univariate_coeffs())] or [0j])
        comps.append(coeffs)
    return lambda t: tuple(np.polyval(cf, t) for cf in comps)


def _parse_witness(text: str):
    if text.strip().lower() == "inf":
        return "inf"
    try:
        a, b = text.split(",")
        return complex(a.strip().replace("i", "j")), complex(b.strip().replace("i", "j"))
    except ValueError:
        raise UsageError(f"witness must be 'x0,y0' or 'inf', got {text!r}") from None


def cmd_probe(args) -> tuple[Report, str]:
    if (args.expr is None) == (args.param is None):
        raise UsageError("give exactly one of a curve expression or --param")
    if args.radius <= 0 or args.pitch <= 0:
        raise DomainError("radius and pitch must be positive")
    seed = _seed(None)
    warn: list[str] = []
    policy = PairPolicy(m=args.pairs, seed=DEFAULT_SEED + seed)
    payload: dict = {}
    witness_data: dict = {}
    if args.param is not None:
        if args.witness:
            raise UsageError("--witness needs a curve expression")
        cloud = sample_curve(_parametrization(args.param), args.radius, args.pitch)
        residuals = np.zeros(len(cloud))
        report = empirical_lne_constant(cloud, pairs=policy, expect_connected=False)
    else:
        c, warn = _curve(args.expr)
        v = lne_verdict(c, seed)
        special = [r.point.numeric() for r in v.singular]
        cloud = sample_curve(c, args.radius, args.pitch, special_points=special)
        solver = FiberSolver(c.f)
        residuals = solver.relative_residual(cloud.points[:, 0], cloud.points[:, 1])
        hint = None
        if args.witness:
            w = _parse_witness(args.witness)
            if w == "inf":
                inf = v.infinity
                wit = inf.witnesses() or list(inf.points_at_infinity)
                hint = hint_from_infinity(wit[0])
            else:
                hint = hint_from_point(c, w, v.singular)
        extra = ()
        if hint is not None and hint.kind == "local":
            pair = witness_pair(c, hint, min(args.radius / 4, 0.1))
            extra = (pair,)
        policy = PairPolicy(m=args.pairs, seed=DEFAULT_SEED + seed, extra=extra)
        report = empirical_lne_constant(cloud, pairs=policy, expect_connected=v.is_lne or v.singular == ())
        payload["verdict_is_lne"] = v.is_lne
        if hint is not None:
            series = witness_series(c, hint)
            witness_data["witness"] = hint.describe()
            witness_data["witness_series"] = [[s, r] for s, r in series.witness_series]
            witness_data["fitted_exponent"] = series.fitted_exponent
    payload.update(report.describe())
    payload.update(witness_data)
    payload["cloud_size"] = len(cloud)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="ascii") as fh:
            write_cloud_csv(cloud, residuals, fh)
    settings = {"radius": args.radius, "pitch": args.pitch, "pairs": args.pairs,
                "pair_seed": DEFAULT_SEED + seed, "residual_tol": cloud.generation["residual_tol"]}
    rep = Report("probe", {"expr": args.expr, "param": args.param, "witness": args.witness},
                 payload, warn, settings)
    lines = [f"samples: {len(cloud)}", f"pairs: {report.pair_count}",
             f"empirical L: {report.empirical_L:.6f}"]
    if witness_data:
        lines.append(f"witness series: " + ", ".join(f"{s:.4g}:{r:.4g}" for s, r in payload["witness_series"]))
        lines.append(f"fitted exponent: {payload['fitted_exponent']:.4f}")
    return rep, "\n".join(warn + lines)


def cmd_trace(args) -> tuple[Report, str]:
    seed = _seed(None)
    F = parse_curve_input(args.projective, "projective").expanded
    H = parse_curve_input(args.line, "projective").expanded
    gp, trace = general_position_trace(F, H)
    out = {"general_position": gp}
    lines = [f"general position: {'yes' if gp else 'no'}"]
    if gp:
        v = lne_verdict(trace, seed)
        out["trace"] = str(trace.f)
        out["trace_verdict"] = v.describe()
        lines += [f"affine trace: {trace.f}", f"trace LNE: {'yes' if v.is_lne else 'no'}"]
    rep = Report("trace", {"projective": args.projective, "line": args.line}, out, [], {"shear_seed": seed})
    return rep, "\n".join(lines)


COMMANDS = {"check": cmd_check, "invariant": cmd_invariant, "compare": cmd_compare,
            "probe": cmd_probe, "trace": cmd_trace}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        report, text = COMMANDS[args.command](args)
    except (UsageError, DomainError) as exc:
        print(f"lne-lab {args.command}: usage error: {exc}", file=stderr)
        if getattr(args, "json", False):
            print(error_json(args.command, type(exc).__name__, str(exc)), file=stdout)
        return 2
    except LneLabError as exc:
        print(f"lne-lab {args.command}: {type(exc).__name__}: {exc}", file=stderr)
        if getattr(args, "json", False):
            print(error_json(args.command, type(exc).__name__, str(exc)), file=stdout)
        return 1
    print(report.to_json() if args.json else text, file=stdout)
    return 0


def main(argv=None) -> None:
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
    sys.exit(code)


def run_captured(argv) -> tuple[int, str, str]:
    """Run a command and capture (exit status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = run(argv, out, err)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
    return code, out.getvalue(), err.getvalue()
