"""Command line interface.

Exit codes: 0 success, 1 unreadable input or bad usage, 2 genericity
violation, 3 failed cross-check, 4 modification mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .corpus import DEGENERATE, FAMILIES, degenerate_curve, make_standard_curve, random_generic_curve
from .curveio import CurveFile, dump_json, load_curve, load_pair
from .errors import ExpectationMismatch, GenericityError, QStrangeError
from .geometry import Tolerances
from .immersion import build_immersion, rebase_to_exterior
from .invariants import DEFAULT_TAYLOR_DEPTH, compute_report
from .laurent import half_label
from .render import ANNOTATIONS, render_svg
from .selftest import format_matrix, selftest
from .smoothing import compute_weights, smooth

EXIT_OK, EXIT_INPUT, EXIT_GENERIC, EXIT_CHECK, EXIT_MISMATCH = 0, 1, 2, 3, 4


def _tolerances(args) -> Tolerances:
    return Tolerances(args.eps_intersect, args.eps_angle, args.eps_coeff)


def _tol_json(tol):
    return {"eps_intersect": tol.eps_intersect, "eps_angle": tol.eps_angle,
            "eps_coeff": tol.eps_coeff}


def _report_text(report, imm) -> str:
    lines = [f"rot          {report.rot_closed}",
             f"n_doubles    {report.n_doubles}",
             f"base_index   {imm.curve.base_index} (exterior: {imm.base_on_exterior})",
             f"St_q         {report.st_q}",
             f"St_q (geom)  {report.st_q_geom if report.st_q_geom is not None else 'unavailable'}",
             f"P(q)         {report.p_q}",
             f"I_q          {report.i_q}",
             f"J-           {report.j_minus}",
             f"J+           {report.j_plus}",
             f"St           {report.st}",
             f"St^r         {' '.join(str(v) for v in report.tabachnikov)}"]
    for d in imm.doubles:
        lines.append(f"  double {d.id}: ind {d.index}, theta {d.theta:.6f}, "
                     f"at ({d.position.x:.6g}, {d.position.y:.6g})")
    lines.append("cross-checks:")
    for k, ok in report.cross_checks.items():
        lines.append(f"  {'pass' if ok else 'FAIL'}  {k}")
    integral = report.observations.get("lanzat_polyak_integral")
    resid = report.observations.get("lanzat_polyak_integrality_residual", 0.0)
    lines.append(f"observation: I_q integral coefficients: {integral} (residual {resid:.3g})")
    return "\n".join(lines) + "\n"


def _genericity_message(exc):
    segs = ", ".join(str(s) for s in exc.segments) or "-"
    return f"genericity violation: {exc.kind} (segments {segs}): {exc}"


def cmd_analyze(args) -> int:
    tol = _tolerances(args)
    cf = load_curve(args.curve)
    try:
        imm = build_immersion(cf.to_curve(), tol)
    except GenericityError as exc:
        print(_genericity_message(exc), file=sys.stderr)
        return EXIT_GENERIC
    if args.rebase_exterior:
        imm = rebase_to_exterior(imm)
    report = compute_report(imm, args.taylor_depth, tol)
    sys.stdout.write(_report_text(report, imm))
    if args.report:
        doc = report.to_json()
        doc.update({"tool": {"name": "qstrange", "version": __version__},
                    "tolerances": _tol_json(tol), "base_index": imm.curve.base_index,
                    "base_on_exterior": imm.base_on_exterior, "taylor_depth": args.taylor_depth})
        dump_json(doc, args.report)
    if args.svg:
        labels = tuple(x for x in args.labels.split(",") if x) if args.labels else ()
        weights = compute_weights(imm)
        Path(args.svg).write_text(render_svg(imm, smooth(imm, weights), labels, weights))
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_corpus(args) -> int:
    if args.corpus_cmd == "make":
        cf = make_standard_curve(args.family, args.param, args.resolution)
    elif args.corpus_cmd == "random":
        cf = random_generic_curve(args.seed, args.doubles, args.max_attempts)
    else:
        cf = degenerate_curve(args.kind)
    text = dump_json(cf.to_json(), args.out)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify_move(args) -> int:
    tol = _tolerances(args)
    pair = load_pair(args.pair)
    from .moves import verify_modification

    try:
        diff = verify_modification(pair, tol)
    except GenericityError as exc:
        print(_genericity_message(exc), file=sys.stderr)
        return EXIT_GENERIC
    except ExpectationMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"{pair.kind} ({pair.orientation}), ind = {pair.ind_param}")
    names = {"p": "P(q)", "i": "I_q", "st_q": "St_q"}
    for key, label in names.items():
        want = diff.expected.get(key)
        status = "-" if want is None else ("ok" if key not in diff.mismatches else "MISMATCH")
        shown = "(not tabulated)" if want is None else str(want)
        print(f"  d{label:<5} {str(diff.delta[key]):<40} expected {shown:<40} {status}")
    if args.report:
        dump_json(diff.to_json(), args.report)
    return EXIT_OK if diff.passed else EXIT_MISMATCH


def cmd_selftest(args) -> int:
    rows = selftest(args.curves, args.seed, _tolerances(args), args.jobs)
    sys.stdout.write(format_matrix(rows))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_CHECK


def cmd_fixtures(args) -> int:
    """Regenerate every shipped fixture into ``args.out``."""
    from .moves import curated_pairs

    out = Path(args.out)
    (out / "moves").mkdir(parents=True, exist_ok=True)
    dump_json(make_standard_curve("circle", 0, 16).to_json(), out / "circle16.json")
    dump_json(make_standard_curve("figure-eight", 0, 64).to_json(), out / "f8.json")
    dump_json(make_standard_curve("flower", 1, 64).to_json(), out / "k2.json")
    for kind in DEGENERATE:
        dump_json(degenerate_curve(kind).to_json(), out / f"degenerate_{kind}.json")
    drawn, reversed_ = curated_pairs()
    for p in drawn + reversed_:
        tag = "" if p.orientation == "drawn" else "_reversed"
        dump_json(p.to_json(), out / "moves" / f"{p.kind}{tag}_i{p.ind_param}.json")
    return EXIT_OK


def _add_tolerance_args(p):
    d = Tolerances()
    p.add_argument("--eps-intersect", type=float, default=d.eps_intersect)
    p.add_argument("--eps-angle", type=float, default=d.eps_angle)
    p.add_argument("--eps-coeff", type=float, default=d.eps_coeff)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qstrange",
                                 description="Invariants of generic plane curves.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("analyze", help="compute all invariants of a curve file")
    p.add_argument("curve")
    p.add_argument("--rebase-exterior", action="store_true",
                   help="move the base vertex onto an exterior arc first")
    p.add_argument("--taylor-depth", type=int, default=DEFAULT_TAYLOR_DEPTH)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--svg", help="write an SVG drawing here")
    p.add_argument("--labels", default="indices,weights",
                   help=f"comma-separated subset of {','.join(ANNOTATIONS)}")
    _add_tolerance_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("corpus", help="generate curve files")
    csub = p.add_subparsers(dest="corpus_cmd", required=True)
    m = csub.add_parser("make", help="standard family member")
    m.add_argument("--family", choices=FAMILIES, required=True)
    m.add_argument("--param", type=int, default=0)
    m.add_argument("--resolution", type=int, default=64)
    m.add_argument("--out")
    r = csub.add_parser("random", help="seeded random generic curve")
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--doubles", type=int, required=True)
    r.add_argument("--max-attempts", type=int, default=2000)
    r.add_argument("--out")
    g = csub.add_parser("degenerate", help="deliberately non-generic curve")
    g.add_argument("--kind", choices=DEGENERATE, required=True)
    g.add_argument("--out")
    f = csub.add_parser("fixtures", help="regenerate all shipped fixtures")
    f.add_argument("--out", required=True)
    f.set_defaults(func=cmd_fixtures)
    p.set_defaults(func=cmd_corpus)
    for c in (m, r, g):
        c.set_defaults(func=cmd_corpus)

    p = sub.add_parser("verify-move", help="check a modification pair against the table")
    p.add_argument("pair")
    p.add_argument("--report")
    _add_tolerance_args(p)
    p.set_defaults(func=cmd_verify_move)

    p = sub.add_parser("selftest", help="run all identities on fixtures and random curves")
    p.add_argument("--curves", type=int, default=20)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--jobs", type=int, default=1)
    _add_tolerance_args(p)
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GenericityError as exc:
        print(_genericity_message(exc), file=sys.stderr)
        return EXIT_GENERIC
    except ExpectationMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (QStrangeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
