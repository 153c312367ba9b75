"""Run every invariant identity over shipped fixtures and random curves."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from .corpus import random_generic_curve
from .curveio import load_curve, load_pair
from .errors import QStrangeError
from .geometry import DEFAULT_TOLERANCES
from .immersion import build_immersion
from .invariants import compute_report
from .moves import verify_modification

STANDARD_FIXTURES = ("circle16.json", "f8.json", "k2.json")
MAX_SELFTEST_DOUBLES = 12


def fixture_path(name):
    return resources.files("qstrange") / "fixtures" / name


def move_fixture_paths():
    root = resources.files("qstrange") / "fixtures" / "moves"
    return sorted((p for p in root.iterdir() if p.name.endswith(".json")), key=lambda p: p.name)


def random_case(seed: int, k: int):
    """The k-th random curve of a selftest run: deterministic in ``(seed, k)``."""
    return random_generic_curve(seed * 100003 + k, k % (MAX_SELFTEST_DOUBLES + 1))


@dataclass
class Row:
    name: str
    checks: dict
    error: str = ""
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.error and all(self.checks.values())


def _curve_row(name, cf, tol):
    try:
        imm = build_immersion(cf.to_curve(), tol)
        report = compute_report(imm, tol=tol)
    except QStrangeError as exc:
        return Row(name, {}, f"{type(exc).__name__}: {exc}")
    notes = {"lanzat_polyak_integral": report.observations["lanzat_polyak_integral"]}
    return Row(name, dict(report.cross_checks), notes=notes)


def _random_row(args):
    seed, k, tol = args
    name = f"random[{seed}:{k}]"
    try:
        cf = random_case(seed, k)
    except QStrangeError as exc:
        return Row(name, {}, f"{type(exc).__name__}: {exc}")
    return _curve_row(name, cf, tol)


def _move_row(path, tol):
    try:
        diff = verify_modification(load_pair(path), tol)
    except QStrangeError as exc:
        return Row(f"move:{path.name}", {}, f"{type(exc).__name__}: {exc}")
    return Row(f"move:{path.name}", {"table_row": diff.passed})


def selftest(count: int = 20, seed: int = 7, tol=DEFAULT_TOLERANCES, jobs: int = 1) -> list:
    rows = [_curve_row(name, load_curve(fixture_path(name)), tol) for name in STANDARD_FIXTURES]
    rows += [_move_row(p, tol) for p in move_fixture_paths()]
    work = [(seed, k, tol) for k in range(count)]
    if jobs > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows += list(pool.map(_random_row, work))
    else:
        rows += [_random_row(w) for w in work]
    return rows


def format_matrix(rows) -> str:
    names = []
    for r in rows:
        for k in r.checks:
            if k not in names:
                names.append(k)
    width = max(len(r.name) for r in rows) if rows else 4
    lines = ["checks:"]
    lines += [f"  c{i:<2d} {n}" for i, n in enumerate(names)]
    head = " ".join(f"c{i:<2d}" for i in range(len(names)))
    lines.append(f"{'curve':<{width}} {head} result")
    for r in rows:
        if r.error:
            lines.append(f"{r.name:<{width}} ERROR {r.error}")
            continue
        cells = " ".join(("ok " if r.checks[n] else "XX ") if n in r.checks else " . "
                         for n in names)
        lines.append(f"{r.name:<{width}} {cells} {'pass' if r.passed else 'FAIL'}")
    n_int = sum(1 for r in rows if r.notes.get("lanzat_polyak_integral") is False)
    total = sum(1 for r in rows if "lanzat_polyak_integral" in r.notes)
    lines.append(f"observation: I_q has non-integral coefficients on {n_int}/{total} curves")
    n_fail = sum(1 for r in rows if not r.passed)
    lines.append(f"{len(rows) - n_fail}/{len(rows)} rows pass")
    return "\n".join(lines) + "\n"
