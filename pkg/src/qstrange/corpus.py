"""Standard curve families and seeded random generic curves."""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .curveio import CurveFile
from .errors import GenerationExhausted, GenericityError, NoExteriorVertex, UnsupportedParam
from .geometry import Tolerances
from .immersion import PolygonalCurve, build_immersion, rebase_to_exterior

FAMILIES = ("circle", "figure-eight", "flower")
MAX_RANDOM_DOUBLES = 14

# Random curves must survive small perturbations, so candidates are screened
# with much wider margins than the analysis defaults.
QUALITY = Tolerances(eps_intersect=2e-3, eps_angle=0.05, eps_coeff=1e-9)


def _sample(f, n):
    # half-step offset keeps vertices off the symmetric crossing points
    ts = (np.arange(n) + 0.5) * (2 * math.pi / n)
    return [(float(x), float(y)) for x, y in (f(t) for t in ts)]


def make_standard_curve(family: str, param: int = 0, resolution: int = 64) -> CurveFile:
    """Polygonal circle, lemniscate or flower with ``param`` inner loops.

    ``flower(i)`` traces ``e^{it} + r e^{i(i+1)t}`` with ``r = 1.5/(i+1)``:
    one big counterclockwise loop carrying ``i`` small counterclockwise
    loops, rotation number ``i + 1``.
    """
    if family not in FAMILIES:
        raise UnsupportedParam(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if not isinstance(param, int) or param < 0:
        raise UnsupportedParam("param must be a non-negative integer")
    if resolution < 16:
        raise UnsupportedParam("resolution must be at least 16")

    if family == "circle":
        pts = _sample(lambda t: (math.cos(t), math.sin(t)), resolution)
        return CurveFile(tuple(pts), 0)
    if family == "figure-eight":
        pts = _sample(lambda t: (math.sin(t), 0.5 * math.sin(2 * t)), resolution)
        return _exterior(CurveFile(tuple(pts), 0))

    if param == 0:
        return make_standard_curve("circle", 0, resolution)
    i = param
    if resolution < 24 * i:
        raise UnsupportedParam(f"flower({i}) needs resolution >= {24 * i}")
    r = 1.5 / (i + 1)
    pts = _sample(lambda t: (math.cos(t) + r * math.cos((i + 1) * t),
                             math.sin(t) + r * math.sin((i + 1) * t)), resolution)
    return _exterior(CurveFile(tuple(pts), 0))


def _exterior(cf: CurveFile) -> CurveFile:
    imm = rebase_to_exterior(build_immersion(cf.to_curve()))
    return CurveFile.from_curve(imm.curve)


def _trig_curve(rng, n_vertices, max_modes):
    modes = int(rng.integers(2, max_modes + 1))
    k = np.arange(1, modes + 1)
    amp = rng.normal(size=(4, modes)) / k ** 1.2
    t = (np.arange(n_vertices) + rng.random()) * (2 * math.pi / n_vertices)
    ct, st = np.cos(np.outer(t, k)), np.sin(np.outer(t, k))
    x = ct @ amp[0] + st @ amp[1]
    y = ct @ amp[2] + st @ amp[3]
    scale = max(np.ptp(x), np.ptp(y))
    return np.column_stack([x, y]) / scale


def random_generic_curve(seed: int, target_doubles: int, max_attempts: int = 2000,
                         resolution: int = 240) -> CurveFile:
    """Deterministic random generic curve with exactly ``target_doubles`` crossings.

    The base vertex is moved onto an exterior arc.
    """
    if not 0 <= target_doubles <= MAX_RANDOM_DOUBLES:
        raise UnsupportedParam(f"target_doubles must be within 0..{MAX_RANDOM_DOUBLES}")
    rng = np.random.default_rng(seed)
    max_modes = 3 + (target_doubles + 1) // 2
    for _ in range(max_attempts):
        xy = _trig_curve(rng, resolution, max_modes)
        hits, _bad = kernels.find_crossings(xy[:, 0].copy(), xy[:, 1].copy(), QUALITY.eps_intersect)
        if len(hits) != target_doubles:
            continue
        try:
            curve = PolygonalCurve([tuple(map(float, p)) for p in xy])
            imm = build_immersion(curve, QUALITY)
            if imm.n_doubles != target_doubles:
                continue
            imm = rebase_to_exterior(imm)
            if not _well_separated(imm):
                continue
        except (GenericityError, NoExteriorVertex, ValueError):
            continue
        return CurveFile.from_curve(imm.curve)
    raise GenerationExhausted(
        f"no generic curve with {target_doubles} doubles after {max_attempts} attempts")


def _well_separated(imm, gap=2e-3):
    pos = [(d.position.x, d.position.y) for d in imm.doubles]
    for a in range(len(pos)):
        for b in range(a):
            if math.dist(pos[a], pos[b]) < gap:
                return False
    return True


DEGENERATE = ("tangency", "triple", "endpoint")


def degenerate_curve(kind: str) -> CurveFile:
    """Deliberately non-generic inputs.

    ``tangency``: two strands crossing at an angle of about 1e-8 rad.
    ``triple``: three strands through one point.
    ``endpoint``: a vertex lying exactly on another segment.
    """
    from .moves import assemble, tangency_strands, triple_strands

    if kind == "tangency":
        e = 1e-8
        return CurveFile(((-1.0, -e), (1.0, e), (1.3, 0.6), (1.3, -0.6), (1.0, -e), (-1.0, e),
                          (-1.3, -0.6), (-1.3, 0.6)), 0)
    if kind == "triple":
        return assemble(triple_strands(0.0), (0, 2, 1), (False, True, False),
                        (1.25, 1.55, 1.85), (True, True, True), 0, 2)
    if kind == "endpoint":
        return assemble(tangency_strands(0.3), (0, 1), (False, False),
                        (1.25, 1.55), (True, True), 0, 1)
    raise UnsupportedParam(f"unknown degenerate kind {kind!r}")
