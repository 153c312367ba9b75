"""Classical and quantized invariants of based generic immersions.

Two independent routes compute the quantized strangeness: a weighted sum
over double points (:func:`st_q_combinatorial`) and a discrete curvature
integral with alpha densities (:func:`st_q_geometric`).  Polygonal curves
carry all curvature at vertices, so the curvature integral over an arc is
the arc's summed turning angle.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import BaseNotExterior, CrossCheckFailed, HalfExponent, NonzeroRemainder, QStrangeError
from .geometry import DEFAULT_TOLERANCES, TAU, Tolerances
from .immersion import GenericImmersion, rotation_number
from .laurent import INT, REAL, HalfLaurent
from .smoothing import RegionForest, SmoothedCurve, alpha_at, build_region_forest, compute_weights, smooth

DEFAULT_TAYLOR_DEPTH = 6


def _require_exterior(imm):
    if not imm.base_on_exterior:
        raise BaseNotExterior("base point is not on an exterior edge; rebase first")


def _ipow(base: int, k: int) -> int:
    # 0**0 == 1 in Python, which is the convention wanted here
    return base ** k


def st_q_combinatorial(imm: GenericImmersion, weights: dict) -> HalfLaurent:
    _require_exterior(imm)
    terms = defaultdict(int)
    for d in imm.doubles:
        terms[d.index2] += weights[d.id]
    return HalfLaurent(terms, INT)


def st_q_numerator(imm: GenericImmersion, smoothed: SmoothedCurve) -> HalfLaurent:
    """``(q^(1/2) + q^(-1/2)) * St_q`` evaluated as a curvature integral."""
    parts = defaultdict(list)
    for arc in imm.arcs:
        alpha = smoothed.circle_of_arc(arc.id).alpha
        if alpha:
            parts[arc.index2].append(arc.turning * alpha)
    for d in imm.doubles:
        ap, am, _ = alpha_at(imm, smoothed, d.id)
        gap = math.pi - d.theta
        if ap:
            parts[d.index2 + 1].append(gap * ap)
        if am:
            parts[d.index2 - 1].append(-gap * am)
    return HalfLaurent({e: math.fsum(v) / TAU for e, v in parts.items()}, REAL)


def st_q_geometric(imm: GenericImmersion, weights: dict, smoothed: SmoothedCurve,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> HalfLaurent:
    _require_exterior(imm)
    for c in smoothed.circles:
        if c.alpha is None:
            raise BaseNotExterior("smoothed curve carries no weights")
        if any(v.weight != weights[v.double] for v in c.vertices):
            raise ValueError("smoothed curve was built with different weights")
    quo, rem = st_q_numerator(imm, smoothed).divide_by_root_sum()
    resid = max((abs(c) for c in rem.terms.values()), default=0.0)
    if resid >= tol.eps_coeff:
        raise NonzeroRemainder(f"division by q^(1/2)+q^(-1/2) leaves remainder {resid:.3g}")
    return quo.normalized(tol.eps_coeff)


def viro_polynomial(forest: RegionForest) -> HalfLaurent:
    terms = defaultdict(int)
    for r in forest.regions:
        terms[r.index2] += r.chi
    return HalfLaurent(terms, INT)


def viro_moment(forest: RegionForest, r: int) -> int:
    if r < 0:
        raise ValueError("moment order must be non-negative")
    return sum(reg.chi * _ipow(reg.index, r) for reg in forest.regions)


def j_minus(forest: RegionForest) -> int:
    return 1 - viro_moment(forest, 2)


def lanzat_polyak(imm: GenericImmersion) -> HalfLaurent:
    parts = defaultdict(list)
    for arc in imm.arcs:
        parts[arc.index2].append(arc.turning)
    for d in imm.doubles:
        parts[d.index2 + 1].append(-d.theta)
        parts[d.index2 - 1].append(d.theta)
    return HalfLaurent({e: math.fsum(v) / TAU for e, v in parts.items()}, REAL)


def j_plus(j_minus_value: int, n_doubles: int) -> int:
    return j_minus_value + n_doubles


def j_plus_from_lanzat_polyak(i_q: HalfLaurent) -> float:
    """J+ read off the first derivative of ``I_q`` at ``q = 1``."""
    return 1.0 - 2.0 * float(derivative_at_one(i_q))


def strangeness(imm: GenericImmersion, weights: dict) -> int:
    _require_exterior(imm)
    return sum(weights[d.id] * d.index for d in imm.doubles)


def tabachnikov(imm: GenericImmersion, weights: dict, k: int) -> int:
    _require_exterior(imm)
    if k < 0:
        raise ValueError("order must be non-negative")
    return sum(weights[d.id] * _ipow(d.index, k) for d in imm.doubles)


def taylor_exp(poly: HalfLaurent, r_max: int) -> list:
    """Coefficients of ``h**r`` after substituting ``q = e**h``, ``r = 0..r_max``.

    Exact polynomials give :class:`~fractions.Fraction` values.
    """
    for e, c in poly.terms.items():
        if e % 2:
            raise HalfExponent(f"term q^({e}/2) has a half-integral exponent")
    out = []
    for r in range(r_max + 1):
        fact = math.factorial(r)
        if poly.kind == INT:
            out.append(Fraction(sum(c * _ipow(e // 2, r) for e, c in poly.terms.items()), fact))
        else:
            out.append(math.fsum(c * (e // 2) ** r for e, c in poly.terms.items()) / fact)
    return out


def derivative_at_one(poly: HalfLaurent):
    if poly.kind == INT:
        return Fraction(sum(c * e for e, c in poly.terms.items()), 2)
    return math.fsum(c * e for e, c in poly.terms.items()) / 2.0


@dataclass
class InvariantReport:
    rot_closed: int
    n_doubles: int
    st_q: HalfLaurent
    st_q_geom: Optional[HalfLaurent]
    p_q: HalfLaurent
    i_q: HalfLaurent
    j_minus: int
    j_plus: int
    st: int
    tabachnikov: list
    cross_checks: dict
    observations: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.cross_checks.values())

    def failures(self) -> list:
        return [k for k, ok in self.cross_checks.items() if not ok]

    def to_json(self) -> dict:
        return {
            "rot": self.rot_closed,
            "n_doubles": self.n_doubles,
            "st_q": self.st_q.to_json(),
            "st_q_geom": None if self.st_q_geom is None else self.st_q_geom.to_json(),
            "p_q": self.p_q.to_json(),
            "i_q": self.i_q.to_json(),
            "j_minus": self.j_minus,
            "j_plus": self.j_plus,
            "st": self.st,
            "tabachnikov": list(self.tabachnikov),
            "cross_checks": dict(self.cross_checks),
            "observations": dict(self.observations),
        }


def compute_report(imm: GenericImmersion, taylor_depth: int = DEFAULT_TAYLOR_DEPTH,
                   tol: Optional[Tolerances] = None) -> InvariantReport:
    """Every invariant of a based immersion, plus the identities relating them."""
    tol = tol or imm.tol
    _require_exterior(imm)
    weights = compute_weights(imm)
    smoothed = smooth(imm, weights)
    forest = build_region_forest(smoothed)

    rot = rotation_number(imm)
    n = imm.n_doubles
    st_q = st_q_combinatorial(imm, weights)
    checks = {}
    obs = {}
    try:
        st_q_geom = st_q_geometric(imm, weights, smoothed, tol)
    except NonzeroRemainder as exc:
        st_q_geom = None
        obs["st_q_geometric_error"] = str(exc)
    checks["route_equivalence"] = (st_q_geom is not None
                                   and st_q_geom.max_abs_diff(st_q) < tol.eps_coeff)
    if st_q_geom is not None:
        obs["route_max_diff"] = st_q_geom.max_abs_diff(st_q)

    tab = [tabachnikov(imm, weights, k) for k in range(taylor_depth + 1)]
    st = strangeness(imm, weights)
    sum_w = sum(weights.values())
    checks["st_q_at_one_is_weight_sum"] = st_q.at_one() == sum_w == tab[0]
    checks["whitney_long_curve"] = abs(rot - st_q.at_one()) == 1
    checks["st_q_derivative_is_strangeness"] = derivative_at_one(st_q) == st
    taylor = taylor_exp(st_q, taylor_depth)
    checks["st_q_taylor_is_tabachnikov"] = all(
        taylor[r] * math.factorial(r) == tab[r] for r in range(taylor_depth + 1))

    p_q = viro_polynomial(forest)
    moments = [viro_moment(forest, r) for r in range(taylor_depth + 1)]
    checks["viro_total_euler_characteristic"] = moments[0] == 1
    checks["viro_rotation_number"] = moments[1] == rot
    ptay = taylor_exp(p_q, taylor_depth)
    checks["viro_taylor_is_moments"] = all(
        ptay[r] * math.factorial(r) == moments[r] for r in range(taylor_depth + 1))
    jm = j_minus(forest)

    i_q = lanzat_polyak(imm)
    jp = j_plus(jm, n)
    jp_lp = j_plus_from_lanzat_polyak(i_q)
    checks["lanzat_polyak_value_is_rotation"] = abs(i_q.at_one() - rot) < 1e-9
    checks["j_plus_routes_agree"] = round(jp_lp) == jp and abs(jp_lp - jp) < 1e-6
    _, half_resid = (i_q * 2).rounded()
    checks["lanzat_polyak_half_integral"] = half_resid < 1e-6
    _, int_resid = i_q.rounded()
    obs["lanzat_polyak_integral"] = int_resid < 1e-6
    obs["lanzat_polyak_integrality_residual"] = int_resid

    turning = math.fsum(a.turning for a in imm.arcs)
    checks["arc_turning_sum"] = abs(turning - TAU * rot) < 1e-9
    checks["alpha_identity"] = all(
        c.alpha == c.rot * sum(v.weight for v in c.vertices) for c in smoothed.circles)
    checks["circle_rotation_matches_regions"] = all(
        forest.regions[r].index2 == c.index2 + c.rot
        for c in smoothed.circles for r in [_inner_region(forest, c.id)])

    return InvariantReport(rot, n, st_q, st_q_geom, p_q, i_q.normalized(tol.eps_coeff),
                           jm, jp, st, tab, checks, obs)


def _inner_region(forest, circle_id):
    for r in forest.regions:
        if r.boundary == circle_id:
            return r.id
    raise KeyError(circle_id)


def require_cross_checks(report: InvariantReport):
    bad = report.failures()
    if bad:
        raise CrossCheckFailed("failed cross-checks: " + ", ".join(bad))


__all__ = [
    "DEFAULT_TAYLOR_DEPTH", "InvariantReport", "compute_report", "derivative_at_one",
    "j_minus", "j_plus", "j_plus_from_lanzat_polyak", "lanzat_polyak", "require_cross_checks",
    "st_q_combinatorial", "st_q_geometric", "st_q_numerator", "strangeness", "tabachnikov",
    "taylor_exp", "viro_moment", "viro_polynomial", "QStrangeError",
]
