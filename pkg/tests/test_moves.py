from dataclasses import replace

import pytest

from qstrange.curveio import CurveFile, load_pair
from qstrange.errors import ExpectationMismatch, ParseError
from qstrange.invariants import derivative_at_one
from qstrange.moves import expected_differences, verify_modification
from qstrange.selftest import move_fixture_paths

PAIRS = move_fixture_paths()


@pytest.mark.parametrize("path", PAIRS, ids=lambda p: p.name)
def test_shipped_pair_matches_table(path):
    diff = verify_modification(load_pair(path))
    assert diff.passed, diff.mismatches


def test_fixture_coverage():
    pairs = [load_pair(p) for p in PAIRS]
    drawn = {}
    for p in pairs:
        if p.orientation == "drawn":
            drawn.setdefault(p.kind, set()).add(p.ind_param)
    assert set(drawn) == {"direct-tangency", "opposite-tangency", "weak-triple", "strong-triple"}
    assert all(len(v) >= 3 for v in drawn.values())
    assert any(p.orientation == "reversed" for p in pairs)


def test_reversed_class_negates_p_and_i():
    for path in PAIRS:
        pair = load_pair(path)
        if pair.orientation != "reversed":
            continue
        full = verify_modification(replace(pair, orientation="drawn"))
        want = expected_differences(pair.kind, pair.ind_param)
        assert full.delta["st_q"] == want["st_q"]
        assert full.delta["i"].close_to(-want["i"], 1e-6)
        assert full.delta["p"] == -want["p"]


def test_wrong_index_is_reported():
    pair = load_pair(next(p for p in PAIRS if p.name.startswith("weak-triple_i1")))
    diff = verify_modification(replace(pair, ind_param=pair.ind_param + 1))
    assert not diff.passed and "st_q" in diff.mismatches


def test_change_outside_disk_rejected():
    pair = load_pair(PAIRS[0])
    verts = list(pair.after.vertices)
    k = next(i for i, (x, y) in enumerate(verts) if x * x + y * y > 2.0)
    verts[k] = (verts[k][0] * 1.01, verts[k][1])
    with pytest.raises(ExpectationMismatch):
        verify_modification(replace(pair, after=CurveFile(tuple(verts), pair.after.base_index)))


def test_double_count_checked():
    pair = load_pair(next(p for p in PAIRS if "tangency" in p.name))
    with pytest.raises(ExpectationMismatch):
        verify_modification(replace(pair, after=pair.before))


def _moment(poly, r):
    return sum(c * (e // 2) ** r for e, c in poly.terms.items())


@pytest.mark.parametrize("i", range(-2, 4))
def test_table_reproduces_classical_jumps(i):
    # J- = 1 - (second moment of P), J+ = 1 - 2 I'(1), St = St_q'(1)
    jumps = {"direct-tangency": (0, 2, 0), "opposite-tangency": (-2, 0, 0),
             "weak-triple": (0, 0, 1), "strong-triple": (0, 0, 1)}
    for kind, (dj_minus, dj_plus, dst) in jumps.items():
        row = expected_differences(kind, i)
        assert -_moment(row["p"], 2) == dj_minus
        assert _moment(row["p"], 0) == 0 and _moment(row["p"], 1) == 0
        assert -2 * derivative_at_one(row["i"]) == pytest.approx(dj_plus)
        assert row["i"].at_one() == pytest.approx(0)
        assert derivative_at_one(row["st_q"]) == dst


def test_unknown_kind():
    with pytest.raises(ParseError):
        expected_differences("swirl", 0)
