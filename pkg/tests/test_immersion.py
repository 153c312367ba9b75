import math

import pytest
from hypothesis import given, settings, strategies as st

from qstrange.corpus import degenerate_curve, make_standard_curve, random_generic_curve
from qstrange.errors import DegenerateIntersection, TangentialPair, TripleCoincidence
from qstrange.geometry import winding_number
from qstrange.immersion import PolygonalCurve, build_immersion, rebase_to_exterior, rotation_number


def test_circle(standard):
    imm = standard["circle16"]
    assert imm.n_doubles == 0 and [a.index2 for a in imm.arcs] == [1]
    assert imm.base_on_exterior and rotation_number(imm) == 1


def test_figure_eight(standard):
    imm = standard["f8"]
    assert [d.index2 for d in imm.doubles] == [0]
    assert sorted(a.index2 for a in imm.arcs) == [-1, 1]
    assert rotation_number(imm) == 0
    assert sorted(f.index2 for f in imm.faces if not f.unbounded) == [-2, 2]


def test_inner_loop(standard):
    imm = standard["k2"]
    assert [d.index for d in imm.doubles] == [1]
    assert sorted(a.index2 for a in imm.arcs) == [1, 3]
    assert rotation_number(imm) == 2


def test_polygonal_curve_validation():
    with pytest.raises(ValueError):
        PolygonalCurve([(0, 0), (1, 0)])
    with pytest.raises(ValueError):
        PolygonalCurve([(0, 0), (1, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        PolygonalCurve([(0, 0), (1, 0), (0, 1)], base_index=3)


def test_rotated_keeps_base_vertex():
    c = PolygonalCurve([(0, 0), (1, 0), (1, 1), (0, 1)], base_index=2)
    r = c.rotated(3)
    assert r.vertices[r.base_index] == c.vertices[c.base_index]


@pytest.mark.parametrize("kind,error", [
    ("tangency", TangentialPair), ("triple", TripleCoincidence),
    ("endpoint", DegenerateIntersection)])
def test_degenerate_inputs(kind, error):
    with pytest.raises(error):
        build_immersion(degenerate_curve(kind).to_curve())


def test_rebase_moves_base_outside():
    k2 = make_standard_curve("flower", 1, 64).to_curve()
    imm = build_immersion(k2)
    inner = next(a for a in imm.arcs if a.index2 == 3)
    off = build_immersion(k2.with_base(inner.vertex_ids[len(inner.vertex_ids) // 2]))
    assert not off.base_on_exterior
    back = rebase_to_exterior(off)
    assert back.base_on_exterior and abs(back.arcs[0].index2) == 1
    assert rebase_to_exterior(imm) is imm


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 6))
def test_indices_match_winding_oracle(seed, k):
    imm = build_immersion(random_generic_curve(seed, k).to_curve())
    pts = imm.curve.xy.tolist()
    for face in imm.faces:
        # a face's own sample point gives its winding number independently
        assert 2 * winding_number(pts, face.sample) == face.index2
    for d in imm.doubles:
        # a double point's index is the mean of the four corners around it
        r = 1e-5
        u1, u2 = (math.hypot(*d.v1), math.hypot(*d.v2))
        corners = [(d.position.x + r * (a * d.v1[0] / u1 + b * d.v2[0] / u2),
                    d.position.y + r * (a * d.v1[1] / u1 + b * d.v2[1] / u2))
                   for a in (1, -1) for b in (1, -1)]
        total = sum(winding_number(pts, c) for c in corners)
        assert total == 4 * d.index
