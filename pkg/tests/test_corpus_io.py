import json

import pytest

from qstrange.corpus import (DEGENERATE, MAX_RANDOM_DOUBLES, degenerate_curve, make_standard_curve,
                             random_generic_curve)
from qstrange.curveio import CurveFile, ModificationPair, dump_json, load_curve, load_pair
from qstrange.errors import GenerationExhausted, ParseError, UnsupportedParam
from qstrange.immersion import build_immersion, rotation_number


def test_random_is_deterministic():
    a = dump_json(random_generic_curve(1, 5).to_json())
    b = dump_json(random_generic_curve(1, 5).to_json())
    assert a == b
    assert a != dump_json(random_generic_curve(2, 5).to_json())


@pytest.mark.parametrize("k", [0, 1, 3, 7, 12])
def test_random_hits_target(k):
    imm = build_immersion(random_generic_curve(40 + k, k).to_curve())
    assert imm.n_doubles == k and imm.base_on_exterior


def test_random_parameter_bounds():
    with pytest.raises(UnsupportedParam):
        random_generic_curve(0, MAX_RANDOM_DOUBLES + 1)
    with pytest.raises(UnsupportedParam):
        random_generic_curve(0, -1)
    with pytest.raises(GenerationExhausted):
        random_generic_curve(0, 14, max_attempts=1)


def test_standard_families():
    assert make_standard_curve("flower", 0, 32) == make_standard_curve("circle", 0, 32)
    imm = build_immersion(make_standard_curve("flower", 1).to_curve())
    assert imm.n_doubles == 1 and rotation_number(imm) == 2
    imm = build_immersion(make_standard_curve("figure-eight").to_curve())
    assert imm.n_doubles == 1 and rotation_number(imm) == 0 and imm.base_on_exterior
    for bad in [("spiral", 0, 64), ("flower", -1, 64), ("flower", 3, 48), ("circle", 0, 8)]:
        with pytest.raises(UnsupportedParam):
            make_standard_curve(*bad)


def test_degenerate_kinds():
    assert set(DEGENERATE) == {"tangency", "triple", "endpoint"}
    with pytest.raises(UnsupportedParam):
        degenerate_curve("cusp")


def test_curve_roundtrip(tmp_path):
    cf = make_standard_curve("figure-eight", 0, 32)
    path = tmp_path / "c.json"
    dump_json(cf.to_json(), path)
    assert load_curve(path) == cf


@pytest.mark.parametrize("doc", [
    [], {}, {"vertices": "no"}, {"vertices": [[0, 0], [1, 0]]},
    {"vertices": [[0, 0], [1, 0], [0, "a"]]}, {"vertices": [[0, 0], [1, 0], [0, 1, 2]]},
    {"vertices": [[0, 0], [1, 0], [0, 1]], "base_index": 3},
    {"vertices": [[0, 0], [1, 0], [0, 1]], "base_index": True},
    {"vertices": [[0, 0], [1, 0], [1, 0], [0, 1]]},
])
def test_curve_parse_errors(doc):
    with pytest.raises(ParseError):
        CurveFile.from_json(doc)


def test_file_errors(tmp_path):
    with pytest.raises(ParseError):
        load_curve(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_curve(bad)


def _pair_doc():
    cf = make_standard_curve("circle", 0, 16).to_json()
    return {"kind": "weak-triple", "ind_param": 0, "disk": [0, 0, 1],
            "before": cf, "after": cf}


def test_pair_roundtrip(tmp_path):
    pair = ModificationPair.from_json(_pair_doc())
    assert pair.orientation == "drawn" and pair.direction == "positive"
    path = tmp_path / "p.json"
    dump_json(pair.to_json(), path)
    assert load_pair(path) == pair


@pytest.mark.parametrize("key,value", [
    ("kind", "flip"), ("direction", "negative"), ("ind_param", 1.5),
    ("disk", [0, 0, 0]), ("disk", [0, 0]), ("orientation", "sideways"), ("before", None)])
def test_pair_parse_errors(key, value):
    doc = _pair_doc()
    doc[key] = value
    with pytest.raises(ParseError):
        ModificationPair.from_json(doc)


def test_dump_is_sorted_and_stable():
    text = dump_json({"b": 1, "a": [1.5]})
    assert text == json.dumps({"a": [1.5], "b": 1}, indent=2) + "\n"
