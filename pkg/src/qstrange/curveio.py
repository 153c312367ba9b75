"""JSON documents for curves, modification pairs and reports."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .immersion import PolygonalCurve

MOVE_KINDS = ("direct-tangency", "opposite-tangency", "weak-triple", "strong-triple")


@dataclass(frozen=True)
class CurveFile:
    vertices: tuple
    base_index: int = 0

    def to_curve(self) -> PolygonalCurve:
        try:
            return PolygonalCurve(self.vertices, self.base_index)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def from_curve(cls, curve: PolygonalCurve) -> "CurveFile":
        return cls(tuple((p.x, p.y) for p in curve.vertices), curve.base_index)

    def to_json(self) -> dict:
        return {"vertices": [[float(x), float(y)] for x, y in self.vertices],
                "base_index": int(self.base_index)}

    @classmethod
    def from_json(cls, doc, where="curve") -> "CurveFile":
        if not isinstance(doc, dict) or "vertices" not in doc:
            raise ParseError(f"{where}: expected an object with 'vertices'")
        raw = doc["vertices"]
        if not isinstance(raw, list):
            raise ParseError(f"{where}: 'vertices' must be a list")
        verts = []
        for k, v in enumerate(raw):
            if (not isinstance(v, (list, tuple)) or len(v) != 2
                    or not all(_is_number(c) for c in v)):
                raise ParseError(f"{where}: vertex {k} is not an [x, y] pair of numbers")
            x, y = float(v[0]), float(v[1])
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ParseError(f"{where}: vertex {k} is not finite")
            verts.append((x, y))
        base = doc.get("base_index", 0)
        if not isinstance(base, int) or isinstance(base, bool):
            raise ParseError(f"{where}: 'base_index' must be an integer")
        cf = cls(tuple(verts), base)
        cf.to_curve()
        return cf


def _is_number(c):
    return isinstance(c, (int, float)) and not isinstance(c, bool)


@dataclass(frozen=True)
class ModificationPair:
    kind: str
    ind_param: int
    before: CurveFile
    after: CurveFile
    disk: tuple  # (cx, cy, radius)
    direction: str = "positive"
    note: str = ""
    # "drawn": the orientation class the table refers to; "reversed": the
    # omitted class, checked only for the St_q row
    orientation: str = "drawn"

    def to_json(self) -> dict:
        return {"kind": self.kind, "direction": self.direction, "ind_param": self.ind_param,
                "disk": list(self.disk), "note": self.note, "orientation": self.orientation,
                "before": self.before.to_json(), "after": self.after.to_json()}

    @classmethod
    def from_json(cls, doc) -> "ModificationPair":
        if not isinstance(doc, dict):
            raise ParseError("modification pair must be an object")
        kind = doc.get("kind")
        if kind not in MOVE_KINDS:
            raise ParseError(f"unknown modification kind {kind!r}")
        if doc.get("direction", "positive") != "positive":
            raise ParseError("only positive modifications are supported")
        ind = doc.get("ind_param")
        if not isinstance(ind, int) or isinstance(ind, bool):
            raise ParseError("'ind_param' must be an integer")
        disk = doc.get("disk")
        if (not isinstance(disk, list) or len(disk) != 3 or not all(_is_number(c) for c in disk)
                or not disk[2] > 0):
            raise ParseError("'disk' must be [cx, cy, radius] with radius > 0")
        orientation = doc.get("orientation", "drawn")
        if orientation not in ("drawn", "reversed"):
            raise ParseError(f"unknown orientation {orientation!r}")
        return cls(kind, ind, CurveFile.from_json(doc.get("before"), "before"),
                   CurveFile.from_json(doc.get("after"), "after"),
                   tuple(float(c) for c in disk), "positive", str(doc.get("note", "")),
                   orientation)


def _load(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_curve(path) -> CurveFile:
    return CurveFile.from_json(_load(path), str(path))


def load_pair(path) -> ModificationPair:
    return ModificationPair.from_json(_load(path))


def dump_json(doc, path=None) -> str:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
