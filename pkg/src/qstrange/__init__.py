"""Quantized strangeness and related invariants of generic plane curves."""

__version__ = "0.1.0"

from .errors import GenericityError, QStrangeError
from .geometry import DEFAULT_TOLERANCES, Point2, Tolerances
from .immersion import GenericImmersion, PolygonalCurve, build_immersion, rebase_to_exterior, rotation_number
from .invariants import InvariantReport, compute_report
from .laurent import HalfLaurent

__all__ = [
    "DEFAULT_TOLERANCES", "GenericImmersion", "GenericityError", "HalfLaurent", "InvariantReport",
    "Point2", "PolygonalCurve", "QStrangeError", "Tolerances", "__version__", "build_immersion",
    "compute_report", "rebase_to_exterior", "rotation_number",
]
