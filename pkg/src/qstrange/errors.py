"""Exception hierarchy.

Genericity violations (the input curve is not a generic immersion under the
active tolerances) derive from :class:`GenericityError`; the CLI maps them to
exit code 2.
"""

from __future__ import annotations


class QStrangeError(Exception):
    """Base class for every error raised by this package."""


class GenericityError(QStrangeError):
    """The input violates the genericity assumptions.

    ``segments`` holds the polyline segment indices involved, when known.
    """

    def __init__(self, message: str, segments: tuple[int, ...] = ()):
        super().__init__(message)
        self.segments = tuple(segments)

    @property
    def kind(self) -> str:
        return type(self).__name__


class DegenerateIntersection(GenericityError):
    pass


class TangentialPair(GenericityError):
    pass


class CuspVertex(GenericityError):
    pass


class TripleCoincidence(GenericityError):
    pass


class PointTooClose(GenericityError):
    pass


class ProbeInconsistent(GenericityError):
    pass


class ContainmentAmbiguous(GenericityError):
    pass


class BaseNotExterior(QStrangeError):
    pass


class NoExteriorVertex(QStrangeError):
    pass


class UnknownPoint(QStrangeError):
    pass


class NonzeroRemainder(QStrangeError):
    pass


class HalfExponent(QStrangeError):
    pass


class CrossCheckFailed(QStrangeError):
    pass


class ParseError(QStrangeError):
    pass


class UnsupportedParam(QStrangeError):
    pass


class GenerationExhausted(QStrangeError):
    pass


class ExpectationMismatch(QStrangeError):
    pass
