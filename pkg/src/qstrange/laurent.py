"""Laurent polynomials in ``q`` with exponents in ``(1/2) Z``.

Exponents are stored doubled (``exponent2``), i.e. as powers of
``s = q**(1/2)``.  Coefficients are either exact Python ints
(``kind="int"``) or floats (``kind="real"``).
"""

from __future__ import annotations

import math
from fractions import Fraction

INT = "int"
REAL = "real"


class HalfLaurent:
    __slots__ = ("terms", "kind")

    def __init__(self, terms=None, kind=INT):
        if kind not in (INT, REAL):
            raise ValueError(f"unknown coefficient kind {kind!r}")
        clean = {}
        for e2, c in (terms or {}).items():
            if isinstance(e2, bool) or int(e2) != e2:
                raise ValueError(f"exponent2 must be an integer, got {e2!r}")
            if kind == INT:
                if isinstance(c, float) or int(c) != c:
                    raise ValueError(f"exact polynomial needs integer coefficients, got {c!r}")
                c = int(c)
            else:
                c = float(c)
            if c != 0:
                clean[int(e2)] = clean.get(int(e2), 0) + c
        self.terms = {e: c for e, c in sorted(clean.items()) if c != 0}
        self.kind = kind

    @classmethod
    def monomial(cls, exponent2, coeff=1, kind=INT):
        return cls({exponent2: coeff}, kind)

    @classmethod
    def q(cls, power=1, kind=INT):
        """``q**power``; ``power`` may be a half-integer."""
        e2 = 2 * Fraction(power)
        if e2.denominator != 1:
            raise ValueError(f"exponent {power} is not a multiple of 1/2")
        return cls({int(e2): 1}, kind)

    @classmethod
    def zero(cls, kind=INT):
        return cls({}, kind)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, (int, float)) and not isinstance(other, bool):
            kind = REAL if isinstance(other, float) else INT
            return HalfLaurent({0: other}, kind)
        return NotImplemented

    @staticmethod
    def _kind(a, b):
        return INT if a.kind == INT and b.kind == INT else REAL

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return HalfLaurent(out, self._kind(self, other))

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({e: -c for e, c in self.terms.items()}, self.kind)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return HalfLaurent(out, self._kind(self, other))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out = HalfLaurent({0: 1}, self.kind)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, exponent2):
        """Multiply by ``s**exponent2``."""
        return HalfLaurent({e + exponent2: c for e, c in self.terms.items()}, self.kind)

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def max_abs_diff(self, other) -> float:
        keys = set(self.terms) | set(other.terms)
        return max((abs(self.terms.get(e, 0) - other.terms.get(e, 0)) for e in keys),
                   default=0.0)

    def close_to(self, other, eps) -> bool:
        return self.max_abs_diff(other) < eps

    # evaluation -----------------------------------------------------------

    def __call__(self, q):
        return sum(c * q ** (e / 2) for e, c in self.terms.items())

    def at_one(self):
        if self.kind == INT:
            return sum(self.terms.values())
        return math.fsum(self.terms.values())

    def has_integral_exponents(self) -> bool:
        return all(e % 2 == 0 for e in self.terms)

    def normalized(self, eps):
        """Drop coefficients with magnitude below ``eps`` (real kind only)."""
        if self.kind == INT:
            return self
        return HalfLaurent({e: c for e, c in self.terms.items() if abs(c) >= eps}, REAL)

    def as_real(self):
        return HalfLaurent(self.terms, REAL)

    def rounded(self):
        """Nearest exact polynomial and the largest rounding residual."""
        out = {e: round(c) for e, c in self.terms.items()}
        resid = max((abs(c - out[e]) for e, c in self.terms.items()), default=0.0)
        return HalfLaurent(out, INT), resid

    def divmod_s2_plus_1(self):
        """Divide by ``s**2 + 1``; returns ``(quotient, remainder)``.

        The remainder has at most two terms at the two lowest exponents of
        the dividend.
        """
        if not self.terms:
            return HalfLaurent.zero(self.kind), HalfLaurent.zero(self.kind)
        lo = min(self.terms)
        hi = max(self.terms)
        a = [0] * (hi - lo + 1)
        for e, c in self.terms.items():
            a[e - lo] = c
        quo = {}
        for deg in range(len(a) - 1, 1, -1):
            c = a[deg]
            if c:
                quo[deg - 2 + lo] = c
                a[deg - 2] -= c
                a[deg] = 0
        rem = {k + lo: a[k] for k in range(min(2, len(a))) if a[k]}
        return HalfLaurent(quo, self.kind), HalfLaurent(rem, self.kind)

    def divide_by_root_sum(self):
        """Divide by ``q**(1/2) + q**(-1/2)``; returns ``(quotient, remainder)``."""
        return self.shift(1).divmod_s2_plus_1()

    # io -------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"kind": self.kind,
                "terms": {str(e): c for e, c in self.terms.items()}}

    @classmethod
    def from_json(cls, doc):
        return cls({int(k): v for k, v in doc["terms"].items()}, doc.get("kind", INT))

    def __repr__(self):
        return f"HalfLaurent({self.terms!r}, kind={self.kind!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mag = abs(c)
            if self.kind == REAL:
                mag_s = f"{mag:.12g}"
            else:
                mag_s = str(mag)
            if e == 0:
                body = mag_s
            else:
                var = "q" if e == 2 else f"q^{_fmt_half(e)}"
                body = var if mag == 1 else f"{mag_s}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _fmt_half(e2):
    if e2 % 2 == 0:
        v = str(e2 // 2)
    else:
        v = f"{e2}/2"
    return v if len(v) == 1 else "{" + v + "}"


def half_label(x2: int) -> str:
    """Render a doubled index as ``"3/2"``, ``"-1/2"``, ``"2"``."""
    if x2 % 2 == 0:
        return str(x2 // 2)
    return f"{x2}/2"
