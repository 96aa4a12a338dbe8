"""CY4Vertex truncated q-series

A QSeries maps (q exponent, doubled Q exponent) to exact coefficients,
usually MonomialFractions. `precision` is the first q exponent that is
no longer known; None marks an exact (finite) series.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from fractions import Fraction
from typing import Iterable, Mapping
import numbers

from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import MonomialFraction


#####################################################################
# Internal helper

def _is_zero(value) -> bool:
    if isinstance(value, MonomialFraction):
        return value.is_zero()
    return value == 0


def _key(key) -> tuple:
    if isinstance(key, numbers.Integral):
        return (int(key), 0)
    q, doubled_q = key
    return (int(q), int(doubled_q))


def _add(a, b):
    if a is None:
        return b
    return a + b


def format_q_exponents(key: tuple) -> str:
    q, doubled_q = key
    parts = []
    if q:
        parts.append("q" if q == 1 else f"q^{q}")
    if doubled_q:
        power = Fraction(doubled_q, 2)
        parts.append("Q" if power == 1 else f"Q^{power}")
    return "*".join(parts) or "1"


#####################################################################
# QSeries

class QSeries:
    """Immutable truncated series in q and Q^(1/2)."""

    __slots__ = ("coefficients", "precision")

    def __init__(self, coefficients: Mapping = None, precision: int = None):
        clean = {}
        for key, value in (coefficients or {}).items():
            key = _key(key)
            if precision is not None and key[0] >= precision:
                continue
            clean[key] = _add(clean.get(key), value)
        self.coefficients = {k: v for k, v in sorted(clean.items()) if not _is_zero(v)}
        self.precision = precision

    @classmethod
    def from_terms(cls, terms: Iterable[tuple], precision: int = None) -> "QSeries":
        """Sum of (key, value) pairs; equal keys add up."""
        coefficients = {}
        for key, value in terms:
            key = _key(key)
            coefficients[key] = _add(coefficients.get(key), value)
        return cls(coefficients, precision)

    @classmethod
    def one(cls, precision: int = None) -> "QSeries":
        return cls({0: MonomialFraction.one()}, precision)

    def coefficient(self, q: int, doubled_q: int = 0):
        return self.coefficients.get((q, doubled_q), MonomialFraction())

    def items(self):
        return self.coefficients.items()

    def keys(self) -> list:
        return list(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def low(self) -> int:
        """Smallest q exponent with a nonzero coefficient, 0 for the zero series."""
        return min((q for q, _ in self.coefficients), default=0)

    def leading(self) -> tuple:
        """(key, coefficient) of the smallest q exponent, then smallest Q exponent."""
        if not self.coefficients:
            raise InputError("The zero series has no leading term")
        key = min(self.coefficients)
        return key, self.coefficients[key]

    # Arithmetic

    def _joint_precision(self, other: "QSeries"):
        values = [p for p in (self.precision, other.precision) if p is not None]
        return min(values) if values else None

    def __add__(self, other: "QSeries") -> "QSeries":
        coefficients = dict(self.coefficients)
        for key, value in other.coefficients.items():
            coefficients[key] = _add(coefficients.get(key), value)
        return QSeries(coefficients, self._joint_precision(other))

    def __neg__(self) -> "QSeries":
        return QSeries({k: -v for k, v in self.coefficients.items()}, self.precision)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return QSeries({k: v * other for k, v in self.coefficients.items()}, self.precision)
        candidates = []
        if self.precision is not None:
            candidates.append(self.precision + other.low)
        if other.precision is not None:
            candidates.append(other.precision + self.low)
        precision = min(candidates) if candidates else None
        coefficients = {}
        for (qa, qqa), a in self.coefficients.items():
            for (qb, qqb), b in other.coefficients.items():
                key = (qa + qb, qqa + qqb)
                if precision is not None and key[0] >= precision:
                    continue
                coefficients[key] = _add(coefficients.get(key), a * b)
        return QSeries(coefficients, precision)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries) or self.precision != other.precision:
            return False
        keys = set(self.coefficients) | set(other.coefficients)
        return all(self.coefficient(*k) == other.coefficient(*k) for k in keys)

    __hash__ = None

    def agrees_with(self, other: "QSeries", precision: int = None) -> bool:
        """Coefficient equality below the common precision."""
        bound = self._joint_precision(other)
        if precision is not None:
            bound = precision if bound is None else min(bound, precision)
        keys = set(self.coefficients) | set(other.coefficients)
        return all(self.coefficient(*k) == other.coefficient(*k) for k in keys if bound is None or k[0] < bound)

    # Structural operations

    def shift(self, q: int, doubled_q: int = 0) -> "QSeries":
        precision = None if self.precision is None else self.precision + q
        return QSeries({(a + q, b + doubled_q): v for (a, b), v in self.coefficients.items()}, precision)

    def adams(self, k: int) -> "QSeries":
        """q -> q^k, Q -> Q^k and psi_k on every coefficient."""
        if k < 1:
            raise InputError(f"Adams operations need a positive index, got {k}")
        precision = None if self.precision is None else k * self.precision
        return QSeries({(k * a, k * b): v.adams(k) for (a, b), v in self.coefficients.items()}, precision)

    def normalized(self) -> "QSeries":
        """Divide by the leading coefficient and move it to q^0 Q^0.

        Raises:
            InputError: the series is zero or its leading coefficient is not invertible.
        """
        (q, doubled_q), lead = self.leading()
        if not lead.numerator.is_monomial():
            raise InputError("Leading coefficient has a non-monomial numerator and cannot be inverted")
        inverse = lead ** -1
        return QSeries({k: v * inverse for k, v in self.coefficients.items()}, self.precision).shift(-q, -doubled_q)

    def map(self, func) -> "QSeries":
        """Apply func(key, coefficient) to every coefficient."""
        return QSeries({k: func(k, v) for k, v in self.coefficients.items()}, self.precision)

    # Output

    def records(self) -> list:
        return [
            {"q": q, "Q": str(Fraction(doubled_q, 2)), "coefficient": str(value)}
            for (q, doubled_q), value in self.coefficients.items()
        ]

    def format_table(self) -> str:
        rows = [(format_q_exponents(k), str(v)) for k, v in self.coefficients.items()]
        if not rows:
            rows = [("1", "0")]
        width = max(len(r[0]) for r in rows)
        lines = [f"{term.ljust(width)}  {value}" for term, value in rows]
        if self.precision is not None:
            lines.append(f"{'O'.ljust(width)}  q^{self.precision}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"QSeries({len(self.coefficients)} terms, precision={self.precision})"
