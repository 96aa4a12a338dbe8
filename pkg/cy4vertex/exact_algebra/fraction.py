"""CY4Vertex monomial-denominator fractions

A MonomialFraction is numerator * prod (1 - eta^w)^e(w) with e(w) a nonzero
integer. Negative exponents are denominators. Factors are kept factored,
never expanded into a series; `expand_to_laurent` performs the exact
division once all cancellations have happened.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from fractions import Fraction
from functools import lru_cache
from sympy import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring
from typing import Iterable, Mapping
import numbers

from cy4vertex.errors import DegenerateSubstitution, NotLaurentPolynomial
from cy4vertex.exact_algebra.laurent import NVARS, LaurentPoly, double, map_exponent, scale_exponent


#####################################################################
# Constants

# Polynomial ring used for exact division; generators are eta^(1/2) per variable.
_RING = ring("h1,h2,h3,h4,hy", QQ)[0]


#####################################################################
# Internal helper

def is_lex_positive(weight: tuple) -> bool:
    for x in weight:
        if x:
            return x > 0
    return False


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@lru_cache(maxsize=4096)
def binomial_power(weight: tuple, k: int) -> LaurentPoly:
    """(1 - eta^weight)^k for k >= 0, weight doubled."""
    return (LaurentPoly.constant(1) - LaurentPoly.monomial(weight)) ** k


def _to_ring(poly: LaurentPoly, low: tuple):
    return _RING.from_dict({
        tuple(e - m for e, m in zip(exponent, low)): QQ(coeff.numerator, coeff.denominator)
        for exponent, coeff in poly.items()
    })


def _from_ring(element, low: tuple) -> LaurentPoly:
    return LaurentPoly({
        tuple(e + m for e, m in zip(monom, low)): _rational(coeff)
        for monom, coeff in element.terms()
    })


def _rational(coeff) -> numbers.Rational:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


#####################################################################
# MonomialFraction

class MonomialFraction:
    """Immutable exact rational function with binomial denominators."""

    __slots__ = ("numerator", "factors")

    def __init__(self, numerator: LaurentPoly = None, factors: Mapping[tuple, int] = None):
        numerator = numerator if numerator is not None else LaurentPoly()
        clean = {}
        for weight, e in (factors or {}).items():
            weight = tuple(weight)
            if not e:
                continue
            if not any(weight):
                if e > 0:
                    numerator = LaurentPoly()
                    continue
                raise DegenerateSubstitution("degenerate substitution: denominator factor (1 - 1)", weight=weight)
            if not is_lex_positive(weight):
                # (1 - eta^w)^e = (-1)^e eta^(e w) (1 - eta^-w)^e
                numerator = numerator * LaurentPoly.monomial(scale_exponent(weight, e), _sign(e))
                weight = scale_exponent(weight, -1)
            clean[weight] = clean.get(weight, 0) + e
        if numerator.is_zero():
            clean = {}
        self.numerator = numerator
        self.factors = {w: e for w, e in clean.items() if e}

    @classmethod
    def one(cls) -> "MonomialFraction":
        return cls(LaurentPoly.constant(1))

    @classmethod
    def geometric(cls, weight: Iterable[int], numerator: LaurentPoly = None) -> "MonomialFraction":
        """numerator / (1 - t^weight) for an integer weight vector."""
        weight = tuple(weight) + (0,) * (NVARS - len(tuple(weight)))
        return cls(numerator if numerator is not None else LaurentPoly.constant(1), {double(weight): -1})

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def denominator(self) -> dict:
        return {w: -e for w, e in self.factors.items() if e < 0}

    # Arithmetic

    def _coerce(self, other) -> "MonomialFraction":
        if isinstance(other, MonomialFraction):
            return other
        if isinstance(other, LaurentPoly):
            return MonomialFraction(other)
        if isinstance(other, numbers.Rational):
            return MonomialFraction(LaurentPoly.constant(other))
        return NotImplemented

    def __add__(self, other) -> "MonomialFraction":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mf_sum((self, other))

    __radd__ = __add__

    def __neg__(self) -> "MonomialFraction":
        return MonomialFraction(-self.numerator, self.factors)

    def __sub__(self, other) -> "MonomialFraction":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mf_sum((self, -other))

    def __rsub__(self, other) -> "MonomialFraction":
        return (-self) + other

    def __mul__(self, other) -> "MonomialFraction":
        if isinstance(other, numbers.Rational) or isinstance(other, LaurentPoly):
            return MonomialFraction(self.numerator * other, self.factors)
        if not isinstance(other, MonomialFraction):
            return NotImplemented
        factors = dict(self.factors)
        for w, e in other.factors.items():
            factors[w] = factors.get(w, 0) + e
        return MonomialFraction(self.numerator * other.numerator, factors)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MonomialFraction":
        if k < 0:
            if not self.numerator.is_monomial():
                raise ValueError("Only fractions with monomial numerator can be inverted")
        return MonomialFraction(self.numerator ** k, {w: e * k for w, e in self.factors.items()})

    def __truediv__(self, other) -> "MonomialFraction":
        """Division by a monomial or a product of brackets (monomial numerator)."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other ** -1

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return (self - other).is_zero()

    __hash__ = None

    # Structural operations

    def dual(self) -> "MonomialFraction":
        return MonomialFraction(self.numerator.dual(), {scale_exponent(w, -1): e for w, e in self.factors.items()})

    def adams(self, k: int) -> "MonomialFraction":
        return MonomialFraction(self.numerator.adams(k), {scale_exponent(w, k): e for w, e in self.factors.items()})

    def shift(self, exponent: tuple) -> "MonomialFraction":
        return MonomialFraction(self.numerator.shift(exponent), self.factors)

    def substitute(self, images: tuple) -> "MonomialFraction":
        """Monomial substitution; a factor sent to (1 - 1) in a denominator is an error."""
        factors = {}
        numerator = self.numerator.substitute(images)
        for w, e in self.factors.items():
            image = map_exponent(w, images)
            if not any(image):
                if e > 0:
                    return MonomialFraction()
                raise DegenerateSubstitution("degenerate substitution: denominator factor (1 - 1)", weight=w)
            factors[image] = factors.get(image, 0) + e
        return MonomialFraction(numerator, factors)

    def __repr__(self) -> str:
        return f"MonomialFraction({self})"

    def __str__(self) -> str:
        if not self.factors:
            return f"({self.numerator})"
        parts = [f"({self.numerator})"]
        for w, e in sorted(self.factors.items()):
            parts.append(f"(1 - {LaurentPoly.monomial(w)})^{e}")
        return " * ".join(parts)


#####################################################################
# Sums and exact division

def mf_sum(fractions: Iterable[MonomialFraction]) -> MonomialFraction:
    """Sum keeping the common factor power min_j e_j(w) factored out."""
    fractions = [f for f in fractions if not f.is_zero()]
    if not fractions:
        return MonomialFraction()
    if len(fractions) == 1:
        return fractions[0]
    weights = set()
    for f in fractions:
        weights.update(f.factors)
    common = {w: min(f.factors.get(w, 0) for f in fractions) for w in weights}
    total = LaurentPoly()
    for f in fractions:
        term = f.numerator
        for w in weights:
            residual = f.factors.get(w, 0) - common[w]
            if residual:
                term = term * binomial_power(w, residual)
        total = total + term
    return MonomialFraction(total, common)


def expand_to_laurent(f: MonomialFraction) -> LaurentPoly:
    """Exact quotient of a MonomialFraction that is a Laurent polynomial.

    Raises:
        NotLaurentPolynomial: the numerator is not divisible by the denominator.
    """
    numerator = f.numerator
    denominators = []
    for w, e in sorted(f.factors.items()):
        if e > 0:
            numerator = numerator * binomial_power(w, e)
        else:
            denominators.append((w, -e))
    if not denominators or numerator.is_zero():
        return numerator

    low = numerator.min_exponent()
    element = _to_ring(numerator, low)
    for w, e in denominators:
        negative = tuple(min(x, 0) for x in w)
        positive = tuple(max(x, 0) for x in w)
        # 1 - eta^w = eta^(w-) (eta^(-w-) - eta^(w+))
        divisor = _RING.from_dict({scale_exponent(negative, -1): QQ(1), positive: QQ(-1)})
        for _ in range(e):
            try:
                element = element.exquo(divisor)
            except ExactQuotientFailed as err:  # ExactQuotientFailed(BasePolynomialError)
                raise NotLaurentPolynomial("not a Laurent polynomial", factor=LaurentPoly.monomial(w)) from err
            low = tuple(m - x for m, x in zip(low, negative))
    return _from_ring(element, low)


def cy_eliminate_images() -> tuple:
    """Substitution images for t4 -> (t1 t2 t3)^-1."""
    return ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (-1, -1, -1, 0, 0), (0, 0, 0, 0, 1))


def cy_eliminate(value):
    """Impose t1 t2 t3 t4 = 1 by eliminating t4."""
    return value.substitute(cy_eliminate_images())
