"""CY4Vertex exact Laurent polynomials

A LaurentPoly is a finite sum of monomials in t1, t2, t3, t4, y with exact
rational coefficients. Exponents are stored doubled so that the half-integer
exponents produced by brackets stay integral: the key (1, 0, 0, 0, 0)
means t1^(1/2), the key (2, 0, 0, 0, 0) means t1.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from fractions import Fraction
from typing import Iterable, Mapping
import numbers


#####################################################################
# Constants

VARIABLES = ("t1", "t2", "t3", "t4", "y")
NVARS = len(VARIABLES)
ZERO_EXPONENT = (0,) * NVARS

# Images of the variables under the identity substitution, in integer exponents.
IDENTITY_IMAGES = tuple(tuple(int(i == j) for j in range(NVARS)) for i in range(NVARS))


#####################################################################
# Internal helper

def _coeff(value) -> numbers.Rational:
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Rational):
        return _coeff(Fraction(value.numerator, value.denominator))
    raise TypeError(f"Laurent coefficients must be exact rationals, got {value!r}")


def add_exponents(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def scale_exponent(a: tuple, k: int) -> tuple:
    return tuple(k * x for x in a)


def double(weight: Iterable[int]) -> tuple:
    """Integer exponent vector -> doubled lattice key."""
    return tuple(2 * int(x) for x in weight)


def map_exponent(exponent: tuple, images: tuple) -> tuple:
    """Image of a (doubled) exponent under a monomial substitution.

    `images[j]` is the integer exponent vector of the monomial that
    variable j is sent to; the map is linear so doubling commutes with it.
    """
    result = [0] * NVARS
    for e, image in zip(exponent, images):
        if e:
            for i, x in enumerate(image):
                result[i] += e * x
    return tuple(result)


def format_exponent(exponent: tuple) -> str:
    factors = []
    for name, e in zip(VARIABLES, exponent):
        if e == 0:
            continue
        if e == 2:
            factors.append(name)
        elif e % 2 == 0:
            factors.append(f"{name}^{e // 2}")
        else:
            factors.append(f"{name}^({e}/2)")
    return "*".join(factors) or "1"


#####################################################################
# LaurentPoly

class LaurentPoly:
    """Immutable exact Laurent polynomial over the doubled exponent lattice."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, numbers.Rational] = None):
        clean = {}
        if terms:
            for exponent, coeff in terms.items():
                coeff = _coeff(coeff)
                if coeff:
                    exponent = tuple(exponent)
                    if len(exponent) != NVARS:
                        raise ValueError(f"Exponent {exponent} must have {NVARS} coordinates")
                    clean[exponent] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: numbers.Rational = 1) -> "LaurentPoly":
        """Monomial from a doubled exponent key."""
        return cls({tuple(exponent): coeff})

    @classmethod
    def from_weights(cls, weights: Mapping[tuple, numbers.Rational]) -> "LaurentPoly":
        """Polynomial from integer exponent vectors (shorter vectors are zero padded)."""
        terms = {}
        for weight, coeff in weights.items():
            key = double(tuple(weight) + (0,) * (NVARS - len(weight)))
            terms[key] = terms.get(key, 0) + coeff
        return cls(terms)

    @classmethod
    def constant(cls, value: numbers.Rational) -> "LaurentPoly":
        return cls({ZERO_EXPONENT: value})

    @classmethod
    def variable(cls, index: int) -> "LaurentPoly":
        return cls({tuple(2 * int(i == index) for i in range(NVARS)): 1})

    # Container protocol

    def items(self):
        return self._terms.items()

    def exponents(self):
        return self._terms.keys()

    def coefficient(self, exponent: tuple) -> numbers.Rational:
        return self._terms.get(tuple(exponent), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # Arithmetic

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, numbers.Rational):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            value = terms.get(exponent, 0) + coeff
            if value:
                terms[exponent] = _coeff(value)
            else:
                terms.pop(exponent, None)
        return LaurentPoly._trusted(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._trusted({exponent: -coeff for exponent, coeff in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, numbers.Rational):
            if not other:
                return LaurentPoly()
            return LaurentPoly._trusted({e: _coeff(c * other) for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(x + y for x, y in zip(e1, e2))
                terms[exponent] = terms.get(exponent, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("Only monomials can be raised to negative powers")
            ((exponent, coeff),) = self._terms.items()
            return LaurentPoly({scale_exponent(exponent, k): Fraction(coeff) ** k})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Structural operations

    def shift(self, exponent: tuple) -> "LaurentPoly":
        """Multiply by the monomial with the given doubled exponent."""
        return LaurentPoly._trusted({add_exponents(e, exponent): c for e, c in self._terms.items()})

    def dual(self) -> "LaurentPoly":
        """Conjugation t_i -> t_i^-1, y -> y^-1."""
        return LaurentPoly._trusted({scale_exponent(e, -1): c for e, c in self._terms.items()})

    def adams(self, k: int) -> "LaurentPoly":
        return LaurentPoly._trusted({scale_exponent(e, k): c for e, c in self._terms.items()})

    def substitute(self, images: tuple) -> "LaurentPoly":
        terms = {}
        for exponent, coeff in self._terms.items():
            image = map_exponent(exponent, images)
            terms[image] = terms.get(image, 0) + coeff
        return LaurentPoly(terms)

    def rank(self) -> numbers.Rational:
        """Value at t = y = 1."""
        return _coeff(sum(self._terms.values(), 0))

    def min_exponent(self) -> tuple:
        if not self._terms:
            return ZERO_EXPONENT
        return tuple(min(column) for column in zip(*self._terms.keys()))

    def filter(self, predicate) -> "LaurentPoly":
        """Sub-sum of the terms whose doubled exponent satisfies `predicate`."""
        return LaurentPoly._trusted({e: c for e, c in self._terms.items() if predicate(e)})

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, coeff in sorted(self._terms.items(), reverse=True):
            monomial = format_exponent(exponent)
            if monomial == "1":
                text = str(coeff)
            elif coeff == 1:
                text = monomial
            elif coeff == -1:
                text = f"-{monomial}"
            else:
                text = f"{coeff}*{monomial}"
            parts.append(text)
        return " + ".join(parts).replace("+ -", "- ")


#####################################################################
# Handy constants

ONE = LaurentPoly.constant(1)
T1, T2, T3, T4, Y = (LaurentPoly.variable(i) for i in range(NVARS))
