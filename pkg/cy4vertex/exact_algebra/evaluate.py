"""CY4Vertex modular evaluation

Evaluates Laurent polynomials and monomial fractions at points of (Z/p)^5,
p = 2^61 - 1. A point stores square roots a_i with t_i = a_i^2, so a doubled
exponent e contributes a_i^e. Used for fast equality screening and as the
substrate of sign searches; never authoritative.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


import random

from cy4vertex.exact_algebra.fraction import MonomialFraction
from cy4vertex.exact_algebra.laurent import LaurentPoly
from cy4vertex.settings import MODULUS


def random_point(rng: random.Random, calabi_yau: bool = True, modulus: int = MODULUS) -> tuple:
    """Random square roots (a1, a2, a3, a4, b); with calabi_yau, a1 a2 a3 a4 = 1."""
    values = [rng.randrange(2, modulus - 1) for _ in range(5)]
    if calabi_yau:
        values[3] = pow(values[0] * values[1] * values[2] % modulus, -1, modulus)
    return tuple(values)


def monomial_mod_p(exponent: tuple, point: tuple, modulus: int = MODULUS) -> int:
    value = 1
    for e, a in zip(exponent, point):
        if e:
            value = value * pow(a, e, modulus) % modulus
    return value


def _coeff_mod_p(coeff, modulus: int) -> int:
    if isinstance(coeff, int):
        return coeff % modulus
    return coeff.numerator * pow(coeff.denominator, -1, modulus) % modulus


def evaluate_mod_p(value, point: tuple, modulus: int = MODULUS) -> int:
    """Value of a LaurentPoly or MonomialFraction at `point`.

    Raises:
        ZeroDivisionError: a denominator factor vanishes at the point.
    """
    if isinstance(value, LaurentPoly):
        total = 0
        for exponent, coeff in value.items():
            total += _coeff_mod_p(coeff, modulus) * monomial_mod_p(exponent, point, modulus)
        return total % modulus
    if isinstance(value, MonomialFraction):
        total = evaluate_mod_p(value.numerator, point, modulus)
        for w, e in value.factors.items():
            base = (1 - monomial_mod_p(w, point, modulus)) % modulus
            if not base:
                if e > 0:
                    return 0
                raise ZeroDivisionError(f"Denominator factor {w} vanishes at the evaluation point")
            total = total * pow(base, e, modulus) % modulus
        return total
    raise TypeError(f"Cannot evaluate {type(value).__name__} modulo p")


def probably_equal(a, b, rng: random.Random, trials: int = 3, calabi_yau: bool = True) -> bool:
    """Randomized equality screen; a False answer is certain, a True answer is not."""
    for _ in range(trials):
        point = random_point(rng, calabi_yau)
        try:
            if evaluate_mod_p(a, point) != evaluate_mod_p(b, point):
                return False
        except ZeroDivisionError:
            continue
    return True
