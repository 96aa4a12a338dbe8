"""CY4Vertex limits of rational functions

Two ways of collapsing the torus variables:

* cocharacter specialization t_i = u^(a_i), sum a_i = 0, evaluated at
  u = 1 with every (1 - u^k) factor cancelled exactly;
* cohomological limit t_i = exp(b s_i), y = exp(b m), b -> 0, which turns
  each bracket into a linear form.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from fractions import Fraction
import math
import sympy

from cy4vertex import settings
from cy4vertex.errors import InputError, NonGenericCocharacter, NotLaurentPolynomial, SpecializationPole
from cy4vertex.exact_algebra.fraction import MonomialFraction, cy_eliminate, expand_to_laurent
from cy4vertex.exact_algebra.laurent import LaurentPoly


#####################################################################
# Constants

S1, S2, S3, M = sympy.symbols("s1 s2 s3 m")

# Linear forms per variable once t4 has been eliminated.
_FORMS = (S1, S2, S3, sympy.Integer(0), M)

_V = (1, 0, 0, 0, 0)


#####################################################################
# Cocharacter specialization

def specialize_cocharacter(f: MonomialFraction, cocharacter: tuple = None) -> MonomialFraction:
    """Limit u -> 1 of f(t_i = u^(a_i)) as a fraction in y alone.

    Raises:
        NonGenericCocharacter: a y-free factor pairs to zero against the cocharacter.
        SpecializationPole: a pole at u = 1 survives.
    """
    a = tuple(cocharacter or settings.CY4VERTEX_COCHARACTER)
    if len(a) != 4 or sum(a) != 0:
        raise InputError(f"Cocharacter {a} must have four entries summing to zero")
    if f.is_zero():
        return MonomialFraction()

    def u_power(exponent: tuple) -> int:
        return sum(x * y for x, y in zip(a, exponent[:4]))

    # v = u^(1/2) lives in the t1 slot
    numerator = {}
    for exponent, coeff in f.numerator.items():
        key = (u_power(exponent), 0, 0, 0, exponent[4])
        numerator[key] = numerator.get(key, 0) + coeff
    numerator = LaurentPoly(numerator)

    order = 0
    scalar = Fraction(1)
    y_factors = {}
    for w, e in f.factors.items():
        k = u_power(w)
        if w[4]:
            # regular and nonzero at u = 1
            key = (0, 0, 0, 0, w[4])
            y_factors[key] = y_factors.get(key, 0) + e
            continue
        if not k:
            raise NonGenericCocharacter(f"Cocharacter {a} is not generic for weight {w}", weight=w)
        # (1 - v^k) = (1 - v) [k]_v up to a unit with value k at v = 1
        order += e
        scalar *= Fraction(k) ** e

    if order > 0:
        return MonomialFraction()
    if order < 0:
        try:
            numerator = expand_to_laurent(MonomialFraction(numerator, {_V: order}))
        except NotLaurentPolynomial as err:  # NotLaurentPolynomial(InternalAssertion)
            raise SpecializationPole("specialization pole at u = 1", cocharacter=a) from err

    collapsed = {}
    for exponent, coeff in numerator.items():
        key = (0, 0, 0, 0, exponent[4])
        collapsed[key] = collapsed.get(key, 0) + coeff
    return MonomialFraction(LaurentPoly(collapsed) * scalar, y_factors)


def specialize_with_retry(f: MonomialFraction, cocharacters: tuple = None) -> MonomialFraction:
    """Cocharacter specialization trying the configured fallbacks in order."""
    candidates = cocharacters or (tuple(settings.CY4VERTEX_COCHARACTER),) + settings.COCHARACTER_FALLBACKS
    last_error = None
    for a in candidates:
        try:
            return specialize_cocharacter(f, a)
        except NonGenericCocharacter as err:  # NonGenericCocharacter(MathematicalFailure)
            settings.warn(f"{err.message}; retrying with another cocharacter")
            last_error = err
    raise last_error


#####################################################################
# Cohomological limit

def _linear_form(exponent: tuple):
    return sum((sympy.Rational(x, 2) * form for x, form in zip(exponent, _FORMS) if x), sympy.Integer(0))


def cohomological_leading(f: MonomialFraction):
    """Limit b -> 0 of f(t = exp(b s), y = exp(b m)) as a sympy expression in s1, s2, s3, m.

    Raises:
        SpecializationPole: the expression has a pole at b = 0.
    """
    if f.is_zero():
        return sympy.Integer(0)
    f = cy_eliminate(f)
    numerator = f.numerator
    forms = [(coeff, _linear_form(exponent)) for exponent, coeff in numerator.items()]
    order = 0
    leading = sympy.Integer(0)
    for order in range(len(forms) + 1):
        leading = sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * form ** order for c, form in forms))
        if leading != 0:
            break
    leading = leading / math.factorial(order)

    for w, e in f.factors.items():
        form = _linear_form(w)
        if form == 0:
            raise SpecializationPole("factor with vanishing linear form in cohomological limit", weight=w)
        leading = leading * (-form) ** e
        order += e

    if order > 0:
        return sympy.Integer(0)
    if order < 0:
        raise SpecializationPole("pole at b = 0 in cohomological limit", order=order)
    return sympy.factor(sympy.cancel(leading))


def refined_leading(f: MonomialFraction, q_power: int):
    """b -> 0, then q' = -q/m and m -> infinity, for the coefficient of q^q_power."""
    expression = cohomological_leading(f) * (-1 / M) ** q_power
    value = sympy.limit(expression, M, sympy.oo)
    if value.has(sympy.oo, sympy.zoo, sympy.nan):
        raise SpecializationPole("pole at m = infinity in cohomological limit", q_power=q_power)
    return sympy.factor(value)


def specialize_limit(f: MonomialFraction, mode: str, cocharacter: tuple = None, q_power: int = 0):
    """Dispatch over the three specialization modes.

    Args:
        f (MonomialFraction): exact rational function
        mode (str): "cocharacter", "cohomological" or "cohomological_refined"
        cocharacter (tuple): a1..a4 summing to zero; the configured default when omitted
        q_power (int): q-degree of the coefficient, for the refined mode

    Returns:
        MonomialFraction in y (cocharacter mode) or a sympy expression.
    """
    if mode == "cocharacter":
        if cocharacter:
            return specialize_cocharacter(f, cocharacter)
        return specialize_with_retry(f)
    if mode == "cohomological":
        return cohomological_leading(f)
    if mode == "cohomological_refined":
        return refined_leading(f, q_power)
    raise InputError(f"Unknown specialization mode '{mode}'")


