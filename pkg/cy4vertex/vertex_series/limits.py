"""CY4Vertex limits and palindromy of vertex series

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from cy4vertex.errors import InputError, NotLaurentPolynomial
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, bracket_eval, expand_to_laurent, specialize_limit, weights_of
from cy4vertex.vertex_series.series import QSeries


#####################################################################
# Constants

LIMIT_MODES = {"tautological": "cohomological", "cohomological": "cohomological_refined"}

Y_BRACKET = bracket_eval(weights_of([((0, 0, 0, 0, 1), 1)]))


#####################################################################
# Operations

def cohomological_limit(series: QSeries, mode: str = "tautological") -> QSeries:
    """Coefficientwise b -> 0 limit of the normalized series.

    tautological keeps m (y = e^(b m)); cohomological also substitutes
    q' = -q/m and lets m -> infinity.

    Raises:
        InputError: unknown mode.
        SpecializationPole: a coefficient has a pole in the limit.
    """
    if mode not in LIMIT_MODES:
        raise InputError(f"Unknown limit mode '{mode}', expected one of {tuple(LIMIT_MODES)}")
    normalized = series.normalized()
    return normalized.map(lambda key, value: specialize_limit(value, LIMIT_MODES[mode], q_power=key[0]))


def palindromy_check(coefficient, rk_minus_vd: int = 0, vd: int = None) -> bool:
    """Whether coefficient / [y]^rk_minus_vd is a Laurent polynomial f in y^(1/2)
    with f(y) = f(1/y); with vd also y^(vd/2) f is a polynomial of degree <= vd.

    Raises:
        InputError: the coefficient depends on t.
    """
    value = coefficient if isinstance(coefficient, MonomialFraction) else MonomialFraction(coefficient)
    for term in [value.numerator] + [LaurentPoly.monomial(w) for w in value.factors]:
        if any(any(exponent[:4]) for exponent in term.exponents()):
            raise InputError("Palindromy is a property of coefficients in y alone")
    try:
        f = expand_to_laurent(value / Y_BRACKET ** rk_minus_vd)
    except NotLaurentPolynomial:  # NotLaurentPolynomial(InternalAssertion)
        return False
    if f != f.dual():
        return False
    if vd is not None:
        for exponent in f.exponents():
            if abs(exponent[4]) > vd or (exponent[4] + vd) % 2:
                return False
    return True
