"""CY4Vertex exact algebra operations

Public operations over LaurentPoly, MonomialFraction and WeightClass.
The types themselves live in `laurent`, `fraction` and `weights`.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import Mapping, Union

from cy4vertex.errors import InputError
from cy4vertex.exact_algebra.fraction import MonomialFraction, expand_to_laurent, mf_sum
from cy4vertex.exact_algebra.laurent import IDENTITY_IMAGES, NVARS, VARIABLES, LaurentPoly
from cy4vertex.exact_algebra.weights import WeightClass


Algebraic = Union[LaurentPoly, MonomialFraction]


#####################################################################
# Internal helper

def _variable_index(variable) -> int:
    if isinstance(variable, int) and 0 <= variable < NVARS:
        return variable
    if variable in VARIABLES:
        return VARIABLES.index(variable)
    raise InputError(f"Unknown variable '{variable}'")


def substitution_images(mapping: Mapping) -> tuple:
    """Images tuple from {variable: integer exponent vector of its image}."""
    images = list(IDENTITY_IMAGES)
    for variable, image in mapping.items():
        image = tuple(image) + (0,) * (NVARS - len(tuple(image)))
        images[_variable_index(variable)] = tuple(int(x) for x in image)
    return tuple(images)


#####################################################################
# Operations

def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise InputError(f"Unknown Laurent operation '{op}'")


def substitute_monomial(value: Algebraic, mapping: Mapping) -> Algebraic:
    """Monomial substitution, e.g. {"t2": (-m, 1, 0, 0)} for t2 -> t2 t1^-m."""
    return value.substitute(substitution_images(mapping))


def lp_dual(p: LaurentPoly) -> LaurentPoly:
    return p.dual()


def mf_dual(f: MonomialFraction) -> MonomialFraction:
    return f.dual()


def mf_add(a: MonomialFraction, b: MonomialFraction) -> MonomialFraction:
    return mf_sum((a, b))


def mf_mul(a: MonomialFraction, b: MonomialFraction) -> MonomialFraction:
    return a * b


def adams(value: Union[Algebraic, WeightClass], k: int):
    """Adams operation psi_k: every exponent times k."""
    if isinstance(value, WeightClass):
        return WeightClass({tuple(k * x for x in w): m for w, m in value.items()})
    return value.adams(k)


def as_fraction(value: Algebraic) -> MonomialFraction:
    return value if isinstance(value, MonomialFraction) else MonomialFraction(value)


def to_laurent(value: Algebraic) -> LaurentPoly:
    return expand_to_laurent(value) if isinstance(value, MonomialFraction) else value


