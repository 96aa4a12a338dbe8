"""CY4Vertex chart characters

A ChartCharacter is everything the vertex and edge formulas need from
one affine chart: the decomposition (W, W_i, lambda_ij) of the chart
module, the insertion weight L of the chart, and the images of the local
variables in the global character lattice.

Local computations happen in the chart variables t1..t4, y; results are
handed out in global variables.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import Iterable

from cy4vertex.errors import InputError, NotLaurentPolynomial, PositiveFixedTerm, RedistributionFailed
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, expand_to_laurent, mf_sum, to_weight_class
from cy4vertex.exact_algebra.laurent import IDENTITY_IMAGES, NVARS, double
from cy4vertex.partitions import AXES, BoxConfig, ModuleDecomposition, SolidPartition, chart_module


#####################################################################
# Constants

FIBRE = 3

FLAVORS = ("plain", "tilde", "halved", "halved_tilde")


#####################################################################
# Internal helper

def unit(axis: int) -> tuple:
    return tuple(int(i == axis) for i in range(NVARS))


def pad(weight: Iterable[int]) -> tuple:
    weight = tuple(int(x) for x in weight)
    if len(weight) > NVARS:
        raise InputError(f"Weight {weight} has more than {NVARS} coordinates")
    return weight + (0,) * (NVARS - len(weight))


def monomial(weight: Iterable[int]) -> LaurentPoly:
    return LaurentPoly.monomial(double(pad(weight)))


def t_product(axes: Iterable[int]) -> LaurentPoly:
    weight = [0] * NVARS
    for a in axes:
        weight[a] += 1
    return monomial(weight)


def over(value, axes: Iterable[int], inverse: bool = False) -> MonomialFraction:
    """value / prod_a (1 - t_a), or (1 - t_a^-1) with inverse."""
    sign = -2 if inverse else 2
    factors = {tuple(sign * x for x in unit(a)): -1 for a in axes}
    return _fraction(value) * MonomialFraction(LaurentPoly.constant(1), factors)


def p_factor(axes: Iterable[int]) -> MonomialFraction:
    """P_S = prod_a (1 - t_a)."""
    return MonomialFraction(LaurentPoly.constant(1), {double(unit(a)): 1 for a in axes})


def _fraction(value) -> MonomialFraction:
    if isinstance(value, MonomialFraction):
        return value
    return MonomialFraction(value)


def full_block(z, axes: tuple, sign: int = 1) -> MonomialFraction:
    """sign z + zbar / t_S - P_S / t_S z zbar."""
    z = _fraction(z)
    if z.is_zero():
        return MonomialFraction()
    inverse = t_product(axes) ** -1
    zbar = z.dual()
    return mf_sum((z * sign, zbar * inverse, -(p_factor(axes) * inverse) * z * zbar))


def half_block(z, axes: tuple, sign: int = 1) -> MonomialFraction:
    """sign z + P_S / t_S z zbar."""
    z = _fraction(z)
    if z.is_zero():
        return MonomialFraction()
    inverse = t_product(axes) ** -1
    return mf_sum((z * sign, (p_factor(axes) * inverse) * z * z.dual()))


def exact(value: MonomialFraction, term: str) -> LaurentPoly:
    """Exact division of an assembled redistribution.

    Raises:
        RedistributionFailed: the denominators do not cancel.
    """
    try:
        return expand_to_laurent(value)
    except NotLaurentPolynomial as err:  # NotLaurentPolynomial(InternalAssertion)
        raise RedistributionFailed("redistribution cancellation failed", term=term) from err


def check_fixed(poly: LaurentPoly, term: str, allow_negative: bool = True) -> None:
    """No positive T-fixed weight; with allow_negative False no T-fixed weight at all.

    Raises:
        PositiveFixedTerm: the condition fails.
    """
    fixed = to_weight_class(poly).fixed_part()
    for weight, mult in fixed.items():
        if mult > 0:
            raise PositiveFixedTerm("violates no-positive-fixed lemma", term=term, weight=weight, multiplicity=mult)
        if not allow_negative:
            raise PositiveFixedTerm(f"{term} term has a T-fixed weight", term=term, weight=weight, multiplicity=mult)


def images_from_weights(weights: Iterable[Iterable[int]]) -> tuple:
    """Substitution images sending local t_a to the global monomial t^(w_a); y is kept."""
    weights = [pad(w) for w in weights]
    if len(weights) != len(AXES):
        raise InputError(f"A chart needs {len(AXES)} coordinate weights, got {len(weights)}")
    return tuple(weights) + (unit(4),)


#####################################################################
# ChartCharacter

class ChartCharacter:
    """Decomposed chart module with insertion weight and global images."""

    __slots__ = ("decomposition", "insertion", "images", "label")

    def __init__(self, decomposition: ModuleDecomposition, insertion: Iterable[int] = (),
                 images: tuple = IDENTITY_IMAGES, label: str = ""):
        if tuple(decomposition.axes) != AXES:
            raise InputError(f"Chart modules live on the four axes {AXES}, got {decomposition.axes}")
        self.decomposition = decomposition
        self.insertion = pad(insertion)
        self.images = tuple(tuple(image) for image in images)
        self.label = label

    @classmethod
    def from_solid(cls, pi: SolidPartition, config: BoxConfig = None, **kwargs) -> "ChartCharacter":
        return cls(chart_module(pi, config), **kwargs)

    @property
    def w(self) -> LaurentPoly:
        return self.decomposition.w

    def leg(self, i: int) -> LaurentPoly:
        return self.decomposition.leg(i)

    def surface(self, i: int, j: int) -> LaurentPoly:
        return self.decomposition.surface(i, j)

    def restricted(self, i: int) -> MonomialFraction:
        """Z_i: the module with x_i inverted, as a fraction in the other variables."""
        return self.decomposition.restricted(i).reassemble()

    @property
    def character(self) -> MonomialFraction:
        return self.decomposition.reassemble()

    def is_empty(self) -> bool:
        return self.decomposition.is_empty()

    def directions(self) -> set:
        """Axes carrying a leg or a surface."""
        result = set()
        for key in self.decomposition.parts:
            result.update(key)
        return result

    def off_fibre(self) -> bool:
        """Set theoretically inside Z(x4): nothing extends along the fibre axis."""
        return FIBRE not in self.directions()

    def inside_divisor(self) -> bool:
        """Scheme theoretically inside Z(x4)."""
        for value in self.decomposition.parts.values():
            if any(exponent[FIBRE] for exponent in value.exponents()):
                return False
        return True

    def to_global(self, value):
        if self.images == IDENTITY_IMAGES:
            return value
        return value.substitute(self.images)

    def global_insertion(self) -> LaurentPoly:
        return monomial(self.insertion)

    def __repr__(self) -> str:
        return f"ChartCharacter({self.label or self.decomposition!r}, L={self.insertion[:4]})"
