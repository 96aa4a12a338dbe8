"""CY4Vertex edge terms

The edge term of a torus invariant curve C = {x_a = 0, a != i} in chart
alpha with normal weights m_a (sum -2) is

    E = (t_i^-1 B - B|sub) / (1 - t_i^-1),   B = A_i + sum_a A_ia / (1 - t_a)

with sub: t_a -> t_a t_i^(-m_a). The halved edge term uses the halved
blocks over the three non-fibre axes.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import Iterable, Mapping

from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, WeightClass, mf_sum, to_weight_class
from cy4vertex.exact_algebra.laurent import NVARS, double
from cy4vertex.local_terms.chart import (
    FIBRE, FLAVORS, ChartCharacter, check_fixed, exact, full_block, half_block, monomial, over, pad, unit)
from cy4vertex.local_terms.vertex import HALVED_AXES, require_halvable, y_twist
from cy4vertex.partitions import AXES, complement


#####################################################################
# EdgeCharacter

class EdgeCharacter:
    """Leg data of one chart along a torus invariant curve."""

    __slots__ = ("chart", "axis", "normal", "insertion_beta")

    def __init__(self, chart: ChartCharacter, axis: int, normal: Mapping[int, int],
                 insertion_beta: Iterable[int] = None):
        if axis not in AXES:
            raise InputError(f"Edge axis must be one of {AXES}, got {axis}")
        normal = {int(a): int(m) for a, m in normal.items()}
        if set(normal) != set(AXES) - {axis}:
            raise InputError(f"Normal weights must be given for the axes other than {axis}, got {sorted(normal)}")
        if sum(normal.values()) != -2:
            raise InputError(f"Normal weights {normal} violate the CY degree condition (sum must be -2)")
        self.chart = chart
        self.axis = axis
        self.normal = normal
        self.insertion_beta = chart.insertion if insertion_beta is None else pad(insertion_beta)

    @property
    def substitution(self) -> tuple:
        """Local images for t_a -> t_a t_i^(-m_a)."""
        images = []
        for a in range(NVARS):
            image = list(unit(a))
            if a in self.normal:
                image[self.axis] -= self.normal[a]
            images.append(tuple(image))
        return tuple(images)

    def leg(self) -> LaurentPoly:
        return self.chart.leg(self.axis)

    def __repr__(self) -> str:
        return f"EdgeCharacter(axis={self.axis}, normal={self.normal}, {self.chart!r})"


#####################################################################
# Internal helper

def _preedge(edge: EdgeCharacter, halved: bool) -> LaurentPoly:
    """B (or b): the leg blocks over the axes transverse to the curve."""
    i, chart = edge.axis, edge.chart
    if halved:
        if i == FIBRE:
            raise InputError("The halved edge term is defined for curves off the fibre axis")
        require_halvable(chart)
        axes = tuple(a for a in HALVED_AXES if a != i)
        terms = [half_block(chart.restricted(i), axes, -1)]
        for a in axes:
            lam = chart.surface(i, a)
            if not lam.is_zero():
                terms.append(over(half_block(lam, tuple(b for b in axes if b != a), 1), (a,)))
    else:
        axes = tuple(a for a in AXES if a != i)
        terms = [full_block(chart.restricted(i), axes, -1)]
        for a in axes:
            lam = chart.surface(i, a)
            if not lam.is_zero():
                terms.append(over(full_block(lam, complement(i, a), 1), (a,)))
    return exact(mf_sum(terms), "edge")


def _inverse_axis(axis: int) -> tuple:
    return double(tuple(-x for x in unit(axis)))


def edge_tau(edge: EdgeCharacter) -> LaurentPoly:
    """Tautological contribution (L_beta W_i|sub - t_i^-1 L_alpha W_i) / (1 - t_i^-1), global."""
    chart = edge.chart
    w_i = edge.leg()
    t_inverse = LaurentPoly.monomial(_inverse_axis(edge.axis))
    numerator = (chart.to_global(w_i.substitute(edge.substitution)) * monomial(edge.insertion_beta)
                 - chart.to_global(t_inverse * w_i) * chart.global_insertion())
    image = chart.to_global(t_inverse)
    ((exponent, _),) = image.items()
    return exact(MonomialFraction(numerator, {exponent: -1}), "edge tautological")


#####################################################################
# Operations

def edge_polynomial(edge: EdgeCharacter, flavor: str = "plain") -> LaurentPoly:
    """Exact edge term of the given flavor in global variables.

    Raises:
        InputError: unknown flavor or a halved flavor that does not apply.
        RedistributionFailed: the leg blocks or the quotient do not divide out.
        PositiveFixedTerm: the edge term has a T-fixed weight.
    """
    if flavor not in FLAVORS:
        raise InputError(f"Unknown edge flavor '{flavor}', expected one of {FLAVORS}")
    halved = flavor.startswith("halved")
    chart = edge.chart
    if chart.leg(edge.axis).is_zero() and all(chart.surface(edge.axis, a).is_zero() for a in AXES if a != edge.axis):
        value = LaurentPoly()
    else:
        b = _preedge(edge, halved)
        t_inverse = LaurentPoly.monomial(_inverse_axis(edge.axis))
        numerator = t_inverse * b - b.substitute(edge.substitution)
        value = chart.to_global(exact(MonomialFraction(numerator, {_inverse_axis(edge.axis): -1}), "edge"))
        check_fixed(value, "edge", allow_negative=False)
    if flavor.endswith("tilde"):
        value = y_twist(value, edge_tau(edge), halved)
    return value


def edge_term(edge: EdgeCharacter, flavor: str = "plain") -> WeightClass:
    return to_weight_class(edge_polynomial(edge, flavor))
