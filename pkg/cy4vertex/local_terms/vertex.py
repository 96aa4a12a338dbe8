"""CY4Vertex vertex terms

Redistributed vertex term of a chart character:

    V = Z + Zbar/T - P1234/T Z Zbar
        + sum_i A_i / (1 - t_i) + sum_{i<j} A_ij / ((1 - t_i)(1 - t_j))

where A_i is the negated block of the leg module Z_i in the three other
variables and A_ij the block of lambda_ij in the two complementary
variables. The halved term v keeps only the x4-positive half and exists
when nothing extends along x4.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from itertools import combinations

from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, WeightClass, mf_sum, to_weight_class
from cy4vertex.local_terms.chart import FIBRE, FLAVORS, ChartCharacter, check_fixed, exact, full_block, half_block, over
from cy4vertex.partitions import AXES, complement


#####################################################################
# Constants

HALVED_AXES = tuple(a for a in AXES if a != FIBRE)

Y_MONOMIAL = LaurentPoly.monomial((0, 0, 0, 0, 2))
Y_INVERSE = LaurentPoly.monomial((0, 0, 0, 0, -2))


#####################################################################
# Internal helper

def _others(axes: tuple, *drop: int) -> tuple:
    return tuple(a for a in axes if a not in drop)


def plain_fraction(chart: ChartCharacter) -> MonomialFraction:
    """V before exact division, in local variables."""
    terms = [full_block(chart.character, AXES, 1)]
    for i in AXES:
        z_i = chart.restricted(i)
        if z_i.is_zero():
            continue
        terms.append(over(full_block(z_i, _others(AXES, i), -1), (i,)))
    for i, j in combinations(AXES, 2):
        lam = chart.surface(i, j)
        if lam.is_zero():
            continue
        terms.append(over(full_block(lam, complement(i, j), 1), (i, j)))
    return mf_sum(terms)


def require_halvable(chart: ChartCharacter) -> None:
    """
    Raises:
        InputError: the chart module extends along x4.
    """
    if not chart.off_fibre():
        raise InputError("Halved terms need a module with no leg or surface along x4", chart=repr(chart))


def halved_fraction(chart: ChartCharacter) -> MonomialFraction:
    """v before exact division, in local variables."""
    require_halvable(chart)
    terms = [half_block(chart.character, HALVED_AXES, 1)]
    for i in HALVED_AXES:
        z_i = chart.restricted(i)
        if z_i.is_zero():
            continue
        terms.append(over(half_block(z_i, _others(HALVED_AXES, i), -1), (i,)))
    for i, j in combinations(HALVED_AXES, 2):
        lam = chart.surface(i, j)
        if lam.is_zero():
            continue
        terms.append(over(half_block(lam, _others(HALVED_AXES, i, j), 1), (i, j)))
    return mf_sum(terms)


def vertex_tau(chart: ChartCharacter) -> LaurentPoly:
    """Tautological contribution L W of the chart, in global variables."""
    return chart.global_insertion() * chart.to_global(chart.w)


def y_twist(value: LaurentPoly, tau: LaurentPoly, halved: bool = False) -> LaurentPoly:
    """value - y conj(tau) - y^-1 tau; the halved form drops the y^-1 block."""
    result = value - Y_MONOMIAL * tau.dual()
    if not halved:
        result = result - Y_INVERSE * tau
    return result


#####################################################################
# Operations

def vertex_polynomial(chart: ChartCharacter, flavor: str = "plain") -> LaurentPoly:
    """Exact vertex term of the given flavor as a Laurent polynomial in global variables.

    Raises:
        InputError: unknown flavor or a halved flavor on a module along x4.
        RedistributionFailed: the redistribution does not divide out.
        PositiveFixedTerm: the plain or halved term has a positive T-fixed weight.
    """
    if flavor not in FLAVORS:
        raise InputError(f"Unknown vertex flavor '{flavor}', expected one of {FLAVORS}")
    halved = flavor.startswith("halved")
    fraction = halved_fraction(chart) if halved else plain_fraction(chart)
    value = chart.to_global(exact(fraction, "vertex"))
    check_fixed(value, "vertex")
    if flavor.endswith("tilde"):
        value = y_twist(value, vertex_tau(chart), halved)
    return value


def vertex_term(chart: ChartCharacter, flavor: str = "plain") -> WeightClass:
    return to_weight_class(vertex_polynomial(chart, flavor))
