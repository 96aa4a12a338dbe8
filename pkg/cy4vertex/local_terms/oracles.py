"""CY4Vertex independent checks of local terms

Reference computations that do not go through the redistribution:

- Taylor resolution of a monomial ideal on C^4, C* x C^3 or (C*)^2 x C^2
- the 3-fold vertex of a module in t1, t2, t3
- the rank of the twisted vertex at t = 1
- halving, dimensional reduction to 3-folds and PT0/PT1 edge reduction

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from itertools import combinations
from typing import Iterable

from cy4vertex.errors import InputError, RankMismatch, VerificationFailed
from cy4vertex.exact_algebra import (
    LaurentPoly, MonomialFraction, bracket_eval, cy_eliminate, expand_to_laurent, mf_sum, to_weight_class)
from cy4vertex.exact_algebra.laurent import NVARS, double
from cy4vertex.local_terms.chart import FIBRE, ChartCharacter, full_block, over, unit
from cy4vertex.local_terms.edge import EdgeCharacter, edge_polynomial
from cy4vertex.local_terms.vertex import Y_INVERSE, Y_MONOMIAL, vertex_polynomial
from cy4vertex.partitions import AXES, PAIRS, ModuleDecomposition, complement


#####################################################################
# Constants

MAX_TAYLOR_GENERATORS = 8

THREEFOLD_AXES = (0, 1, 2)

# t_a -> 1 for every torus variable, y kept.
AT_ONE = tuple((0,) * NVARS for _ in AXES) + (unit(4),)

# y -> t4
Y_TO_T4 = tuple(unit(a) for a in AXES) + (unit(FIBRE),)


#####################################################################
# Taylor resolution

def taylor_character(generators: Iterable[Iterable[int]], inverted: Iterable[int] = ()) -> MonomialFraction:
    """Character of R/I from the Taylor resolution of I = (x^g : g in generators).

    Raises:
        InputError: more than eight generators, or generators of the wrong length.
    """
    inverted = tuple(sorted(set(inverted)))
    axes = tuple(a for a in AXES if a not in inverted)
    generators = [tuple(int(x) for x in g) for g in generators]
    if len(generators) > MAX_TAYLOR_GENERATORS:
        raise InputError(f"Taylor oracle is limited to {MAX_TAYLOR_GENERATORS} generators, got {len(generators)}")
    if any(len(g) != len(AXES) for g in generators):
        raise InputError("Generators must be exponent vectors of length four")
    terms = {}
    for size in range(len(generators) + 1):
        for subset in combinations(generators, size):
            lcm = [0] * NVARS
            for g in subset:
                for a in axes:
                    lcm[a] = max(lcm[a], g[a])
            key = double(lcm)
            terms[key] = terms.get(key, 0) + (-1) ** size
    numerator = LaurentPoly(terms)
    return MonomialFraction(numerator, {double(unit(a)): -1 for a in axes})


def taylor_oracle(generators: Iterable[Iterable[int]], inverted: Iterable[int] = ()) -> LaurentPoly:
    """Unredistributed block of the quotient by a monomial ideal.

    With no inverted variable this is the vertex term of a finite module;
    with one inverted variable the leg block A_i, with two the surface
    block A_ij (local variables).

    Raises:
        InputError: bad generators or more than two inverted variables.
        NotLaurentPolynomial: the block is not a Laurent polynomial.
    """
    inverted = tuple(sorted(set(inverted)))
    if len(inverted) > 2 or set(inverted) - set(AXES):
        raise InputError(f"Ambient may invert at most two of the axes {AXES}, got {inverted}")
    z = taylor_character(generators, inverted)
    axes = tuple(a for a in AXES if a not in inverted)
    return expand_to_laurent(full_block(z, axes, (-1) ** len(inverted)))


#####################################################################
# Threefold vertex

def threefold_oracle(decomposition: ModuleDecomposition) -> LaurentPoly:
    """3-fold vertex F - Fbar/t123 + P123/t123 F Fbar + sum_i G_i / (1 - t_i).

    Raises:
        InputError: the module is not on the axes x1, x2, x3 or has a surface.
        NotLaurentPolynomial: the redistribution does not divide out.
    """
    if tuple(decomposition.axes) != THREEFOLD_AXES:
        raise InputError(f"3-fold modules live on the axes {THREEFOLD_AXES}, got {decomposition.axes}")
    if decomposition.dimension() > 1:
        raise InputError("3-fold vertex needs a module with finitely many legs and no surface")
    terms = [full_block(decomposition.reassemble(), THREEFOLD_AXES, -1)]
    for i in THREEFOLD_AXES:
        leg = decomposition.leg(i)
        if not leg.is_zero():
            terms.append(over(full_block(leg, tuple(a for a in THREEFOLD_AXES if a != i), 1), (i,)))
    return -expand_to_laurent(mf_sum(terms))


#####################################################################
# Rank at t = 1

def expected_rank_polynomial(chart: ChartCharacter) -> LaurentPoly:
    """rk(W)(2 - y - y^-1) - sum over ordered complementary pairs of |lambda_ij| |lambda_kl|."""
    value = (2 - Y_MONOMIAL - Y_INVERSE) * int(chart.w.rank())
    for i, j in PAIRS:
        k, l = complement(i, j)
        value = value - int(chart.surface(i, j).rank()) * int(chart.surface(k, l).rank())
    return value


def rank_check(chart: ChartCharacter) -> int:
    """Rank of the twisted vertex term, after checking its value at t = 1.

    Raises:
        RankMismatch: the twisted vertex at t = 1 is not the expected polynomial in y.
    """
    value = vertex_polynomial(chart, "tilde").substitute(AT_ONE)
    expected = expected_rank_polynomial(chart)
    if value != expected:
        raise RankMismatch("twisted vertex has the wrong value at t = 1", value=str(value), expected=str(expected))
    return int(value.rank())


#####################################################################
# Halving

def halving_check(chart: ChartCharacter) -> bool:
    """v + vbar == V modulo t1 t2 t3 t4 = 1."""
    v = vertex_polynomial(chart, "halved")
    return cy_eliminate(v + v.dual()) == cy_eliminate(vertex_polynomial(chart, "plain"))


#####################################################################
# Dimensional reduction

def _thickening(chart: ChartCharacter) -> int:
    """Thickness d of the only allowed surface lambda_12 = 1 + t3 + ... + t3^(d-1)."""
    surfaces = {pair for pair in PAIRS if not chart.surface(*pair).is_zero()}
    if not surfaces:
        return 0
    if surfaces != {(0, 1)}:
        raise InputError("Dimensional reduction allows only a thickened x1 x2 plane as surface")
    lam = chart.surface(0, 1)
    if any(exponent[FIBRE] for exponent in lam.exponents()):
        raise InputError("Thickened plane must be thickened along x3 only")
    if not chart.leg(2).is_zero():
        raise InputError("Dimensional reduction with a thickened plane allows no leg along x3")
    return int(lam.rank())


def residual_module(chart: ChartCharacter) -> ModuleDecomposition:
    """Module G in t1, t2, t3 left after removing the thickened plane, shifted by t3^-d."""
    d = _thickening(chart)
    shift = double((0, 0, -d, 0, 0))
    parts = {}
    for key, value in chart.decomposition.parts.items():
        if len(key) < 2:
            parts[key] = value.shift(shift)
    return ModuleDecomposition(THREEFOLD_AXES, parts)


def dimensional_reduction_check(chart: ChartCharacter) -> bool:
    """Compare the halved twisted vertex with the 3-fold vertex at y = t4.

    Inside the divisor {x4 = 0}: vtilde - V3D(G) == (t4 - y) Wbar modulo
    the CY relation. Off the divisor: the T-fixed weights of vtilde at y = t4 have
    negative total multiplicity, so its bracket vanishes.

    Raises:
        InputError: the chart extends along x4 or carries another surface.
        VerificationFailed: the relation fails.
    """
    local = ChartCharacter(chart.decomposition)
    v = vertex_polynomial(local, "halved_tilde")
    if local.inside_divisor():
        reference = threefold_oracle(residual_module(local))
        t4 = LaurentPoly.monomial(double(unit(FIBRE)))
        difference = v - reference - (t4 - Y_MONOMIAL) * local.w.dual()
        if not cy_eliminate(difference).is_zero():
            raise VerificationFailed("dimensional reduction failed", difference=str(cy_eliminate(difference)))
        return True
    fixed = to_weight_class(v.substitute(Y_TO_T4)).fixed_part()
    if not any(m < 0 for _, m in fixed.items()):
        raise VerificationFailed("dimensional reduction failed: no vanishing fixed term off the divisor")
    return True


#####################################################################
# Edge reduction

def _bracket_at_t4(edge: EdgeCharacter):
    value = edge_polynomial(edge, "halved_tilde").substitute(Y_TO_T4)
    return bracket_eval(to_weight_class(-value))


def edge_reduction_check(pt0_edge: EdgeCharacter, pt1_edge: EdgeCharacter) -> bool:
    """PT0 and PT1 halved twisted edge terms give the same bracket at y = t4."""
    return _bracket_at_t4(pt0_edge) == _bracket_at_t4(pt1_edge)
