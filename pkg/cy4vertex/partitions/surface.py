"""CY4Vertex pure surface analysis

For a pure 2-dimensional fixed subscheme Z_lambda the W-scheme

    W = (Z_12 u Z_13 u Z_23) n (Z_14 u Z_24 u Z_34)

controls the Cohen-Macaulay property: Z_lambda is CM iff the maximal
0-dimensional subsheaf T0(O_W) vanishes.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from itertools import product
from typing import Mapping, NamedTuple

from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction
from cy4vertex.partitions.decompose import decompose_module
from cy4vertex.partitions.finite import AXES, FinitePartition, complement


#####################################################################
# Constants

# Surfaces not involving axis 4 versus surfaces involving it.
_UPPER = ((0, 1), (0, 2), (1, 2))
_LOWER = ((0, 3), (1, 3), (2, 3))


class CmClassification(NamedTuple):
    case: str
    cohen_macaulay: bool
    w_character: MonomialFraction
    t0_character: LaurentPoly


#####################################################################
# Internal helper

def in_surface(pair: tuple, lam: FinitePartition, x: tuple) -> bool:
    """x lies on the cylinder Z_lambda_ab over the cross section lambda."""
    if any(c < 0 for c in x):
        return False
    c, d = complement(*pair)
    return (x[c], x[d]) in lam


def surface_extent(lambdas: Mapping[tuple, FinitePartition]) -> int:
    return max((lam.extent for lam in lambdas.values()), default=0)


def _nonempty(lambdas: Mapping[tuple, FinitePartition]) -> dict:
    lambdas = {tuple(sorted(pair)): lam for pair, lam in lambdas.items() if lam}
    if not lambdas:
        raise InputError("not a surface: every lambda is empty")
    return lambdas


def w_membership(lambdas: Mapping[tuple, FinitePartition]):
    def member(x: tuple) -> bool:
        upper = any(in_surface(p, lambdas[p], x) for p in _UPPER if p in lambdas)
        return upper and any(in_surface(p, lambdas[p], x) for p in _LOWER if p in lambdas)
    return member


def _torsion_weights(lambdas: Mapping[tuple, FinitePartition]) -> list:
    """Weights of W generating a finite submodule of O_W."""
    member = w_membership(lambdas)
    bound = surface_extent(lambdas) + 1
    torsion = []
    for x in product(range(bound + 1), repeat=4):
        if not member(x):
            continue
        seen, stack, finite = {x}, [x], True
        while stack and finite:
            point = stack.pop()
            for a in AXES:
                step = tuple(c + int(i == a) for i, c in enumerate(point))
                if step in seen or not member(step):
                    continue
                if step[a] > bound:
                    finite = False
                    break
                seen.add(step)
                stack.append(step)
        if finite:
            torsion.append(x)
    return torsion


#####################################################################
# Operations

def compute_T0_OW(lambdas: Mapping[tuple, FinitePartition]) -> LaurentPoly:
    """Character of T0(O_W); a weight is torsion iff the submodule it generates is finite."""
    lambdas = _nonempty(lambdas)
    return LaurentPoly.from_weights({x: 1 for x in _torsion_weights(lambdas)})


def t0_weights(lambdas: Mapping[tuple, FinitePartition]) -> frozenset:
    return frozenset(_torsion_weights(_nonempty(lambdas)))


def cm_classify(lambdas: Mapping[tuple, FinitePartition]) -> CmClassification:
    """Case (i) W empty, (ii) W finite, (iii) W a curve with embedded points, (iv) W a pure curve."""
    lambdas = _nonempty(lambdas)
    member = w_membership(lambdas)
    hi = surface_extent(lambdas)
    decomposition = decompose_module(lambda x: int(member(x)), 0, hi, max_dimension=1)
    t0 = compute_T0_OW(lambdas)
    if decomposition.is_empty():
        case = "i"
    elif decomposition.dimension() == 0:
        case = "ii"
    elif not t0.is_zero():
        case = "iii"
    else:
        case = "iv"
    return CmClassification(case, case in ("i", "iv"), decomposition.reassemble(), t0)


def quot_bound(lambdas: Mapping[tuple, FinitePartition]) -> int:
    """Length of T0(O_W): the largest PT0 box configuration over mu^lambda."""
    return int(compute_T0_OW(lambdas).rank())
