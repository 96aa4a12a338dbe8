"""CY4Vertex module decomposition

A torus equivariant module on an affine chart with finitely many
infinite directions decomposes uniquely as

    Z = W + sum_i W_i / (1 - t_i) + sum_{i<j} lambda_ij / ((1 - t_i)(1 - t_j))

with W_i independent of t_i and lambda_ij independent of t_i, t_j. The
decomposition is read off from a weight function (dimension of the weight
space at x) by Moebius inversion over the directions sent to infinity.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from itertools import combinations, product
from typing import Callable, Mapping

from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, mf_sum
from cy4vertex.partitions.finite import AXES


#####################################################################
# ModuleDecomposition

class ModuleDecomposition:
    """Parts of a chart character keyed by the frozenset of infinite directions."""

    __slots__ = ("axes", "parts")

    def __init__(self, axes: tuple, parts: Mapping[frozenset, LaurentPoly]):
        self.axes = tuple(axes)
        self.parts = {frozenset(k): v for k, v in parts.items() if not v.is_zero()}

    def part(self, *directions: int) -> LaurentPoly:
        return self.parts.get(frozenset(directions), LaurentPoly())

    @property
    def w(self) -> LaurentPoly:
        return self.part()

    def leg(self, i: int) -> LaurentPoly:
        return self.part(i)

    def surface(self, i: int, j: int) -> LaurentPoly:
        return self.part(i, j)

    def is_empty(self) -> bool:
        return not self.parts

    def dimension(self) -> int:
        """Largest number of infinite directions carried by a nonzero part."""
        return max((len(k) for k in self.parts), default=-1)

    @property
    def renormalized_volume(self) -> int:
        return int(self.w.rank())

    def restricted(self, i: int) -> "ModuleDecomposition":
        """Decomposition of the module with x_i inverted, in the other directions."""
        axes = tuple(a for a in self.axes if a != i)
        return ModuleDecomposition(axes, {k - {i}: v for k, v in self.parts.items() if i in k})

    def reassemble(self) -> MonomialFraction:
        terms = []
        for directions, value in self.parts.items():
            terms.append(MonomialFraction(value, {_unit_doubled(a): -1 for a in directions}))
        return mf_sum(terms)

    def shift(self, weight: tuple) -> "ModuleDecomposition":
        """Multiply every part by t^weight (integer 4-vector)."""
        doubled = tuple(2 * x for x in weight) + (0,) * (5 - len(weight))
        return ModuleDecomposition(self.axes, {k: v.shift(doubled) for k, v in self.parts.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleDecomposition) and self.axes == other.axes and self.parts == other.parts

    def __repr__(self) -> str:
        parts = ", ".join(f"{sorted(k)}: {v}" for k, v in sorted(self.parts.items(), key=lambda kv: sorted(kv[0])))
        return f"ModuleDecomposition(axes={self.axes}, {{{parts}}})"


def _unit_doubled(axis: int) -> tuple:
    return tuple(2 * int(a == axis) for a in range(5))


#####################################################################
# Operations

def decompose_module(weight: Callable[[tuple], int], lo: int, hi: int, axes: tuple = AXES,
                     max_dimension: int = 2) -> ModuleDecomposition:
    """Exact decomposition of the character of a weight function.

    Every coordinate >= hi + 1 must behave like infinity (the weight
    function is constant beyond hi along each axis) and no weight may sit
    below lo. Coordinates outside `axes` are held at zero.

    W_T(x) = sum_{S >= T} (-1)^|S - T| f_S(x) [x_{S - T} >= 0]
    where f_S evaluates with the coordinates in S set to hi + 1.

    Raises:
        InputError: a part with more than `max_dimension` infinite directions survives.
    """
    axes = tuple(axes)
    big = hi + 1
    span = range(lo, hi + 1)
    cache = {}

    def value(point: tuple) -> int:
        if point not in cache:
            cache[point] = weight(point)
        return cache[point]

    parts = {}
    for size in range(len(axes) + 1):
        for infinite in combinations(axes, size):
            free = tuple(a for a in axes if a not in infinite)
            terms = {}
            for values in product(span, repeat=len(free)):
                point = [0] * 4
                for a in infinite:
                    point[a] = big
                for a, x in zip(free, values):
                    point[a] = x
                total = 0
                nonnegative = tuple(a for a, x in zip(free, values) if x >= 0)
                for k in range(len(nonnegative) + 1):
                    for extra in combinations(nonnegative, k):
                        shifted = list(point)
                        for a in extra:
                            shifted[a] = big
                        total += (-1) ** k * value(tuple(shifted))
                if total:
                    exponent = [0] * 4
                    for a, x in zip(free, values):
                        exponent[a] = x
                    terms[tuple(exponent)] = total
            if terms:
                if size > max_dimension:
                    raise InputError(f"Module has a {size}-dimensional component along axes {infinite}")
                parts[frozenset(infinite)] = LaurentPoly.from_weights(terms)
    return ModuleDecomposition(axes, parts)


def renormalized_volume(decomposition: ModuleDecomposition) -> int:
    return decomposition.renormalized_volume
