"""CY4Vertex plane partitions

The asymptotic mu_a of a solid partition along axis a is a plane
partition in the three coordinates other than a: up to three infinite
legs (cross sections lambda_ab along axis b) plus finitely many boxes.
Points are stored as 4-tuples with the a-coordinate zero.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import Iterable, Mapping

from cy4vertex.errors import InconsistentAsymptotics, InputError
from cy4vertex.exact_algebra import MonomialFraction
from cy4vertex.partitions.decompose import ModuleDecomposition, decompose_module
from cy4vertex.partitions.finite import AXES, EMPTY, FinitePartition, complement


#####################################################################
# PlanePartition

class PlanePartition:
    """Plane partition transverse to `axis`; contains() ignores the axis coordinate."""

    __slots__ = ("axis", "legs", "boxes", "_decomposition")

    def __init__(self, axis: int, legs: Mapping[int, FinitePartition] = None, boxes: Iterable[tuple] = ()):
        if axis not in AXES:
            raise InputError(f"Axis {axis} must be one of {AXES}")
        self.axis = axis
        self.legs = {}
        for b, lam in (legs or {}).items():
            if b == axis or b not in AXES:
                raise InputError(f"Leg direction {b} is not transverse to axis {axis}")
            if lam:
                self.legs[b] = lam
        self._decomposition = None
        boxes = {self._project(p) for p in boxes}
        self.boxes = frozenset(p for p in boxes if not self._in_legs(p))
        for p in self.boxes:
            for b in complement(axis):
                if p[b] > 0:
                    q = list(p)
                    q[b] -= 1
                    if not self.contains(tuple(q)):
                        raise InputError(f"Plane partition along axis {axis + 1} is not closed below box {p}")

    def _project(self, point: tuple) -> tuple:
        point = tuple(int(x) for x in point)
        if len(point) == 3:
            point = point[:self.axis] + (0,) + point[self.axis:]
        if len(point) != 4 or any(x < 0 for x in point):
            raise InputError(f"Box {point} must have nonnegative coordinates")
        return point[:self.axis] + (0,) + point[self.axis + 1:]

    def _in_legs(self, point: tuple) -> bool:
        for b, lam in self.legs.items():
            c, d = complement(self.axis, b)
            if (point[c], point[d]) in lam:
                return True
        return False

    def leg(self, b: int) -> FinitePartition:
        return self.legs.get(b, EMPTY)

    def contains(self, point: tuple) -> bool:
        for a in AXES:
            if a != self.axis and point[a] < 0:
                return False
        if self._in_legs(point):
            return True
        return self._project_unchecked(point) in self.boxes

    def _project_unchecked(self, point: tuple) -> tuple:
        return tuple(0 if a == self.axis else point[a] for a in AXES)

    def is_empty(self) -> bool:
        return not self.legs and not self.boxes

    @property
    def extent(self) -> int:
        """1 + largest finite coordinate among legs and boxes."""
        extent = max((lam.extent for lam in self.legs.values()), default=0)
        return max([extent] + [max(p) + 1 for p in self.boxes])

    @property
    def decomposition(self) -> ModuleDecomposition:
        if self._decomposition is None:
            self._decomposition = decompose_module(
                lambda x: int(self.contains(x)), 0, self.extent, axes=complement(self.axis), max_dimension=1)
        return self._decomposition

    @property
    def character(self) -> MonomialFraction:
        return self.decomposition.reassemble()

    def key(self) -> tuple:
        return (self.axis, tuple(sorted((b, lam.staircase) for b, lam in self.legs.items())), tuple(sorted(self.boxes)))

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanePartition) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"PlanePartition(axis={self.axis}, legs={self.legs}, boxes={sorted(self.boxes)})"


#####################################################################
# Operations

def surface_partitions(mu: tuple) -> dict:
    """The lambda_ab read from the legs of mu; raises on disagreement."""
    lambdas = {}
    for plane in mu:
        for b, lam in plane.legs.items():
            pair = tuple(sorted((plane.axis, b)))
            if pair in lambdas and lambdas[pair] != lam:
                raise InconsistentAsymptotics(
                    f"inconsistent asymptotics: legs of mu_{plane.axis + 1} and mu_{b + 1} disagree",
                    pair=pair)
            lambdas[pair] = lam
    for plane in mu:
        for b in complement(plane.axis):
            pair = tuple(sorted((plane.axis, b)))
            if pair in lambdas and b not in plane.legs:
                raise InconsistentAsymptotics(
                    f"inconsistent asymptotics: mu_{plane.axis + 1} has no leg along axis {b + 1}", pair=pair)
    return lambdas


def minimal_plane_partitions(lambdas: Mapping[tuple, FinitePartition]) -> tuple:
    """mu^lambda: for each axis a the legs lambda_ab and no finite boxes."""
    mu = []
    for a in AXES:
        legs = {}
        for pair, lam in lambdas.items():
            if a in pair:
                legs[pair[1] if pair[0] == a else pair[0]] = lam
        mu.append(PlanePartition(a, legs))
    return tuple(mu)


def empty_asymptotics() -> tuple:
    return tuple(PlanePartition(a) for a in AXES)


def check_compatible(mu: tuple) -> dict:
    """Validate mu and return its lambda data."""
    if len(mu) != 4 or tuple(p.axis for p in mu) != AXES:
        raise InputError("Asymptotics must list one plane partition per axis, in axis order")
    return surface_partitions(mu)
