"""CY4Vertex solid partitions

A solid partition with asymptotics mu is the minimal configuration
pi^mu (the union of the cylinders over the four plane partitions) plus
finitely many added boxes. The infinite part is never materialized:
membership is answered by `contains`.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from itertools import product
from typing import Iterable

from cy4vertex import settings
from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import MonomialFraction
from cy4vertex.partitions.decompose import ModuleDecomposition, decompose_module
from cy4vertex.partitions.finite import AXES
from cy4vertex.partitions.plane import check_compatible, empty_asymptotics


#####################################################################
# SolidPartition

class SolidPartition:
    """pi^mu plus a finite set of added boxes."""

    __slots__ = ("mu", "added", "_lambdas", "_decomposition")

    def __init__(self, mu: tuple = None, added: Iterable[tuple] = ()):
        self.mu = tuple(mu) if mu is not None else empty_asymptotics()
        self._lambdas = check_compatible(self.mu)
        self._decomposition = None
        boxes = set()
        for box in added:
            box = tuple(int(x) for x in box)
            if len(box) != 4 or any(x < 0 for x in box):
                raise InputError(f"Box {box} must be a 4-tuple of nonnegative integers")
            if not self.in_minimal(box):
                boxes.add(box)
        self.added = frozenset(boxes)
        for box in self.added:
            for a in AXES:
                if box[a] and not self.contains(_step(box, a, -1)):
                    raise InputError(f"Solid partition is not closed below box {box}")

    @property
    def lambdas(self) -> dict:
        return dict(self._lambdas)

    def in_minimal(self, x: tuple) -> bool:
        if any(c < 0 for c in x):
            return False
        return any(plane.contains(x) for plane in self.mu)

    def contains(self, x: tuple) -> bool:
        return x in self.added or self.in_minimal(x)

    def weight(self, x: tuple) -> int:
        return int(self.contains(x))

    def minimal(self) -> "SolidPartition":
        return SolidPartition(self.mu)

    @property
    def size(self) -> int:
        """Number of added boxes."""
        return len(self.added)

    @property
    def extent(self) -> int:
        """1 + largest finite coordinate of the asymptotics and added boxes."""
        extent = max(plane.extent for plane in self.mu)
        return max([extent] + [max(b) + 1 for b in self.added])

    def addable(self) -> list:
        """Boxes outside pi whose four predecessors are in pi, sorted."""
        window = range(self.extent + 1)
        result = []
        for x in product(window, repeat=4):
            if not self.contains(x) and _supported(self, x):
                result.append(x)
        return result

    def with_box(self, box: tuple) -> "SolidPartition":
        child = SolidPartition.__new__(SolidPartition)
        child.mu = self.mu
        child._lambdas = self._lambdas
        child._decomposition = None
        child.added = self.added | {box}
        return child

    @property
    def decomposition(self) -> ModuleDecomposition:
        if self._decomposition is None:
            self._decomposition = decompose_module(self.weight, 0, self.extent)
        return self._decomposition

    @property
    def character(self) -> MonomialFraction:
        return self.decomposition.reassemble()

    @property
    def renorm_volume(self) -> int:
        return self.decomposition.renormalized_volume

    def boxes(self) -> list:
        return sorted(self.added)

    def key(self) -> tuple:
        return tuple(sorted(self.added))

    def __eq__(self, other) -> bool:
        return isinstance(other, SolidPartition) and self.mu == other.mu and self.added == other.added

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"SolidPartition(added={self.boxes()})"


def _step(x: tuple, axis: int, delta: int) -> tuple:
    return tuple(c + delta if a == axis else c for a, c in enumerate(x))


def _supported(pi: SolidPartition, x: tuple) -> bool:
    return all(not x[a] or pi.contains(_step(x, a, -1)) for a in AXES)


#####################################################################
# Operations

def enumerate_solid_partitions(mu: tuple = None, max_added: int = 0) -> dict:
    """Solid partitions with asymptotics mu grouped by number of added boxes.

    Breadth first over addable boxes; the frontier of a child is the
    parent frontier minus the new box plus its newly supported successors.
    """
    if max_added < 0:
        raise InputError(f"Number of added boxes must be nonnegative, got {max_added}")
    root = SolidPartition(mu)
    levels = {0: [root]}
    frontier = {root.key(): (root, frozenset(root.addable()))}
    for size in range(1, max_added + 1):
        children = {}
        for pi, addable in frontier.values():
            for box in addable:
                child = pi.with_box(box)
                key = child.key()
                if key in children:
                    continue
                grown = set(addable - {box})
                for a in AXES:
                    successor = _step(box, a, 1)
                    if not child.contains(successor) and _supported(child, successor):
                        grown.add(successor)
                children[key] = (child, frozenset(grown))
        frontier = dict(sorted(children.items()))
        levels[size] = [pi for pi, _ in frontier.values()]
        settings.log(f"solid partitions: {len(levels[size])} with {size} added boxes")
    return levels
