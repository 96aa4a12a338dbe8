"""CY4Vertex finite partitions

Finite (2D) partitions are the cross sections lambda_ab of the surfaces
of a torus fixed subscheme. Axes are 0-based internally; text labels
use the 1-based "12" style.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from itertools import combinations
from typing import Iterable, Iterator

from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import LaurentPoly


#####################################################################
# Axes

AXES = (0, 1, 2, 3)
PAIRS = tuple(combinations(AXES, 2))


def complement(*axes: int) -> tuple:
    """Sorted axes not listed."""
    return tuple(a for a in AXES if a not in axes)


def pair_label(pair: tuple) -> str:
    return "".join(str(a + 1) for a in pair)


def parse_pair(label: str) -> tuple:
    if len(label) != 2 or not label.isdigit():
        raise InputError(f"Pair label '{label}' must be two axis digits like 12")
    pair = tuple(sorted(int(c) - 1 for c in label))
    if pair not in PAIRS:
        raise InputError(f"Pair label '{label}' must name two distinct axes in 1..4")
    return pair


#####################################################################
# FinitePartition

class FinitePartition:
    """Staircase of column heights; box (i, j) is present iff j < staircase[i]."""

    __slots__ = ("staircase", "size")

    def __init__(self, staircase: Iterable[int] = ()):
        parts = [int(x) for x in staircase]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"Partition {parts} must be weakly decreasing and nonnegative")
        self.staircase = tuple(parts)
        self.size = sum(parts)

    @classmethod
    def from_boxes(cls, boxes: Iterable[tuple]) -> "FinitePartition":
        boxes = {tuple(b) for b in boxes}
        for i, j in boxes:
            if i < 0 or j < 0:
                raise InputError(f"Box {(i, j)} has a negative coordinate")
            if (i > 0 and (i - 1, j) not in boxes) or (j > 0 and (i, j - 1) not in boxes):
                raise InputError(f"Box set is not a partition, box {(i, j)} is unsupported")
        columns = max((i for i, _ in boxes), default=-1) + 1
        return cls(sum(1 for b in boxes if b[0] == i) for i in range(columns))

    def boxes(self) -> Iterator[tuple]:
        for i, height in enumerate(self.staircase):
            for j in range(height):
                yield (i, j)

    def __contains__(self, box) -> bool:
        i, j = box
        return 0 <= i < len(self.staircase) and 0 <= j < self.staircase[i]

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return self.size > 0

    def __eq__(self, other) -> bool:
        return isinstance(other, FinitePartition) and self.staircase == other.staircase

    def __hash__(self) -> int:
        return hash(self.staircase)

    def __lt__(self, other: "FinitePartition") -> bool:
        return (self.size, self.staircase) < (other.size, other.staircase)

    def transpose(self) -> "FinitePartition":
        return FinitePartition.from_boxes((j, i) for i, j in self.boxes())

    @property
    def extent(self) -> int:
        """1 + largest coordinate of a box."""
        if not self.staircase:
            return 0
        return max(len(self.staircase), self.staircase[0])

    def addable(self) -> list:
        """Boxes whose addition keeps a partition."""
        result = []
        for i in range(len(self.staircase) + 1):
            j = self.staircase[i] if i < len(self.staircase) else 0
            if i == 0 or j < self.staircase[i - 1]:
                result.append((i, j))
        return result

    def character(self, axes: tuple) -> LaurentPoly:
        """sum t_a^i t_b^j over boxes, (a, b) = axes."""
        weights = {}
        for i, j in self.boxes():
            weight = [0] * 4
            weight[axes[0]] += i
            weight[axes[1]] += j
            weights[tuple(weight)] = 1
        return LaurentPoly.from_weights(weights)

    def __repr__(self) -> str:
        return f"FinitePartition({list(self.staircase)})"


EMPTY = FinitePartition()


def finite_partitions(n: int) -> list:
    """All partitions of n, as FinitePartitions."""
    if n == 0:
        return [EMPTY]
    result = []

    def extend(prefix: list, remaining: int, cap: int):
        if not remaining:
            result.append(FinitePartition(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(prefix + [part], remaining - part, part)

    extend([], n, n)
    return result


def partitions_up_to(n: int) -> list:
    """All partitions of size <= n, smallest first."""
    return [p for k in range(n + 1) for p in finite_partitions(k)]
