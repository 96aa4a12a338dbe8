"""CY4Vertex partitions operations

Public operations on finite, plane and solid partitions and on PT box
configurations.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import Mapping

from cy4vertex.partitions.boxes import BoxConfig, pt0_enumerate, pt1_enumerate
from cy4vertex.partitions.decompose import ModuleDecomposition, decompose_module
from cy4vertex.partitions.finite import FinitePartition
from cy4vertex.partitions.plane import minimal_plane_partitions
from cy4vertex.partitions.solid import SolidPartition
from cy4vertex.partitions.text import parse_partition_spec


#####################################################################
# Chart modules

def chart_module(pi: SolidPartition, config: BoxConfig = None) -> ModuleDecomposition:
    """Decomposition of O_Z plus the weights of a PT box configuration."""
    if config is None or config.is_empty():
        return pi.decomposition
    lo, hi = config.window()
    hi = max(hi + 1, pi.extent)

    def weight(x: tuple) -> int:
        return pi.weight(x) + config.weight(x)

    return decompose_module(weight, min(lo, 0), hi)


def pt0_module(mu: tuple, config: BoxConfig) -> ModuleDecomposition:
    return chart_module(SolidPartition(mu), config)


def pt1_module(lambdas: Mapping[tuple, FinitePartition], config: BoxConfig) -> ModuleDecomposition:
    return chart_module(SolidPartition(minimal_plane_partitions(lambdas)), config)


#####################################################################
# Convenience

def mu_from_text(text: str) -> tuple:
    return parse_partition_spec(text).mu


def solid_from_text(text: str) -> SolidPartition:
    spec = parse_partition_spec(text)
    return SolidPartition(spec.mu, spec.added)


def configurations(kind: str, mu: tuple, max_size: int) -> dict:
    """Fixed point data of a vertex grouped by size: solid partitions or PT0 configs."""
    from cy4vertex.partitions.solid import enumerate_solid_partitions
    if kind.upper() == "DT":
        return enumerate_solid_partitions(mu, max_size)
    return pt0_enumerate(mu, max_size)


def pt1_configurations(lambdas: Mapping[tuple, FinitePartition], max_colength: int, curves=None) -> list:
    return pt1_enumerate(lambdas, max_colength, curves)
