"""CY4Vertex local terms operations

Vertex, edge and face terms in their four flavors, the tautological
character of an insertion, and the independent checks.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import Iterable

from cy4vertex.exact_algebra import LaurentPoly
from cy4vertex.local_terms.chart import ChartCharacter
from cy4vertex.local_terms.edge import EdgeCharacter, edge_tau
from cy4vertex.local_terms.face import FaceCharacter, face_tau
from cy4vertex.local_terms.vertex import vertex_tau
from cy4vertex.partitions import BoxConfig, SolidPartition


#####################################################################
# Operations

def chart_character(pi: SolidPartition, config: BoxConfig = None, insertion: Iterable[int] = (),
                    images: tuple = None, label: str = "") -> ChartCharacter:
    kwargs = {"insertion": insertion, "label": label}
    if images is not None:
        kwargs["images"] = images
    return ChartCharacter.from_solid(pi, config, **kwargs)


def tautological_character(charts: Iterable[ChartCharacter] = (), edges: Iterable[EdgeCharacter] = (),
                           faces: Iterable[FaceCharacter] = ()) -> LaurentPoly:
    """Global character of the tautological insertion L^[n] by localization."""
    total = LaurentPoly()
    for chart in charts:
        total = total + vertex_tau(chart)
    for edge in edges:
        total = total + edge_tau(edge)
    for face in faces:
        total = total + face_tau(face)
    return total
