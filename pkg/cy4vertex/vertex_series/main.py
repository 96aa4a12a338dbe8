"""CY4Vertex vertex series operations

DT and PT0 vertex series with their provenance, the reference series of
the empty vertex, sign formulas and search, limits and palindromy.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import NamedTuple

from cy4vertex.errors import InputError
from cy4vertex.partitions import mu_from_text
from cy4vertex.vertex_series.series import QSeries
from cy4vertex.vertex_series.signs import SignAssignment
from cy4vertex.vertex_series.vertex import assemble, dt_fixed_points, pt0_fixed_points, resolve_signs


#####################################################################
# Constants

KINDS = ("dt", "pt0")


#####################################################################
# VertexResult

class VertexResult(NamedTuple):
    series: QSeries
    signs: SignAssignment
    points: list

    def provenance(self) -> list:
        """Per q-power: fixed point identifiers with their signs."""
        rows = {}
        for point in self.points:
            rows.setdefault(point.q_power, []).append({
                "fixed_point": point.ident,
                "sign": self.signs.sign(point.ident),
                "provenance": self.signs.provenance[point.ident],
                "vanishes": point.value.is_zero(),
            })
        return [{"q": q, "count": len(entries), "fixed_points": entries} for q, entries in sorted(rows.items())]


#####################################################################
# Operations

def vertex_series(kind: str, spec, order: int, signs=None, parallelism: int = 1) -> VertexResult:
    """DT or PT0 vertex of a partition spec with `order` added boxes beyond the leading term.

    Args:
        kind (str): "dt" or "pt0"
        spec: partition spec text or asymptotics tuple; None for the empty vertex
        signs: SignAssignment, or one of "formula_0dim", "formula_2dim", "positive"

    Raises:
        InputError: unknown kind or an unusable sign choice.
    """
    kind = kind.lower()
    if kind not in KINDS:
        raise InputError(f"Unknown vertex kind '{kind}', expected one of {KINDS}")
    mu = mu_from_text(spec) if isinstance(spec, str) else spec
    if kind == "dt":
        points = dt_fixed_points(mu, order, parallelism)
        signs = resolve_signs(points, signs or "formula_0dim")
    else:
        points = pt0_fixed_points(mu, order, parallelism)
        signs = resolve_signs(points, signs or "positive")
    return VertexResult(assemble(points, signs, points[0].q_power + order + 1), signs, points)
