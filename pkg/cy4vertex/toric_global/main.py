"""CY4Vertex toric global operations

Geometry construction, global fixed point enumeration, global series,
the dimensional reduction report and palindromy of emitted coefficients.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from fractions import Fraction
from typing import Iterable

from cy4vertex import settings
from cy4vertex.errors import InputError, NotLaurentPolynomial, VerificationFailed
from cy4vertex.exact_algebra import expand_to_laurent
from cy4vertex.local_terms import dimensional_reduction_check as chart_reduction_check
from cy4vertex.toric_global.fixed_points import GlobalFixedPoint
from cy4vertex.toric_global.geometry import ToricGeometry
from cy4vertex.toric_global.series import GlobalResult
from cy4vertex.vertex_series import palindromy_check
from cy4vertex.vertex_series.limits import Y_BRACKET


#####################################################################
# Dimensional reduction

def dimensional_reduction_check(g: ToricGeometry, points: Iterable[GlobalFixedPoint]) -> dict:
    """Per chart comparison of the halved twisted vertex at y = t4 with the 3-fold vertex.

    Charts inside {x4 = 0} must match the 3-fold vertex, charts off it
    must vanish. Charts carrying data the 3-fold vertex cannot see are
    reported as skipped.

    Raises:
        InputError: the geometry has no fibre.
    """
    if g.fibre is None:
        raise InputError(f"Dimensional reduction needs a fibre coordinate, '{g.name}' has none")
    report = {"geometry": g.name, "fixed_points": 0, "checked": 0, "skipped": 0, "failed": []}
    for point in points:
        report["fixed_points"] += 1
        for alpha, chart in enumerate(point.charts):
            try:
                chart_reduction_check(chart)
                report["checked"] += 1
            except InputError:  # InputError(ScopeViolation)
                report["skipped"] += 1
            except VerificationFailed as err:  # VerificationFailed(MathematicalFailure)
                report["failed"].append({"fixed_point": point.ident, "chart": alpha, "reason": err.message})
    report["verified"] = not report["failed"]
    settings.log(f"dimensional reduction on {g.name}: {report['checked']} charts checked, "
                 f"{len(report['failed'])} failed")
    return report


#####################################################################
# Palindromy

def bracket_power(coefficient) -> int:
    """Largest k with coefficient / [y]^k a Laurent polynomial; -1 for zero."""
    if coefficient.is_zero():
        return -1
    k = 0
    while True:
        try:
            expand_to_laurent(coefficient / Y_BRACKET ** (k + 1))
        except NotLaurentPolynomial:  # NotLaurentPolynomial(InternalAssertion)
            return k
        k += 1


def palindromy_report(result: GlobalResult) -> list:
    """[y] divisibility and palindromy of every coefficient of a specialized series.

    Raises:
        InputError: the series was not specialized to t = 1.
    """
    if not result.specialized:
        raise InputError("Palindromy is checked on specialized series only")
    rows = []
    for (n, doubled_m), value in result.series.items():
        k = bracket_power(value)
        rows.append({
            "q": n,
            "Q": str(Fraction(doubled_m, 2)),
            "bracket_power": k,
            "palindromic": palindromy_check(value, k),
        })
    return rows
