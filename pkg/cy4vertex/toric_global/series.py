"""CY4Vertex global series

G(q, Q, y) = sum over global fixed points of +- sqrt class, q^n Q^m.
With a fibre x4 and every chart off the fibre the root is the bracket of
minus the halved twisted total, otherwise the bracket of the half of
minus the full twisted total. Coefficients are specialized to t = 1
along a cocharacter after the signed sum.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple
import random

from cy4vertex import settings
from cy4vertex.errors import DegenerateSquareRoot, InputError, NonGenericCocharacter, SpecializationPole
from cy4vertex.exact_algebra import (
    LaurentPoly, MonomialFraction, SqrtOutcome, bracket_eval, cy_normalize, mf_sum, specialize_with_retry, sqrt_split,
    to_weight_class)
from cy4vertex.local_terms import FIBRE, edge_polynomial, face_polynomial, vertex_polynomial
from cy4vertex.toric_global.fixed_points import GlobalClasses, GlobalFixedPoint, count_by_class, enumerate_global
from cy4vertex.toric_global.geometry import ToricGeometry
from cy4vertex.toric_global.poles import cancelling_signs
from cy4vertex.vertex_series import QSeries, SignAssignment, cache_key, memoized
from cy4vertex.vertex_series.series import format_q_exponents


#####################################################################
# Constants

GLOBAL_SIGN_MODES = ("support", "search", "explicit")


#####################################################################
# GlobalResult

class GlobalResult(NamedTuple):
    geometry: str
    kind: str
    series: QSeries
    signs: SignAssignment
    points: list
    specialized: bool

    def counts(self) -> dict:
        return count_by_class(self.points)

    def index(self) -> list:
        """One record per (n, m) class: fixed point count and signs."""
        grouped = {}
        for point in self.points:
            grouped.setdefault(point.key, []).append(point)
        records = []
        for (n, doubled_m), points in sorted(grouped.items()):
            records.append({
                "q": n,
                "Q": str(Fraction(doubled_m, 2)),
                "term": format_q_exponents((n, doubled_m)),
                "fixed_points": len(points),
                "coefficient": str(self.series.coefficient(n, doubled_m)),
                "signs": [
                    {"fixed_point": p.ident, "sign": self.signs.sign(p.ident),
                     "provenance": self.signs.provenance[p.ident]}
                    for p in points
                ],
            })
        return records

    def format_table(self) -> str:
        """Series table with a fixed point count column."""
        counts = self.counts()
        keys = sorted(counts)
        if not keys:
            return self.series.format_table()
        width = max(len(format_q_exponents(k)) for k in keys)
        lines = []
        for key in keys:
            value = self.series.coefficient(*key)
            lines.append(f"{format_q_exponents(key).ljust(width)}  [{counts[key]}]  {value}")
        return "\n".join(lines) + "\n"


#####################################################################
# Contributions

def _uses_halved(g: ToricGeometry, point: GlobalFixedPoint) -> bool:
    return g.fibre == FIBRE and point.off_fibre()


def _total(point: GlobalFixedPoint, flavor: str) -> LaurentPoly:
    total = LaurentPoly()
    for chart in point.charts:
        total = total + vertex_polynomial(chart, flavor)
    for edge in point.edges:
        total = total + edge_polynomial(edge, flavor)
    for face in point.faces:
        total = total + face_polynomial(face, flavor)
    return total


def global_contribution(g: ToricGeometry, point: GlobalFixedPoint) -> MonomialFraction:
    """Unsigned square root class of one global fixed point.

    Raises:
        DegenerateSquareRoot: minus the full twisted total is not D + conj(D).
    """
    def compute() -> MonomialFraction:
        if _uses_halved(g, point):
            return bracket_eval(cy_normalize(to_weight_class(-_total(point, "halved_tilde"))))
        half = sqrt_split(cy_normalize(to_weight_class(-_total(point, "tilde"))))
        if half is SqrtOutcome.ZERO:
            return MonomialFraction()
        if half is SqrtOutcome.DEGENERATE:
            raise DegenerateSquareRoot("degenerate square root", fixed_point=point.ident)
        return bracket_eval(half)

    return memoized(cache_key("global", g.name, g.charts, g.degree_bundle, point.ident), compute)


def _contribution_job(job: tuple) -> MonomialFraction:
    g, point = job
    return global_contribution(g, point)


def evaluate_contributions(g: ToricGeometry, points: list, parallelism: int = 1) -> list:
    """Contributions in input order, optionally in worker processes."""
    jobs = [(g, point) for point in points]
    if parallelism <= 1 or len(jobs) < 2:
        return [_contribution_job(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=parallelism) as executor:
        return list(executor.map(_contribution_job, jobs, chunksize=max(1, len(jobs) // (4 * parallelism))))


#####################################################################
# Signs

def support_signs(g: ToricGeometry, points: Iterable[GlobalFixedPoint]) -> SignAssignment:
    """+1 for points scheme theoretically inside x4 = 0, -1 otherwise.

    Raises:
        InputError: the geometry has no fibre.
    """
    if g.fibre is None:
        raise InputError(f"The support sign rule needs a fibre coordinate, '{g.name}' has none")
    signs = SignAssignment()
    for point in points:
        signs.assign(point.ident, 1 if point.inside_divisor() else -1, "support")
    return signs


def explicit_signs(points: Iterable[GlobalFixedPoint], signs) -> SignAssignment:
    """
    Raises:
        InputError: the assignment misses a fixed point.
    """
    if isinstance(signs, SignAssignment):
        result = signs
    elif isinstance(signs, Mapping):
        result = SignAssignment({str(k): int(v) for k, v in signs.items()})
    else:
        result = SignAssignment.from_records(signs)
    missing = [p.ident for p in points if p.ident not in result]
    if missing:
        raise InputError(f"Sign assignment misses {len(missing)} fixed points", first=missing[0])
    return result


def _cocharacters(cocharacter) -> tuple:
    if cocharacter is not None:
        return (tuple(cocharacter),)
    return (tuple(settings.CY4VERTEX_COCHARACTER),) + settings.COCHARACTER_FALLBACKS


def search_signs(g: ToricGeometry, points: list, values: list, cocharacter=None, budget: int = None,
                 seed: int = None) -> SignAssignment:
    """Signs cancelling the poles at t = 1 coefficient by coefficient.

    The support rule (or +1 without a fibre) is preferred where it cancels.

    Raises:
        SpecializationPole: no assignment cancels the poles of some coefficient.
        SearchBudgetExhausted: too many free signs in a coefficient.
    """
    rng = random.Random(settings.CY4VERTEX_SEED if seed is None else seed)
    preferred = support_signs(g, points) if g.fibre is not None else None
    grouped = {}
    for point, value in zip(points, values):
        grouped.setdefault(point.key, []).append((point, value))
    signs = SignAssignment()
    for (n, doubled_m), members in sorted(grouped.items()):
        idents = [p.ident for p, _ in members]
        wanted = [preferred.sign(i) if preferred else 1 for i in idents]
        contributions = [v for _, v in members]
        for a in _cocharacters(cocharacter):
            try:
                solutions = cancelling_signs(contributions, wanted, a, budget, rng)
                break
            except NonGenericCocharacter as err:  # NonGenericCocharacter(MathematicalFailure)
                settings.warn(f"{err.message}; retrying with another cocharacter")
        else:
            raise SpecializationPole(f"no generic cocharacter for q^{n} Q^{Fraction(doubled_m, 2)}")
        if not solutions:
            raise SpecializationPole(
                f"specialization pole at q^{n} Q^{Fraction(doubled_m, 2)}: no sign assignment cancels it",
                q=n, Q=Fraction(doubled_m, 2), fixed_points=len(members))
        if len(solutions) > 1:
            settings.warn(f"Pole cancellation at q^{n} Q^{Fraction(doubled_m, 2)} leaves {len(solutions)} "
                          f"sign assignments; taking the first")
        for ident, sign in zip(idents, solutions[0]):
            provenance = "support" if preferred and preferred.sign(ident) == sign else "searched"
            signs.assign(ident, sign, provenance)
    return signs


def resolve_global_signs(g: ToricGeometry, points: list, values: list, signs, **kwargs) -> SignAssignment:
    if signs is None or signs == "support":
        return support_signs(g, points)
    if signs == "search":
        return search_signs(g, points, values, **kwargs)
    if isinstance(signs, str):
        raise InputError(f"Unknown global sign mode '{signs}', expected one of {GLOBAL_SIGN_MODES}")
    return explicit_signs(points, signs)


#####################################################################
# Operations

def assemble_global(points: list, values: list, signs: SignAssignment, specialize: bool = True,
                    cocharacter=None, precision: int = None) -> QSeries:
    """Signed sums per (n, m), specialized to t = 1 when asked.

    Raises:
        SpecializationPole: a coefficient keeps a pole at t = 1.
    """
    grouped = {}
    for point, value in zip(points, values):
        grouped.setdefault(point.key, []).append(value * signs.sign(point.ident))
    coefficients = {}
    for (n, doubled_m), terms in sorted(grouped.items()):
        total = mf_sum(terms)
        if specialize:
            try:
                total = specialize_with_retry(total, _cocharacters(cocharacter))
            except SpecializationPole as err:  # SpecializationPole(MathematicalFailure)
                raise SpecializationPole(
                    f"specialization pole at q^{n} Q^{Fraction(doubled_m, 2)}; check the signs",
                    q=n, Q=Fraction(doubled_m, 2), fixed_points=len(terms)) from err
        coefficients[(n, doubled_m)] = total
    return QSeries(coefficients, precision)


def global_series(g: ToricGeometry, kind: str, classes: GlobalClasses, signs="support", bundle: str = None,
                  cocharacter=None, specialize: bool = True, parallelism: int = 1, search_budget: int = None,
                  seed: int = None) -> GlobalResult:
    """Global series of `kind` over the class windows.

    Args:
        signs: "support", "search", or an explicit mapping / SignAssignment / records
        bundle (str): line bundle measuring curve classes, default the geometry's degree bundle
        specialize (bool): collapse t to 1 along the cocharacter

    Raises:
        UnsupportedGeometry: the geometry is outside the enumeration scope.
        SpecializationPole: a coefficient keeps a pole; names the coefficient.
    """
    if bundle is not None:
        g = g.with_degree_bundle(bundle)
    points = enumerate_global(g, kind, classes)
    values = evaluate_contributions(g, points, parallelism)
    if signs == "search":
        chosen = search_signs(g, points, values, cocharacter, search_budget, seed)
    else:
        chosen = resolve_global_signs(g, points, values, signs)
    series = assemble_global(points, values, chosen, specialize, cocharacter, classes.n_range[1] + 1)
    settings.log(f"global series {kind} on {g.name}: {len(series.coefficients)} nonzero coefficients")
    return GlobalResult(g.name, kind.upper(), series, chosen, points, specialize)
