"""CY4Vertex topological vertex series

DT vertex: sum over solid partitions pi with asymptotics mu of
+- sqrt((-1)^(rk/2) [-Vtilde_pi]) q^|pi|. PT0 vertex: sum over box
configurations B of the same with q^(|B| + |pi^mu|).

The square root of a fixed point is [-vtilde] when the chart is
supported on x4 = 0, else [D] for the half D of -Vtilde picked by
`sqrt_split`. Signs are applied on top of these unsigned roots.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, NamedTuple, Union

from cy4vertex import settings
from cy4vertex.errors import DegenerateSquareRoot, InputError
from cy4vertex.exact_algebra import MonomialFraction, SqrtOutcome, bracket_eval, cy_normalize, sqrt_split, to_weight_class
from cy4vertex.local_terms import ChartCharacter, vertex_polynomial
from cy4vertex.partitions import BoxConfig, SolidPartition, enumerate_solid_partitions, pt0_enumerate
from cy4vertex.vertex_series.cache import cache_key, memoized
from cy4vertex.vertex_series.series import QSeries
from cy4vertex.vertex_series.signs import SignAssignment, sign_from_formula


#####################################################################
# Constants

SIGN_MODES = ("formula_0dim", "formula_2dim", "positive")

_FORMULAS = {"formula_0dim": "zero_dim", "formula_2dim": "two_dim"}


#####################################################################
# FixedPoint

class FixedPoint(NamedTuple):
    """One torus fixed point of a vertex with its unsigned square root."""

    ident: str
    kind: str
    order: int
    q_power: int
    value: MonomialFraction
    data: Union[SolidPartition, BoxConfig]


def fixed_point_ident(kind: str, boxes: Iterable[tuple]) -> str:
    return f"{kind.lower()}[" + ";".join(",".join(str(x) for x in box) for box in sorted(boxes)) + "]"


#####################################################################
# Square roots

def root_contribution(chart: ChartCharacter, ident: str = "") -> MonomialFraction:
    """Unsigned square root of [-Vtilde] at one fixed point.

    Raises:
        DegenerateSquareRoot: -Vtilde is not of the form D + conj(D).
    """
    def compute() -> MonomialFraction:
        if chart.off_fibre():
            return bracket_eval(cy_normalize(to_weight_class(-vertex_polynomial(chart, "halved_tilde"))))
        half = sqrt_split(cy_normalize(to_weight_class(-vertex_polynomial(chart, "tilde"))))
        if half is SqrtOutcome.ZERO:
            return MonomialFraction()
        if half is SqrtOutcome.DEGENERATE:
            raise DegenerateSquareRoot("degenerate square root", fixed_point=ident)
        return bracket_eval(half)

    key = cache_key("root", chart.decomposition, chart.insertion, chart.images)
    return memoized(key, compute)


def _root_job(job: tuple) -> MonomialFraction:
    chart, ident = job
    return root_contribution(chart, ident)


def evaluate_roots(jobs: list, parallelism: int = 1) -> list:
    """Roots of (chart, ident) jobs in input order, optionally in worker processes."""
    if parallelism <= 1 or len(jobs) < 2:
        return [_root_job(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=parallelism) as executor:
        return list(executor.map(_root_job, jobs, chunksize=max(1, len(jobs) // (4 * parallelism))))


#####################################################################
# Fixed points

def dt_fixed_points(mu: tuple = None, order: int = 0, parallelism: int = 1) -> list:
    """DT fixed points with at most `order` added boxes, in canonical order."""
    if order < 0:
        raise InputError(f"Order must be nonnegative, got {order}")
    levels = enumerate_solid_partitions(mu, order)
    base = levels[0][0].renorm_volume
    entries = []
    for size in sorted(levels):
        for pi in levels[size]:
            entries.append((size, pi, fixed_point_ident("dt", pi.boxes())))
    values = evaluate_roots([(ChartCharacter.from_solid(pi), ident) for _, pi, ident in entries], parallelism)
    settings.log(f"DT vertex: {len(entries)} fixed points up to order {order}")
    return [FixedPoint(ident, "DT", size, base + size, value, pi) for (size, pi, ident), value in zip(entries, values)]


def pt0_fixed_points(mu: tuple = None, order: int = 0, parallelism: int = 1) -> list:
    """PT0 fixed points with |B| <= order, in canonical order.

    Raises:
        ModuliPresent: the asymptotics carry PT0 moduli.
    """
    if order < 0:
        raise InputError(f"Order must be nonnegative, got {order}")
    minimal = SolidPartition(mu)
    base = minimal.renorm_volume
    levels = pt0_enumerate(minimal.mu, order)
    entries = []
    for size in sorted(levels):
        for config in levels[size]:
            entries.append((size, config, fixed_point_ident("pt0", config.boxes)))
    values = evaluate_roots([(ChartCharacter.from_solid(minimal, config), ident) for _, config, ident in entries],
                            parallelism)
    settings.log(f"PT0 vertex: {len(entries)} fixed points up to order {order}")
    return [FixedPoint(ident, "PT0", size, base + size, value, config)
            for (size, config, ident), value in zip(entries, values)]


#####################################################################
# Signs and assembly

def formula_signs(points: Iterable[FixedPoint], mode: str) -> SignAssignment:
    """Signs of DT points from a formula, or +1 everywhere with `positive`.

    Raises:
        InputError: unknown mode, or a formula applied outside its range.
    """
    if mode not in SIGN_MODES:
        raise InputError(f"Unknown sign mode '{mode}', expected one of {SIGN_MODES}")
    signs = SignAssignment()
    for point in points:
        if mode == "positive":
            signs.assign(point.ident, 1, "positive")
            continue
        if point.kind != "DT":
            raise InputError(f"Sign formulas apply to DT fixed points, got {point.ident}")
        signs.assign(point.ident, sign_from_formula(point.data, _FORMULAS[mode]), mode)
    return signs


def resolve_signs(points: list, signs) -> SignAssignment:
    if isinstance(signs, SignAssignment):
        if not signs.covers(p.ident for p in points):
            missing = [p.ident for p in points if p.ident not in signs]
            raise InputError(f"Sign assignment misses {len(missing)} fixed points", first=missing[0])
        return signs
    return formula_signs(points, signs)


def assemble(points: Iterable[FixedPoint], signs: SignAssignment, precision: int) -> QSeries:
    """Signed sum of fixed point roots as a series in q."""
    return QSeries.from_terms(((p.q_power, p.value * signs.sign(p.ident)) for p in points), precision)


#####################################################################
# Operations

def dt_vertex_series(mu: tuple = None, order: int = 0, signs="formula_0dim", parallelism: int = 1) -> QSeries:
    """DT vertex through q^(|pi^mu| + order).

    Raises:
        InconsistentAsymptotics: mu is not compatible.
        DegenerateSquareRoot: a fixed point has no square root.
    """
    points = dt_fixed_points(mu, order, parallelism)
    signs = resolve_signs(points, signs)
    return assemble(points, signs, points[0].q_power + order + 1)


def pt0_vertex_series(mu: tuple = None, order: int = 0, signs="positive", parallelism: int = 1) -> QSeries:
    """PT0 vertex through q^(|pi^mu| + order).

    Raises:
        ModuliPresent: the asymptotics carry PT0 moduli.
    """
    points = pt0_fixed_points(mu, order, parallelism)
    signs = resolve_signs(points, signs)
    return assemble(points, signs, points[0].q_power + order + 1)
