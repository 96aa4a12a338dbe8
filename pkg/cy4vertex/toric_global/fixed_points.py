"""CY4Vertex global fixed points

A torus fixed point on a local surface is glued from

* the cross section lambda_f of the compact surface,
* per compact edge: a plane partition containing the surface leg (DT,
  PT0), or curve multiplicities c_s over the boxes s of lambda_f (PT1),
* per chart: a solid partition (DT), a PT0 box configuration, or a PT1
  configuration over the chart restriction.

Edge data is chosen once per edge and transported to both end charts,
so the gluing conditions hold by construction. The class of a point is
(d, m, n) with d = |lambda_f|, n = chi(F) and
m = chi(F(H)) - chi(F) - (H.H) d / 2 for the degree bundle H.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from fractions import Fraction
from itertools import product
from typing import Iterable, NamedTuple
import math

from cy4vertex import settings
from cy4vertex.errors import InputError, ModuliPresent, UnsupportedGeometry
from cy4vertex.local_terms import ChartCharacter, EdgeCharacter, tautological_character
from cy4vertex.local_terms.face import NORMAL_AXES, SURFACE_AXES
from cy4vertex.partitions import (
    EMPTY, BoxConfig, FinitePartition, PlanePartition, SolidPartition, SurfaceSlice, complement,
    enumerate_solid_partitions, finite_partitions, minimal_plane_partitions, pt0_enumerate, pt1_enumerate)
from cy4vertex.toric_global.geometry import ToricGeometry


#####################################################################
# Constants

GLOBAL_KINDS = ("DT", "PT0", "PT1")

SURFACE_PAIR = SURFACE_AXES


#####################################################################
# Class data

class GlobalClasses(NamedTuple):
    """Surface degree d with inclusive windows for m and n."""

    degree: int
    m_range: tuple
    n_range: tuple

    @classmethod
    def of(cls, degree: int, m_range: Iterable, n_range: Iterable) -> "GlobalClasses":
        """
        Raises:
            InputError: negative degree or malformed windows.
        """
        try:
            m_lo, m_hi = (Fraction(str(x)) for x in m_range)
            n_lo, n_hi = (int(x) for x in n_range)
        except (TypeError, ValueError) as err:
            raise InputError(f"Class windows must be (lo, hi) pairs: {err}") from err
        if int(degree) < 0:
            raise InputError(f"Surface degree must be nonnegative, got {degree}")
        return cls(int(degree), (m_lo, m_hi), (n_lo, n_hi))

    def is_empty(self) -> bool:
        return self.m_range[0] > self.m_range[1] or self.n_range[0] > self.n_range[1]

    def contains(self, m: Fraction, n: int) -> bool:
        return self.m_range[0] <= m <= self.m_range[1] and self.n_range[0] <= n <= self.n_range[1]


class GlobalFixedPoint(NamedTuple):
    """Glued chart, edge and face data of one fixed point with its class."""

    ident: str
    kind: str
    degree: int
    n: int
    m: Fraction
    charts: tuple
    edges: tuple
    faces: tuple

    @property
    def key(self) -> tuple:
        return (self.n, int(2 * self.m))

    def inside_divisor(self) -> bool:
        return all(chart.inside_divisor() for chart in self.charts)

    def off_fibre(self) -> bool:
        return all(chart.off_fibre() for chart in self.charts)

    def record(self) -> dict:
        return {"fixed_point": self.ident, "n": self.n, "m": str(self.m), "d": self.degree}


#####################################################################
# Internal helper

def _format_boxes(boxes: Iterable[tuple]) -> str:
    return ";".join(",".join(str(x) for x in box) for box in sorted(boxes))


def _step(point: tuple, axis: int, delta: int) -> tuple:
    return tuple(x + delta if a == axis else x for a, x in enumerate(point))


def _plane_addable(plane: PlanePartition) -> list:
    axes = complement(plane.axis)
    result = []
    for coords in product(range(plane.extent + 1), repeat=3):
        point = [0] * 4
        for a, x in zip(axes, coords):
            point[a] = x
        point = tuple(point)
        if plane.contains(point):
            continue
        if all(not point[a] or plane.contains(_step(point, a, -1)) for a in axes):
            result.append(point)
    return result


def leg_extensions(axis: int, legs: dict, max_boxes: int) -> dict:
    """Plane partitions along `axis` with the given legs plus up to max_boxes finite boxes, by size."""
    current = [PlanePartition(axis, legs)]
    levels = {0: current}
    for size in range(1, max_boxes + 1):
        children = {}
        for plane in current:
            for cell in _plane_addable(plane):
                child = PlanePartition(axis, plane.legs, plane.boxes | {cell})
                children.setdefault(child.key(), child)
        current = [children[key] for key in sorted(children)]
        levels[size] = current
    return levels


def _transport(plane: PlanePartition, mapping: dict) -> PlanePartition:
    legs = {mapping[b]: lam for b, lam in plane.legs.items()}
    boxes = []
    for box in plane.boxes:
        moved = [0] * 4
        for a, x in enumerate(box):
            moved[mapping[a]] = x
        boxes.append(tuple(moved))
    return PlanePartition(mapping[plane.axis], legs, boxes)


def _bounded_product(options: list, budget: int) -> list:
    """Tuples picking one (size, item) per slot with total size <= budget, in slot order."""
    combos = [((), 0)]
    for slot in options:
        grown = []
        for chosen, used in combos:
            for size, item in slot:
                if used + size <= budget:
                    grown.append((chosen + (item,), used + size))
        combos = grown
    return combos


def _flatten(levels: dict) -> list:
    return [(size, item) for size in sorted(levels) for item in levels[size]]


def check_enumerable(g: ToricGeometry) -> None:
    """
    Raises:
        UnsupportedGeometry: the geometry is not a single local surface or a
            union of isolated charts, or an edge mixes the normal axes.
    """
    if not g.faces:
        if g.edges:
            raise UnsupportedGeometry(
                f"Geometry '{g.name}' has compact curves but no compact surface", edges=len(g.edges))
        return
    if not g.is_local_surface():
        raise UnsupportedGeometry(
            f"Geometry '{g.name}' is not a local surface with one compact face", faces=len(g.faces))
    for edge in g.edges:
        if any(edge.matched(a) != a for a in NORMAL_AXES):
            raise UnsupportedGeometry(f"Edge {edge.alpha}-{edge.beta} exchanges the normal axes")
        if g.edge_degree(edge) <= 0:
            raise UnsupportedGeometry(
                f"Degree bundle of '{g.name}' is not positive on edge {edge.alpha}-{edge.beta}")


#####################################################################
# Gluing

class _Gluing:
    """Base chart, edge and face data for one surface partition and one choice of edge data."""

    def __init__(self, g: ToricGeometry, kind: str, lam: FinitePartition, edge_data: tuple):
        self.g = g
        self.kind = kind
        self.lam = lam
        self.edge_data = edge_data
        if kind == "PT1":
            self.mu = None
            self.base = [self._pt1_base(alpha) for alpha in range(len(g.charts))]
        else:
            self.mu = [self._chart_mu(alpha) for alpha in range(len(g.charts))]
            self.base = [SolidPartition(mu) for mu in self.mu]

    # Chart data

    def _plane_at(self, alpha: int, axis: int) -> PlanePartition:
        edge = self.g.edge_at(alpha, axis)
        if edge is None:
            return PlanePartition(axis)
        plane = self.edge_data[self.g.edges.index(edge)]
        if edge.alpha == alpha:
            return plane
        return _transport(plane, dict(edge.matching))

    def _chart_mu(self, alpha: int) -> tuple:
        return tuple(self._plane_at(alpha, a) for a in range(4))

    def chart_curves(self, alpha: int) -> dict:
        """Slice position -> (c_1, c_2): multiplicities of the edges along axes 2 and 1."""
        curves = {}
        along = {}
        for axis in SURFACE_PAIR:
            edge = self.g.edge_at(alpha, axis)
            if edge is not None:
                along[axis] = self.edge_data[self.g.edges.index(edge)]
        for index, s in enumerate(sorted(self.lam.boxes())):
            c = (along[1][index] if 1 in along else 0, along[0][index] if 0 in along else 0)
            if c != (0, 0):
                curves[s] = c
        return curves

    def _pt1_base(self, alpha: int):
        slices = [SurfaceSlice(SURFACE_PAIR, s, c, EMPTY) for s, c in sorted(self.chart_curves(alpha).items())]
        pi = SolidPartition(minimal_plane_partitions({SURFACE_PAIR: self.lam} if self.lam else {}))
        return pi, BoxConfig("PT1", (), slices)

    def chart(self, alpha: int, pi: SolidPartition, config: BoxConfig = None, insertion: str = None) -> ChartCharacter:
        frames = self.g.bundle(insertion)
        return ChartCharacter.from_solid(pi, config, insertion=frames[alpha], images=self.g.images(alpha),
                                         label=f"{self.g.name}#{alpha}")

    def base_charts(self, insertion: str = None) -> list:
        if self.kind == "PT1":
            return [self.chart(alpha, pi, config, insertion) for alpha, (pi, config) in enumerate(self.base)]
        return [self.chart(alpha, pi, None, insertion) for alpha, pi in enumerate(self.base)]

    def edges(self, charts: list, insertion: str = None) -> tuple:
        frames = self.g.bundle(insertion)
        return tuple(
            EdgeCharacter(charts[e.alpha], e.axis, e.normal_map(), insertion_beta=frames[e.beta])
            for e in self.g.edges
        )

    def faces(self, insertion: str = None) -> tuple:
        if not self.lam or not self.g.faces:
            return ()
        return (self.g.face_character(self.lam, insertion),)

    # Classes

    def chi(self, insertion: str = None) -> int:
        charts = self.base_charts(insertion)
        return int(tautological_character(charts, self.edges(charts, insertion), self.faces(insertion)).rank())

    def classes(self) -> tuple:
        """(n, m) of the base point."""
        n = self.chi()
        if self.g.degree_bundle is None:
            return n, Fraction(0)
        m = self.chi(self.g.degree_bundle) - n - Fraction(self.g.surface_square() * self.lam.size, 2)
        return n, m

    def ident(self, vertex: Iterable[str]) -> str:
        parts = [f"S{'.'.join(str(x) for x in self.lam.staircase)}"]
        for index, data in enumerate(self.edge_data):
            if isinstance(data, PlanePartition):
                if data.boxes:
                    parts.append(f"E{index}:{_format_boxes(data.boxes)}")
            elif any(data):
                parts.append(f"E{index}:{','.join(str(c) for c in data)}")
        for alpha, text in enumerate(vertex):
            if text:
                parts.append(f"V{alpha}:{text}")
        return f"{self.kind.lower()}[" + "|".join(parts) + "]"


#####################################################################
# Edge data

def _edge_options(g: ToricGeometry, kind: str, lam: FinitePartition, budget: int) -> list:
    """Per edge: list of (degree weighted size, data)."""
    options = []
    for edge in g.edges:
        degree = g.edge_degree(edge)
        limit = budget // degree
        if kind == "PT1":
            positions = lam.size
            slot = []
            for values in product(range(limit + 1), repeat=positions):
                if sum(values) <= limit:
                    slot.append((degree * sum(values), values))
            slot.sort(key=lambda item: (item[0], item[1]))
        else:
            other = next(a for a in SURFACE_PAIR if a != edge.axis)
            legs = {other: lam} if lam else {}
            slot = [(degree * size, plane) for size, plane in _flatten(leg_extensions(edge.axis, legs, limit))]
        options.append(slot)
    return options


#####################################################################
# Vertex data

def _vertex_points(gluing: _Gluing, classes: GlobalClasses, n_base: int, m: Fraction) -> list:
    kind, g = gluing.kind, gluing.g
    n_lo, n_hi = classes.n_range
    if kind == "PT1":
        budget = n_base - n_lo
    else:
        budget = n_hi - n_base
    if budget < 0:
        return []

    options = []
    for alpha in range(len(g.charts)):
        try:
            if kind == "DT":
                levels = enumerate_solid_partitions(gluing.mu[alpha], budget)
                options.append([(size, (pi, None, _format_boxes(pi.added))) for size, pi in _flatten(levels)])
            elif kind == "PT0":
                pi = gluing.base[alpha]
                levels = pt0_enumerate(pi.mu, budget)
                options.append([(size, (pi, config, _format_boxes(config.boxes))) for size, config in _flatten(levels)])
            else:
                pi, _ = gluing.base[alpha]
                lambdas = {SURFACE_PAIR: gluing.lam} if gluing.lam else {}
                curves = {SURFACE_PAIR: gluing.chart_curves(alpha)} if lambdas else None
                configs = pt1_enumerate(lambdas, budget, curves)
                options.append([(config.colength, (pi, config, _pt1_text(config))) for config in configs])
        except ModuliPresent as err:  # ModuliPresent(ScopeViolation)
            raise ModuliPresent(err.message, chart=alpha, surface=gluing.lam, **err.details) from err

    charts0 = gluing.base_charts()
    edges = gluing.edges(charts0)
    faces = gluing.faces()
    points = []
    for chosen, used in _bounded_product(options, budget):
        n = n_base - used if kind == "PT1" else n_base + used
        if not classes.contains(m, n):
            continue
        charts = tuple(gluing.chart(alpha, pi, config) for alpha, (pi, config, _) in enumerate(chosen))
        ident = gluing.ident(text for _, _, text in chosen)
        points.append(GlobalFixedPoint(ident, kind, gluing.lam.size, n, m, charts, edges, faces))
    return points


def _pt1_text(config: BoxConfig) -> str:
    parts = [f"{','.join(map(str, s.position))}/{'.'.join(map(str, s.nu.staircase))}" for s in config.slices if s.nu]
    if config.boxes:
        parts.append(_format_boxes(config.boxes))
    return ";".join(parts)


#####################################################################
# Operations

def enumerate_global(g: ToricGeometry, kind: str, classes: GlobalClasses) -> list:
    """Global fixed points of the given kind with class data in the windows, sorted by (n, 2m, ident).

    Raises:
        InputError: unknown kind.
        UnsupportedGeometry: the geometry is outside the local surface scope.
        ModuliPresent: a chart datum carries moduli; the error names the chart.
    """
    kind = kind.upper()
    if kind not in GLOBAL_KINDS:
        raise InputError(f"Unknown global kind '{kind}', expected one of {GLOBAL_KINDS}")
    if classes.is_empty():
        return []
    check_enumerable(g)
    if classes.degree and not g.faces:
        raise UnsupportedGeometry(f"Geometry '{g.name}' has no compact surface for degree {classes.degree}")
    m_lo, m_hi = classes.m_range

    points = []
    for lam in finite_partitions(classes.degree):
        empty = tuple(slot[0][1] for slot in _edge_options(g, kind, lam, 0))
        _, m_base = _Gluing(g, kind, lam, empty).classes()
        budget = math.floor(m_hi - m_base)
        if budget < 0:
            continue
        edge_choices = [chosen for chosen, _ in _bounded_product(_edge_options(g, kind, lam, budget), budget)]
        for edge_data in edge_choices:
            gluing = _Gluing(g, kind, lam, edge_data)
            n_base, m = gluing.classes()
            if not m_lo <= m <= m_hi:
                continue
            points.extend(_vertex_points(gluing, classes, n_base, m))
    points.sort(key=lambda p: (p.n, 2 * p.m, p.ident))
    settings.log(f"global {kind} on {g.name}: {len(points)} fixed points for d={classes.degree}")
    return points


def count_by_class(points: Iterable[GlobalFixedPoint]) -> dict:
    counts = {}
    for point in points:
        counts[point.key] = counts.get(point.key, 0) + 1
    return counts
