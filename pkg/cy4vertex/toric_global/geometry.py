"""CY4Vertex toric geometry

A toric Calabi-Yau 4-fold is given chart by chart: four coordinate
weights per chart in the global character lattice Z^4. Compact edges,
their normal degrees (m, m', m''), coordinate matchings and compact
faces are all derived from the weights. Line bundles are per-chart
characters of a local frame.

Global coordinates are chosen so that every chart's weights add up to
(1, 1, 1, 1); the CY torus is then t1 t2 t3 t4 = 1.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import Iterable, Mapping, NamedTuple
import copy
import os
import sympy
import yaml

from cy4vertex.errors import Cy4VertexError, InputError, UnsupportedGeometry
from cy4vertex.local_terms import FIBRE, FaceCharacter, images_from_weights
from cy4vertex.local_terms.face import SURFACE_AXES, face_tau
from cy4vertex.partitions import AXES, FinitePartition


#####################################################################
# Constants

CY_CHARACTER = (1, 1, 1, 1)

BUILTINS = ("c4", "local-p2", "local-p1xp1", "kY:c3", "kY:local-p2")

_E = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))

_ZERO = (0, 0, 0, 0)

_BOX = FinitePartition([1])


#####################################################################
# Internal helper

def _add(*vectors) -> tuple:
    return tuple(sum(xs) for xs in zip(*vectors))


def _scale(k: int, v: tuple) -> tuple:
    return tuple(k * x for x in v)


def _multiple(diff: tuple, w: tuple):
    """k with diff == k w, or None."""
    pivot = next(i for i, x in enumerate(w) if x)
    if diff[pivot] % w[pivot]:
        return None
    k = diff[pivot] // w[pivot]
    return k if _scale(k, w) == tuple(diff) else None


#####################################################################
# Edges and faces

class ToricEdge(NamedTuple):
    """Compact torus invariant curve: axis `axis` of chart alpha, axis `beta_axis` of chart beta."""

    alpha: int
    axis: int
    beta: int
    beta_axis: int
    normal: tuple
    matching: tuple

    def normal_map(self) -> dict:
        return dict(self.normal)

    def matched(self, a: int) -> int:
        return dict(self.matching)[a]

    def record(self) -> dict:
        return {
            "charts": [self.alpha, self.beta],
            "axis": self.axis + 1,
            "normal": [m for _, m in self.normal],
        }


class ToricFace(NamedTuple):
    """Compact torus invariant surface with its charts and tangent axes per chart."""

    charts: tuple
    tangent: tuple

    def record(self) -> dict:
        return {"charts": list(self.charts), "tangent": [[a + 1 for a in pair] for pair in self.tangent]}


#####################################################################
# ToricGeometry

class ToricGeometry:
    """Validated chart, edge, face and line bundle data of a toric CY 4-fold."""

    def __init__(self, name: str, charts: Iterable[Iterable[Iterable[int]]], fibre: int = None,
                 bundles: Mapping[str, Iterable[Iterable[int]]] = None, degree_bundle: str = None,
                 explicit_edges: Iterable[Mapping] = ()):
        self.name = name
        self.charts = tuple(tuple(tuple(int(x) for x in w) for w in chart) for chart in charts)
        self.fibre = fibre
        self.bundles = {k: tuple(tuple(int(x) for x in w) for w in v) for k, v in (bundles or {}).items()}
        self.degree_bundle = degree_bundle or next(iter(self.bundles), None)
        problems = self._check_charts()
        if problems:
            raise InputError(f"Geometry '{name}' is not a toric CY 4-fold", problems=problems)
        self.edges = self._derive_edges()
        problems = self._check_edges(explicit_edges) + self._check_bundles()
        if problems:
            raise InputError(f"Geometry '{name}' violates its invariants", problems=problems)
        self.faces = self._derive_faces()

    # Validation

    def _check_charts(self) -> list:
        problems = []
        if not self.charts:
            problems.append("no charts")
        for index, chart in enumerate(self.charts):
            if len(chart) != 4 or any(len(w) != 4 for w in chart):
                problems.append(f"chart {index}: needs four weights of length four")
                continue
            if abs(sympy.Matrix(chart).det()) != 1:
                problems.append(f"chart {index}: weights are not a lattice basis")
            if _add(*chart) != CY_CHARACTER:
                problems.append(f"chart {index}: weights add up to {_add(*chart)}, expected {CY_CHARACTER}")
        if self.fibre is not None and self.fibre != FIBRE:
            problems.append(f"fibre must be coordinate {FIBRE + 1} of every chart, got {self.fibre + 1}")
        for name, weights in self.bundles.items():
            if len(weights) != len(self.charts) or any(len(w) != 4 for w in weights):
                problems.append(f"bundle {name}: needs one weight of length four per chart")
        if self.degree_bundle is not None and self.degree_bundle not in self.bundles:
            problems.append(f"degree bundle '{self.degree_bundle}' is not listed")
        return problems

    def _match(self, alpha: int, axis: int, beta: int):
        """ToricEdge from (alpha, axis) to beta, or None."""
        w = self.charts[alpha][axis]
        other = self.charts[beta]
        opposite = [b for b in AXES if other[b] == _scale(-1, w)]
        if len(opposite) != 1:
            return None
        beta_axis = opposite[0]
        normal, matching = [], [(axis, beta_axis)]
        for a in AXES:
            if a == axis:
                continue
            found = []
            for b in AXES:
                if b == beta_axis:
                    continue
                k = _multiple(tuple(x - y for x, y in zip(other[b], self.charts[alpha][a])), w)
                if k is not None:
                    found.append((b, -k))
            if len(found) != 1:
                return None
            matching.append((a, found[0][0]))
            normal.append((a, found[0][1]))
        return ToricEdge(alpha, axis, beta, beta_axis, tuple(normal), tuple(sorted(matching)))

    def _derive_edges(self) -> tuple:
        edges = []
        for alpha in range(len(self.charts)):
            for axis in AXES:
                for beta in range(alpha + 1, len(self.charts)):
                    edge = self._match(alpha, axis, beta)
                    if edge is not None:
                        edges.append(edge)
        return tuple(edges)

    def _check_edges(self, explicit_edges: Iterable[Mapping]) -> list:
        problems = []
        for edge in self.edges:
            total = sum(m for _, m in edge.normal)
            if total != -2:
                problems.append(f"edge {edge.alpha}-{edge.beta}: normal degrees add up to {total}, expected -2")
        for index, entry in enumerate(explicit_edges or ()):
            try:
                alpha, axis = int(entry["chart"]), int(entry["axis"]) - 1
                normal = [int(m) for m in entry["normal"]]
            except (KeyError, TypeError, ValueError):
                problems.append(f"edge entry {index}: needs chart, axis and normal")
                continue
            if sum(normal) != -2:
                problems.append(f"edge entry {index}: normal degrees {normal} add up to {sum(normal)}, expected -2")
                continue
            edge = self.edge_at(alpha, axis)
            if edge is None:
                problems.append(f"edge entry {index}: chart {alpha} has no compact edge along axis {axis + 1}")
            elif edge.alpha == alpha and [m for _, m in edge.normal] != normal:
                problems.append(f"edge entry {index}: normal degrees {normal} disagree with the weights")
        return problems

    def _check_bundles(self) -> list:
        problems = []
        for name, weights in self.bundles.items():
            for edge in self.edges:
                w = self.charts[edge.alpha][edge.axis]
                diff = tuple(x - y for x, y in zip(weights[edge.beta], weights[edge.alpha]))
                if any(diff) and _multiple(diff, w) is None:
                    problems.append(f"bundle {name}: frames of charts {edge.alpha} and {edge.beta} do not glue")
        return problems

    def _derive_faces(self) -> tuple:
        seen = set()
        faces = []
        for alpha in range(len(self.charts)):
            for pair in ((a, b) for a in AXES for b in AXES if a < b):
                if (alpha, pair) in seen:
                    continue
                members = self._close_face(alpha, pair)
                if members is None:
                    continue
                seen.update(members)
                ordered = sorted(members)
                faces.append(ToricFace(tuple(c for c, _ in ordered), tuple(p for _, p in ordered)))
        return tuple(faces)

    def _close_face(self, alpha: int, pair: tuple):
        """All (chart, tangent pair) of the compact surface through (alpha, pair), or None."""
        members = {(alpha, pair)}
        stack = [(alpha, pair)]
        while stack:
            chart, (a, b) = stack.pop()
            for axis, other in ((a, b), (b, a)):
                edge = self.edge_at(chart, axis)
                if edge is None:
                    return None
                if edge.alpha == chart:
                    neighbour, mapped = edge.beta, (edge.beta_axis, edge.matched(other))
                else:
                    inverse = {v: k for k, v in edge.matching}
                    neighbour, mapped = edge.alpha, (edge.axis, inverse[other])
                entry = (neighbour, tuple(sorted(mapped)))
                if entry not in members:
                    members.add(entry)
                    stack.append(entry)
        if len({c for c, _ in members}) != len(members) or len(members) < 3:
            return None
        return members

    # Accessors

    def edge_at(self, chart: int, axis: int):
        """The compact edge leaving `chart` along `axis`, or None."""
        for edge in self.edges:
            if (edge.alpha, edge.axis) == (chart, axis) or (edge.beta, edge.beta_axis) == (chart, axis):
                return edge
        return None

    def images(self, chart: int) -> tuple:
        return images_from_weights(self.charts[chart])

    def bundle(self, name: str = None) -> tuple:
        """Per-chart frame weights; the trivial bundle when name is None."""
        if name is None:
            return tuple(_ZERO for _ in self.charts)
        try:
            return self.bundles[name]
        except KeyError:
            raise InputError(f"Geometry '{self.name}' has no line bundle '{name}'", known=sorted(self.bundles)) from None

    def with_degree_bundle(self, name: str) -> "ToricGeometry":
        """Copy measuring curve classes with another line bundle."""
        self.bundle(name)
        result = copy.copy(self)
        result.degree_bundle = name
        return result

    def edge_degree(self, edge: ToricEdge, bundle: str = None) -> int:
        """(L.C) on the edge curve C."""
        frames = self.bundle(bundle or self.degree_bundle)
        diff = tuple(x - y for x, y in zip(frames[edge.beta], frames[edge.alpha]))
        if not any(diff):
            return 0
        return _multiple(diff, self.charts[edge.alpha][edge.axis])

    def is_local_surface(self) -> bool:
        """One compact face carrying every compact edge, surface on x1 x2 in every chart."""
        if len(self.faces) != 1:
            return False
        face = self.faces[0]
        if any(pair != SURFACE_AXES for pair in face.tangent):
            return False
        return len(self.edges) == len(face.charts)

    def face_character(self, partition: FinitePartition, insertion: str = None, face: int = 0) -> FaceCharacter:
        """Face data with every chart reordered tangent axes first."""
        charts = self.faces[face].charts
        weights = []
        for chart, tangent in zip(charts, self.faces[face].tangent):
            order = tangent + tuple(a for a in AXES if a not in tangent)
            weights.append([self.charts[chart][a] for a in order])
        bundle = self.bundle(insertion)
        return FaceCharacter(partition, weights, [bundle[c] for c in charts])

    def surface_chi(self, bundle: str = None, power: int = 1, face: int = 0) -> int:
        """chi(S, L^power) by localization on the face."""
        character = self.face_character(_BOX, None, face)
        if bundle is not None:
            frames = self.bundle(bundle)
            character = FaceCharacter(_BOX, character.charts,
                                      [_scale(power, frames[c]) for c in self.faces[face].charts])
        return int(face_tau(character).rank())

    def surface_square(self, bundle: str = None) -> int:
        """(L.L) on the compact face: chi(2L) - 2 chi(L) + chi(O)."""
        bundle = bundle or self.degree_bundle
        if bundle is None or not self.faces:
            return 0
        return self.surface_chi(bundle, 2) - 2 * self.surface_chi(bundle, 1) + self.surface_chi()

    def describe(self) -> dict:
        return {
            "name": self.name,
            "charts": len(self.charts),
            "edges": [e.record() for e in self.edges],
            "faces": [f.record() for f in self.faces],
            "fibre": None if self.fibre is None else self.fibre + 1,
            "bundles": sorted(self.bundles),
        }

    def __repr__(self) -> str:
        return f"ToricGeometry({self.name}: {len(self.charts)} charts, {len(self.edges)} edges, {len(self.faces)} faces)"


#####################################################################
# Builtins

def c4(fibre: int = None) -> ToricGeometry:
    return ToricGeometry("c4" if fibre is None else "kY:c3", [_E], fibre)


def local_p2(a: int) -> ToricGeometry:
    """Tot O(a-3) + O(-a) over P2; x4 is the O(-a) fibre."""
    f = (_ZERO, _E[0], _E[1])
    charts, frames = [], []
    for i in range(3):
        j, k = (x for x in range(3) if x != i)
        charts.append((
            _add(f[j], _scale(-1, f[i])),
            _add(f[k], _scale(-1, f[i])),
            _add(_E[2], _scale(3 - a, f[i])),
            _add(_E[3], _scale(a, f[i])),
        ))
        frames.append(f[i])
    return ToricGeometry(f"local-p2:a={a}", charts, 3, {"H": frames})


def local_p1xp1(a: int, b: int) -> ToricGeometry:
    """Tot O(-a,-b) + O(a-2,b-2) over P1 x P1; x4 is the O(-a,-b) fibre."""
    f = (_ZERO, _E[0])
    g = (_ZERO, _E[1])
    charts, frames, first, second = [], [], [], []
    for i in (0, 1):
        for j in (0, 1):
            charts.append((
                _add(f[1 - i], _scale(-1, f[i])),
                _add(g[1 - j], _scale(-1, g[j])),
                _add(_E[2], _scale(2 - a, f[i]), _scale(2 - b, g[j])),
                _add(_E[3], _scale(a, f[i]), _scale(b, g[j])),
            ))
            frames.append(_add(f[i], g[j]))
            first.append(f[i])
            second.append(g[j])
    return ToricGeometry(f"local-p1xp1:a={a},b={b}", charts, 3, {"H": frames, "H1": first, "H2": second}, "H")


def _parameters(text: str, names: tuple) -> dict:
    values = {}
    for part in filter(None, text.split(",")):
        key, _, value = part.partition("=")
        if key.strip() not in names:
            raise InputError(f"Unknown geometry parameter '{key.strip()}', expected {names}")
        try:
            values[key.strip()] = int(value)
        except ValueError:
            raise InputError(f"Geometry parameter '{part}' must be an integer") from None
    missing = [n for n in names if n not in values]
    if missing:
        raise InputError(f"Missing geometry parameters {missing}")
    return values


def load_geometry(path: str) -> ToricGeometry:
    """ToricGeometry from a YAML file with charts, optional fibre, bundles and edges.

    Raises:
        InputError: the file cannot be read or violates the invariants.
    """
    try:
        with open(path) as fp:
            data = yaml.safe_load(fp)
    except (OSError, yaml.YAMLError) as err:
        raise InputError(f"Cannot read geometry file {path}: {err}") from err
    if not isinstance(data, dict) or "charts" not in data:
        raise InputError(f"Geometry file {path} needs a 'charts' list")
    fibre = data.get("fibre")
    try:
        return ToricGeometry(
            str(data.get("name", os.path.splitext(os.path.basename(path))[0])),
            data["charts"],
            None if fibre is None else int(fibre) - 1,
            data.get("bundles"),
            data.get("degree_bundle"),
            data.get("edges", ()),
        )
    except Cy4VertexError:  # Cy4VertexError(Exception)
        raise
    except (TypeError, ValueError) as err:
        raise InputError(f"Malformed geometry file {path}: {err}") from err


#####################################################################
# Operations

def build_geometry(spec) -> ToricGeometry:
    """Builtin geometry by name (`local-p2:a=2`) or a YAML geometry file.

    Raises:
        InputError: unknown builtin, bad parameters or invariant violations.
        UnsupportedGeometry: a builtin outside the CY range.
    """
    if isinstance(spec, ToricGeometry):
        return spec
    text = str(spec).strip()
    name, _, params = text.partition(":")
    if text in ("c4",):
        return c4()
    if text == "kY:c3":
        return c4(fibre=3)
    if text == "kY:local-p2":
        return local_p2(2)
    if name == "local-p2":
        return local_p2(_parameters(params, ("a",))["a"])
    if name == "local-p1xp1":
        values = _parameters(params, ("a", "b"))
        return local_p1xp1(values["a"], values["b"])
    if text.endswith((".yaml", ".yml")) or os.path.isfile(text):
        return load_geometry(text)
    raise UnsupportedGeometry(f"Unknown geometry '{text}'", builtins=BUILTINS)
