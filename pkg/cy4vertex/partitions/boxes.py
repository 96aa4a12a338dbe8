"""CY4Vertex PT0 and PT1 box configurations

A box configuration is a finitely generated submodule B of M / O_Z,
where M is the limit module of the PT0 (embedded points) or PT1
(embedded curves) pairs with support Z. Weights of M / O_Z form the
region R; when every weight space of R is one dimensional, B is a set
of boxes of R closed under gravity in direction (1, 1, 1, 1):

    w in R and w - e_i in B  =>  w in B

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from itertools import product
from typing import Iterable, Mapping, NamedTuple

from cy4vertex import settings
from cy4vertex.errors import InputError, ModuliPresent
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, mf_sum
from cy4vertex.exact_algebra.laurent import double
from cy4vertex.partitions.finite import AXES, FinitePartition, complement, partitions_up_to
from cy4vertex.partitions.plane import minimal_plane_partitions
from cy4vertex.partitions.solid import SolidPartition
from cy4vertex.partitions.surface import surface_extent, t0_weights, w_membership


#####################################################################
# SurfaceSlice

class SurfaceSlice(NamedTuple):
    """PT1 cokernel over one box s of a surface cross section.

    Along the surface axes (a, b) the cokernel is x^-c I_nu / O with
    c = (c_a, c_b) the curve multiplicities and nu a finite partition
    not containing c.
    """

    pair: tuple
    position: tuple
    curve: tuple
    nu: FinitePartition

    def contains(self, x: tuple) -> bool:
        a, b = self.pair
        c, d = complement(*self.pair)
        if (x[c], x[d]) != self.position:
            return False
        w = (x[a], x[b])
        if w[0] >= 0 and w[1] >= 0:
            return False
        shifted = (w[0] + self.curve[0], w[1] + self.curve[1])
        return shifted[0] >= 0 and shifted[1] >= 0 and shifted not in self.nu

    def character(self) -> MonomialFraction:
        """t^s [(t^-c - 1) / ((1 - t_a)(1 - t_b)) - t^-c nu]."""
        a, b = self.pair
        c, d = complement(*self.pair)
        s = [0] * 5
        s[c], s[d] = self.position
        minus_c = list(s)
        minus_c[a] -= self.curve[0]
        minus_c[b] -= self.curve[1]
        body = LaurentPoly.monomial(double(minus_c)) - LaurentPoly.monomial(double(s))
        nu = self.nu.character(self.pair).shift(double(minus_c))
        return mf_sum((
            MonomialFraction(body, {double(_unit(a)): -1, double(_unit(b)): -1}),
            MonomialFraction(-nu),
        ))

    @property
    def colength(self) -> int:
        return self.nu.size


def _unit(axis: int) -> tuple:
    return tuple(int(i == axis) for i in range(5))


def _step(x: tuple, axis: int, delta: int) -> tuple:
    return tuple(v + delta if i == axis else v for i, v in enumerate(x))


#####################################################################
# BoxConfig

class BoxConfig:
    """Finite boxes (PT0, PT1 junction) plus PT1 surface slices."""

    __slots__ = ("kind", "boxes", "slices")

    def __init__(self, kind: str, boxes: Iterable[tuple] = (), slices: Iterable[SurfaceSlice] = ()):
        if kind not in ("PT0", "PT1"):
            raise InputError(f"Box configuration kind must be PT0 or PT1, got '{kind}'")
        self.kind = kind
        self.boxes = frozenset(tuple(b) for b in boxes)
        self.slices = tuple(sorted(s for s in slices if s.curve != (0, 0)))

    @property
    def size(self) -> int:
        return len(self.boxes)

    @property
    def colength(self) -> int:
        return len(self.boxes) + sum(s.colength for s in self.slices)

    def is_empty(self) -> bool:
        return not self.boxes and not self.slices

    def contains(self, x: tuple) -> bool:
        return x in self.boxes or any(s.contains(x) for s in self.slices)

    def weight(self, x: tuple) -> int:
        return int(x in self.boxes) + sum(int(s.contains(x)) for s in self.slices)

    def character(self) -> MonomialFraction:
        finite = MonomialFraction(LaurentPoly.from_weights({b: 1 for b in self.boxes}))
        return mf_sum([finite] + [s.character() for s in self.slices])

    def window(self) -> tuple:
        """(lo, hi) such that every nontrivial weight lies in [lo, hi]."""
        lo = min([0] + [min(b) for b in self.boxes] + [-max(s.curve) for s in self.slices])
        hi = max([0] + [max(b) for b in self.boxes]
                 + [max(s.position) for s in self.slices]
                 + [s.nu.extent for s in self.slices])
        return lo, hi

    def key(self) -> tuple:
        return (self.kind, tuple(sorted(self.boxes)),
                tuple((s.pair, s.position, s.curve, s.nu.staircase) for s in self.slices))

    def __eq__(self, other) -> bool:
        return isinstance(other, BoxConfig) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"BoxConfig({self.kind}, boxes={sorted(self.boxes)}, slices={list(self.slices)})"


#####################################################################
# PT0

def pt0_region(mu: tuple, max_size: int = 0) -> frozenset:
    """Weights of M / O_Z for the PT0 limit module M, inside the search window.

    dim_x = sum_a [x_-a in mu_a - mu_a^lambda] - ([x in pi^mu] - [x in pi^mu^lambda]) + [x in T0(O_W)]

    Raises:
        ModuliPresent: some weight space has dimension >= 2.
    """
    pi = SolidPartition(mu)
    lambdas = pi.lambdas
    minimal = SolidPartition(minimal_plane_partitions(lambdas))
    torsion = t0_weights(lambdas) if lambdas else frozenset()
    lo, hi = -(max_size + 1), pi.extent + 1
    region = set()
    for x in product(range(lo, hi + 1), repeat=4):
        dim = 0
        for plane, base in zip(pi.mu, minimal.mu):
            if plane.contains(x) and not base.contains(x):
                dim += 1
        if all(c >= 0 for c in x):
            dim -= int(pi.contains(x)) - int(minimal.contains(x))
            dim += int(x in torsion)
        if dim >= 2:
            raise ModuliPresent("PT0 moduli present, out of supported scope", weight=x, dimension=dim)
        if dim == 1:
            region.add(x)
    return frozenset(region)


def _closed_additions(region: frozenset, boxes: frozenset, candidates: Iterable[tuple]) -> list:
    """Candidates in region - boxes whose upward neighbours in region all lie in boxes."""
    result = []
    for w in candidates:
        if w not in region or w in boxes:
            continue
        if all(_step(w, a, 1) not in region or _step(w, a, 1) in boxes for a in AXES):
            result.append(w)
    return result


def closed_subsets(region: frozenset, max_size: int) -> dict:
    """Gravity closed finite subsets of region grouped by size (breadth first)."""
    levels = {0: [frozenset()]}
    frontier = {frozenset(): _closed_additions(region, frozenset(), region)}
    for size in range(1, max_size + 1):
        children = {}
        for boxes, addable in frontier.items():
            for w in addable:
                child = boxes | {w}
                if child in children:
                    continue
                fresh = [_step(w, a, -1) for a in AXES]
                rest = [v for v in addable if v != w]
                children[child] = sorted(set(rest) | set(_closed_additions(region, child, fresh)))
        frontier = dict(sorted(children.items(), key=lambda kv: sorted(kv[0])))
        levels[size] = list(frontier)
        if not children:
            break
    return levels


def pt0_enumerate(mu: tuple, max_size: int) -> dict:
    """PT0 box configurations with asymptotics mu grouped by size."""
    if max_size < 0:
        raise InputError(f"Maximal size must be nonnegative, got {max_size}")
    region = pt0_region(mu, max_size)
    levels = {}
    for size, subsets in closed_subsets(region, max_size).items():
        levels[size] = [BoxConfig("PT0", boxes) for boxes in subsets]
        settings.log(f"PT0 configurations: {len(levels[size])} of size {size}")
    return levels


#####################################################################
# PT1

def pt1_limit_region(lambdas: Mapping[tuple, FinitePartition], lo: int, hi: int) -> frozenset:
    """Weights of M / O_Z for the PT1 limit module M = sum_ab O_Z_ab[x_a^-1, x_b^-1].

    Raises:
        ModuliPresent: some weight space has dimension >= 2.
    """
    lambdas = {p: lam for p, lam in lambdas.items() if lam}
    pi = SolidPartition(minimal_plane_partitions(lambdas))
    region = set()
    for x in product(range(lo, hi + 1), repeat=4):
        dim = 0
        for pair, lam in lambdas.items():
            c, d = complement(*pair)
            if x[c] >= 0 and x[d] >= 0 and (x[c], x[d]) in lam:
                dim += 1
        dim -= pi.weight(x)
        if dim >= 2:
            raise ModuliPresent("PT1 moduli present, out of supported scope", weight=x, dimension=dim)
        if dim == 1:
            region.add(x)
    return frozenset(region)


def gravity_closure(region: frozenset, seeds: Iterable[tuple], hi: int) -> tuple:
    """Smallest gravity closed subset of region containing seeds.

    The region must be known up to coordinate hi + 1.

    Returns:
        (closure, finite): closure truncated at coordinate hi; finite is
        False when the closure runs past hi.
    """
    closure = set()
    stack = [tuple(s) for s in seeds]
    finite = True
    while stack:
        w = stack.pop()
        if w in closure:
            continue
        if max(w) > hi:
            finite = False
            continue
        closure.add(w)
        for a in AXES:
            step = _step(w, a, 1)
            if step in region:
                stack.append(step)
    return frozenset(closure), finite


def _slice_options(nu_budget: int, curve: tuple) -> list:
    if curve == (0, 0):
        return [FinitePartition()]
    return [nu for nu in partitions_up_to(nu_budget) if curve not in nu]


def _monotone(first: SurfaceSlice, second: SurfaceSlice) -> bool:
    """B_first inside B_second."""
    if first.curve[0] > second.curve[0] or first.curve[1] > second.curve[1]:
        return False
    top = max(first.nu.extent, second.nu.extent) + 1
    low = -max(first.curve + second.curve + (0,))
    a, b = first.pair
    c, d = complement(*first.pair)
    for wa, wb in product(range(low, top + 1), repeat=2):
        x = [0] * 4
        x[a], x[b] = wa, wb
        x[c], x[d] = first.position
        y = list(x)
        y[c], y[d] = second.position
        if first.contains(tuple(x)) and not second.contains(tuple(y)):
            return False
    return True


def surface_slices(pair: tuple, lam: FinitePartition, curves: Mapping[tuple, tuple], max_colength: int) -> list:
    """All monotone slice families over one surface with total colength <= max_colength."""
    positions = sorted(lam.boxes())
    for s, c in curves.items():
        if s not in lam:
            raise InputError(f"Curve multiplicity given at {s}, outside the surface cross section")
        if len(c) != 2 or min(c) < 0:
            raise InputError(f"Curve multiplicities at {s} must be two nonnegative integers")
    families = [()]
    for s in positions:
        curve = tuple(curves.get(s, (0, 0)))
        grown = []
        for family in families:
            used = sum(x.colength for x in family)
            for nu in _slice_options(max_colength - used, curve):
                grown.append(family + (SurfaceSlice(pair, s, curve, nu),))
        families = grown

    result = []
    for family in families:
        by_position = {x.position: x for x in family}
        ok = True
        for x in family:
            for k in range(2):
                up = tuple(v + int(i == k) for i, v in enumerate(x.position))
                if up in by_position and not _monotone(x, by_position[up]):
                    ok = False
        if ok:
            result.append(family)
    return result


def _forced_junction(slices: Iterable[SurfaceSlice], member) -> frozenset:
    """W weights reached from the slices by one multiplication."""
    forced = set()
    for x in slices:
        a, b = x.pair
        c, d = complement(*x.pair)
        top = x.nu.extent + max(x.curve) + 1
        for axis, other in ((a, b), (b, a)):
            for v in range(0, top + 1):
                w = [0] * 4
                w[c], w[d] = x.position
                w[axis], w[other] = -1, v
                if x.contains(tuple(w)):
                    up = _step(tuple(w), axis, 1)
                    if member(up):
                        forced.add(up)
    return frozenset(forced)


def pt1_enumerate(lambdas: Mapping[tuple, FinitePartition], max_colength: int,
                  curves: Mapping[tuple, Mapping[tuple, tuple]] = None) -> list:
    """PT1 box configurations over Z_lambda.

    Args:
        lambdas (dict): pair -> FinitePartition, one surface or two complementary surfaces
        max_colength (int): bound on sum |nu_s| plus junction boxes
        curves (dict): pair -> {slice position: (c_a, c_b)}, zero when absent

    Raises:
        ModuliPresent: the surface pattern carries PT1 moduli.
    """
    lambdas = {tuple(sorted(p)): lam for p, lam in lambdas.items() if lam}
    curves = {tuple(sorted(p)): dict(c) for p, c in (curves or {}).items()}
    if not lambdas:
        return [BoxConfig("PT1")]
    pairs = sorted(lambdas)
    if len(pairs) > 2 or (len(pairs) == 2 and set(pairs[0]) & set(pairs[1])):
        raise ModuliPresent("PT1 moduli present, out of supported scope", pairs=pairs)
    if set(curves) - set(pairs):
        raise InputError("Curve multiplicities given for a surface outside the support")

    per_surface = [surface_slices(p, lambdas[p], curves.get(p, {}), max_colength) for p in pairs]
    junctions = {0: [frozenset()]}
    member = None
    if len(pairs) == 2:
        member = w_membership(lambdas)
        hi = surface_extent(lambdas)
        region = frozenset(x for x in product(range(hi + 1), repeat=4) if member(x))
        junctions = closed_subsets(region, max_colength)

    configs = []
    for families in product(*per_surface):
        slices = [x for family in families for x in family]
        used = sum(x.colength for x in slices)
        forced = _forced_junction(slices, member) if member else frozenset()
        for size, subsets in sorted(junctions.items()):
            if used + size > max_colength:
                break
            for boxes in subsets:
                if forced <= boxes:
                    configs.append(BoxConfig("PT1", boxes, slices))
    configs.sort(key=lambda c: (c.colength, c.key()))
    settings.log(f"PT1 configurations: {len(configs)} up to colength {max_colength}")
    return configs
