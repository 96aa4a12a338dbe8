"""CY4Vertex partition text format

Whitespace separated tokens, axes 1-based:

    12:1+t4          lambda_12 as a sum of monomials in the two other variables
    mu1=1/(1-t2)+t3  mu_1: legs M/(1-tB) with cross section monomial M, finite boxes M
    box=0,0,1,0      an added box
    empty            nothing (all asymptotics empty)

When mu tokens are present the lambda data is read off their legs and any
lambda tokens must agree; otherwise mu is the minimal mu^lambda.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


import re
from typing import NamedTuple

from cy4vertex.errors import InconsistentAsymptotics, InputError
from cy4vertex.partitions.finite import AXES, FinitePartition, complement, pair_label, parse_pair
from cy4vertex.partitions.plane import PlanePartition, check_compatible, minimal_plane_partitions


#####################################################################
# Constants

_FACTOR = re.compile(r"^t([1-4])(?:\^(\d+))?$")
_LEG = re.compile(r"^(.*)/\(1-t([1-4])\)$")


class PartitionSpec(NamedTuple):
    lambdas: dict
    mu: tuple
    added: tuple


#####################################################################
# Internal helper

def _monomial(text: str) -> dict:
    """'t3^2*t4' -> {axis: exponent}."""
    exponents = {}
    text = text.strip()
    if text in ("", "1"):
        return exponents
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise InputError(f"Cannot read monomial factor '{factor}'")
        axis = int(match.group(1)) - 1
        exponents[axis] = exponents.get(axis, 0) + int(match.group(2) or 1)
    return exponents


def _format_monomial(exponents: dict) -> str:
    factors = []
    for axis in sorted(exponents):
        e = exponents[axis]
        if e == 1:
            factors.append(f"t{axis + 1}")
        elif e:
            factors.append(f"t{axis + 1}^{e}")
    return "*".join(factors) or "1"


def _terms(text: str) -> list:
    depth, start, terms = 0, 0, []
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "+" and depth == 0:
            terms.append(text[start:i])
            start = i + 1
    terms.append(text[start:])
    return [t.strip() for t in terms if t.strip()]


def parse_lambda(pair: tuple, text: str) -> FinitePartition:
    c, d = complement(*pair)
    boxes = []
    for term in _terms(text):
        exponents = _monomial(term)
        if set(exponents) - {c, d}:
            raise InputError(f"lambda_{pair_label(pair)} may only involve t{c + 1} and t{d + 1}, got '{term}'")
        boxes.append((exponents.get(c, 0), exponents.get(d, 0)))
    return FinitePartition.from_boxes(boxes)


def format_lambda(pair: tuple, lam: FinitePartition) -> str:
    c, d = complement(*pair)
    return "+".join(_format_monomial({c: i, d: j}) for i, j in lam.boxes())


def parse_plane(axis: int, text: str) -> PlanePartition:
    legs, boxes = {}, []
    if text.strip() in ("", "0", "empty"):
        return PlanePartition(axis)
    for term in _terms(text.replace(" ", "")):
        match = _LEG.match(term)
        if match:
            b = int(match.group(2)) - 1
            c, d = complement(axis, b)
            exponents = _monomial(match.group(1))
            if set(exponents) - {c, d}:
                raise InputError(f"Leg '{term}' of mu_{axis + 1} has a cross section outside t{c + 1}, t{d + 1}")
            legs.setdefault(b, []).append((exponents.get(c, 0), exponents.get(d, 0)))
            continue
        exponents = _monomial(term)
        if axis in exponents:
            raise InputError(f"Box '{term}' of mu_{axis + 1} involves t{axis + 1}")
        boxes.append(tuple(exponents.get(a, 0) for a in AXES))
    legs = {b: FinitePartition.from_boxes(cells) for b, cells in legs.items()}
    return PlanePartition(axis, legs, boxes)


def format_plane(plane: PlanePartition) -> str:
    terms = []
    for b in sorted(plane.legs):
        c, d = complement(plane.axis, b)
        for i, j in plane.legs[b].boxes():
            terms.append(f"{_format_monomial({c: i, d: j})}/(1-t{b + 1})")
    for box in sorted(plane.boxes):
        terms.append(_format_monomial({a: x for a, x in enumerate(box)}))
    return "+".join(terms) or "0"


#####################################################################
# Operations

def parse_partition_spec(text: str) -> PartitionSpec:
    """Read lambda, mu and added boxes from the token format.

    Raises:
        InputError: a token cannot be read.
        InconsistentAsymptotics: lambda tokens disagree with the mu legs.
    """
    lambdas, planes, added = {}, {}, []
    for token in text.split():
        if token == "empty":
            continue
        if token.startswith("box="):
            try:
                box = tuple(int(x) for x in token[4:].split(","))
            except ValueError as err:
                raise InputError(f"Cannot read box '{token}'") from err
            if len(box) != 4:
                raise InputError(f"Box '{token}' must have four coordinates")
            added.append(box)
        elif token.startswith("mu") and "=" in token:
            label, body = token[2:].split("=", 1)
            if label not in ("1", "2", "3", "4"):
                raise InputError(f"Unknown plane partition '{token}'")
            planes[int(label) - 1] = parse_plane(int(label) - 1, body)
        elif ":" in token:
            label, body = token.split(":", 1)
            pair = parse_pair(label)
            lambdas[pair] = parse_lambda(pair, body)
        else:
            raise InputError(f"Cannot read partition token '{token}'")

    lambdas = {p: lam for p, lam in lambdas.items() if lam}
    combined = dict(lambdas)
    for plane in planes.values():
        for b, lam in plane.legs.items():
            combined.setdefault(tuple(sorted((plane.axis, b))), lam)
    minimal = minimal_plane_partitions(combined)
    mu = tuple(planes.get(a, minimal[a]) for a in AXES)
    derived = check_compatible(mu)
    for pair, lam in lambdas.items():
        if derived.get(pair) != lam:
            raise InconsistentAsymptotics("inconsistent asymptotics: lambda tokens disagree with the mu legs",
                                          pair=pair_label(pair))
    return PartitionSpec(derived, mu, tuple(added))


def format_partition_spec(spec: PartitionSpec) -> str:
    tokens = [f"{pair_label(p)}:{format_lambda(p, spec.lambdas[p])}" for p in sorted(spec.lambdas)]
    for plane in spec.mu:
        if plane.boxes:
            tokens.append(f"mu{plane.axis + 1}={format_plane(plane)}")
    tokens.extend("box=" + ",".join(str(x) for x in box) for box in sorted(spec.added))
    return " ".join(tokens) or "empty"
