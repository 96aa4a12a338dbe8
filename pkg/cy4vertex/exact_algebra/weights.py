"""CY4Vertex virtual torus characters

A WeightClass is a finite signed multiset of integer weights
(t1, t2, t3, t4 exponents, y exponent). Brackets and square roots of
self-dual classes live here.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from cy4vertex.errors import InputError, PoleAtFixedWeight
from cy4vertex.exact_algebra.fraction import MonomialFraction, is_lex_positive
from cy4vertex.exact_algebra.laurent import NVARS, LaurentPoly


#####################################################################
# WeightClass

class WeightClass:
    """Immutable virtual representation of the torus."""

    __slots__ = ("weights", "rank")

    def __init__(self, weights: Mapping[tuple, int] = None):
        clean = {}
        for weight, mult in (weights or {}).items():
            weight = tuple(int(x) for x in weight)
            if len(weight) != NVARS:
                raise InputError(f"Weight {weight} must have {NVARS} coordinates")
            clean[weight] = clean.get(weight, 0) + int(mult)
        self.weights = {w: m for w, m in clean.items() if m}
        self.rank = sum(self.weights.values())

    def items(self):
        return self.weights.items()

    def __len__(self) -> int:
        return len(self.weights)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightClass) and self.weights == other.weights

    def __hash__(self) -> int:
        return hash(frozenset(self.weights.items()))

    def __add__(self, other: "WeightClass") -> "WeightClass":
        merged = dict(self.weights)
        for w, m in other.weights.items():
            merged[w] = merged.get(w, 0) + m
        return WeightClass(merged)

    def __neg__(self) -> "WeightClass":
        return WeightClass({w: -m for w, m in self.weights.items()})

    def __sub__(self, other: "WeightClass") -> "WeightClass":
        return self + (-other)

    def conjugate(self) -> "WeightClass":
        return WeightClass({tuple(-x for x in w): m for w, m in self.weights.items()})

    def fixed_part(self) -> "WeightClass":
        """Summed multiplicity of the weights trivial on the Calabi-Yau torus, at the zero weight."""
        total = sum(m for w, m in self.weights.items() if not any(cy_reduce(w)))
        return WeightClass({(0,) * NVARS: total})

    def __repr__(self) -> str:
        terms = ", ".join(f"{m:+d}{w}" for w, m in sorted(self.weights.items()))
        return f"WeightClass({{{terms}}})"


class SqrtOutcome(Enum):
    ZERO = "zero"
    DEGENERATE = "degenerate"


#####################################################################
# Operations

def to_weight_class(poly: LaurentPoly) -> WeightClass:
    """Read a character with integer coefficients as a virtual representation.

    Raises:
        InputError: a coefficient is not an integer or an exponent is not whole.
    """
    weights = {}
    for exponent, coeff in poly.items():
        if not isinstance(coeff, int):
            raise InputError(f"Character coefficient {coeff} is not an integer")
        if any(e % 2 for e in exponent):
            raise InputError(f"Character exponent {exponent} is not integral")
        weights[tuple(e // 2 for e in exponent)] = coeff
    return WeightClass(weights)


def cy_reduce(weight: tuple) -> tuple:
    """Representative with the t4 exponent eliminated through t1 t2 t3 t4 = 1."""
    w1, w2, w3, w4, wy = weight
    return (w1 - w4, w2 - w4, w3 - w4, 0, wy)


def cy_normalize(c: WeightClass) -> WeightClass:
    """Shift each t-part so its smallest coordinate is zero; colliding weights merge.

    The removed multiple of (1, 1, 1, 1) is trivial on the Calabi-Yau torus
    and is not kept: every consumer evaluates with t4 = 1 / (t1 t2 t3).
    """
    weights = {}
    for w, m in c.items():
        low = min(w[:4])
        key = tuple(x - low for x in w[:4]) + (w[4],)
        weights[key] = weights.get(key, 0) + m
    return WeightClass(weights)


def bracket_eval(c: WeightClass) -> MonomialFraction:
    """prod_w [eta^w]^mult(w) with t4 eliminated.

    [eta^w] = eta^(w/2) - eta^(-w/2) = -eta^(-w/2) (1 - eta^w).

    Multiplicities are summed per Calabi-Yau class first.

    Raises:
        PoleAtFixedWeight: the Calabi-Yau trivial weights have negative total multiplicity.
    """
    classes = {}
    for w, m in c.items():
        reduced = cy_reduce(w)
        classes[reduced] = classes.get(reduced, 0) + m

    zero_key = (0,) * NVARS
    fixed = classes.pop(zero_key, 0)
    if fixed > 0:
        return MonomialFraction()
    if fixed < 0:
        raise PoleAtFixedWeight("pole at T-fixed weight", weight=zero_key, multiplicity=fixed)

    numerator_exponent = [0] * NVARS
    sign = 1
    factors = {}
    for reduced, m in classes.items():
        if not m:
            continue
        # reduced is integral, so eta^(-w/2) has doubled exponent -reduced
        for i, x in enumerate(reduced):
            numerator_exponent[i] -= m * x
        if m % 2:
            sign = -sign
        doubled = tuple(2 * x for x in reduced)
        factors[doubled] = factors.get(doubled, 0) + m
    return MonomialFraction(LaurentPoly.monomial(tuple(numerator_exponent), sign), factors)


def sqrt_split(c: WeightClass, sign: int = 1):
    """Half D of a self-dual class c = D + conjugate(D).

    For each conjugate pair the lexicographically positive weight (after
    eliminating t4) is kept. The sign does not change the half; callers
    multiply bracket_eval(D) by it.

    Returns:
        WeightClass, or SqrtOutcome.ZERO when c has a trivial weight with
        positive even multiplicity, or SqrtOutcome.DEGENERATE when c is not
        self-dual.
    """
    if sign not in (1, -1):
        raise InputError(f"Square root sign must be +1 or -1, got {sign}")
    grouped = {}
    for w, m in c.items():
        key = cy_reduce(w)
        representative, total = grouped.get(key, (w, 0))
        grouped[key] = (representative, total + m)

    zero_key = (0,) * NVARS
    half = {}
    for key, (representative, m) in grouped.items():
        if key == zero_key or not m:
            continue
        partner = tuple(-x for x in key)
        if grouped.get(partner, (None, 0))[1] != m:
            return SqrtOutcome.DEGENERATE
        if is_lex_positive(key):
            half[representative] = half.get(representative, 0) + m

    zero_mult = grouped.get(zero_key, (None, 0))[1]
    if zero_mult:
        if zero_mult > 0 and zero_mult % 2 == 0:
            return SqrtOutcome.ZERO
        return SqrtOutcome.DEGENERATE
    return WeightClass(half)


#####################################################################
# Serialization

def dump_terms(value) -> str:
    """Line format `coeff  e1 e2 e3 e4 ey` with doubled exponents, sorted."""
    if isinstance(value, WeightClass):
        items = [(tuple(2 * x for x in w), m) for w, m in value.items()]
    else:
        items = list(value.items())
    lines = []
    for exponent, coeff in sorted(items):
        lines.append(f"{coeff}  " + " ".join(str(e) for e in exponent))
    return "\n".join(lines) + ("\n" if lines else "")


def load_terms(text: str, as_class: bool = False):
    terms = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != NVARS + 1:
            raise InputError(f"Line {lineno}: expected {NVARS + 1} fields, got {len(fields)}")
        try:
            coeff = Fraction(fields[0])
            exponent = tuple(int(x) for x in fields[1:])
        except ValueError as err:
            raise InputError(f"Line {lineno}: {err}") from err
        terms[exponent] = terms.get(exponent, 0) + coeff
    poly = LaurentPoly(terms)
    return to_weight_class(poly) if as_class else poly


def weights_of(entries: Iterable[tuple]) -> WeightClass:
    """WeightClass from (weight, multiplicity) pairs with short weights zero padded."""
    weights = {}
    for weight, mult in entries:
        key = tuple(weight) + (0,) * (NVARS - len(tuple(weight)))
        weights[key] = weights.get(key, 0) + mult
    return WeightClass(weights)
