"""CY4Vertex pole cancellation sign search

The signed sum of fixed point contributions of one (n, m) coefficient
must be regular at t = 1. Along a cocharacter t_i = u^(a_i) with
u^(1/2) = 1 + h and y = z^2 for a random z in GF(p), each contribution
is a truncated Laurent series in h; the polar coefficients of
sum s_P c_P, s_P = 1 - 2 b_P, give linear equations in the b_P.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from itertools import product
from typing import Iterable
import math
import random

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from cy4vertex import settings
from cy4vertex.errors import NonGenericCocharacter, SearchBudgetExhausted
from cy4vertex.exact_algebra import MonomialFraction
from cy4vertex.settings import MODULUS


#####################################################################
# Constants

EXTRA_POINTS = 4

_FIELD = GF(MODULUS)


#####################################################################
# Truncated power series modulo p

def _mul(a: list, b: list, length: int) -> list:
    result = [0] * length
    for i, x in enumerate(a[:length]):
        if not x:
            continue
        for j, y in enumerate(b[:length - i]):
            result[i + j] = (result[i + j] + x * y) % MODULUS
    return result


def _inverse(a: list, length: int) -> list:
    """1 / a for a unit series a."""
    if not a[0] % MODULUS:
        raise ZeroDivisionError("Series is not a unit")
    head = pow(a[0], -1, MODULUS)
    result = [head] + [0] * (length - 1)
    for k in range(1, length):
        total = sum(a[j] * result[k - j] for j in range(1, min(k, len(a) - 1) + 1))
        result[k] = -total * head % MODULUS
    return result


def _power(a: list, e: int, length: int) -> list:
    if e < 0:
        a, e = _inverse(a, length), -e
    result = [1] + [0] * (length - 1)
    while e:
        if e & 1:
            result = _mul(result, a, length)
        a = _mul(a, a, length)
        e >>= 1
    return result


def binomial_series(k: int, length: int) -> list:
    """(1 + h)^k modulo p through h^(length - 1)."""
    result = [1] + [0] * (length - 1)
    for r in range(1, length):
        result[r] = result[r - 1] * ((k - r + 1) % MODULUS) % MODULUS * pow(r, -1, MODULUS) % MODULUS
    return result


def _coeff(value) -> int:
    if isinstance(value, int):
        return value % MODULUS
    return value.numerator * pow(value.denominator, -1, MODULUS) % MODULUS


#####################################################################
# Expansion

def pole_order(f: MonomialFraction, cocharacter: tuple) -> int:
    """Upper bound for the order of the pole at u = 1."""
    order = 0
    for w, e in f.factors.items():
        if w[4]:
            continue
        if not sum(a * x for a, x in zip(cocharacter, w[:4])):
            raise NonGenericCocharacter(f"Cocharacter {cocharacter} is not generic for weight {w}", weight=w)
        order -= e
    return max(order, 0)


def laurent_expansion(f: MonomialFraction, cocharacter: tuple, z: int, length: int) -> tuple:
    """(valuation, series) with f = h^valuation * series modulo h^length.

    Raises:
        NonGenericCocharacter: a y-free factor pairs to zero against the cocharacter.
        ZeroDivisionError: a y-dependent factor vanishes at this z.
    """
    def v_power(exponent: tuple) -> int:
        return sum(a * x for a, x in zip(cocharacter, exponent[:4]))

    series = [0] * length
    for exponent, coeff in f.numerator.items():
        term = binomial_series(v_power(exponent), length)
        scale = _coeff(coeff) * pow(z, exponent[4] % (MODULUS - 1), MODULUS) % MODULUS
        for i, x in enumerate(term):
            series[i] = (series[i] + scale * x) % MODULUS

    valuation = 0
    for w, e in f.factors.items():
        k = v_power(w)
        if w[4]:
            zw = pow(z, w[4] % (MODULUS - 1), MODULUS)
            factor = [(-zw * x) % MODULUS for x in binomial_series(k, length)]
            factor[0] = (factor[0] + 1) % MODULUS
        else:
            if not k:
                raise NonGenericCocharacter(f"Cocharacter {cocharacter} is not generic for weight {w}", weight=w)
            # (1 - (1 + h)^k) / h
            factor = [(-x) % MODULUS for x in binomial_series(k, length + 1)[1:]]
            valuation += e
        series = _mul(series, _power(factor, e, length), length)
    return valuation, series


def polar_parts(values: list, cocharacter: tuple, z: int, order: int) -> list:
    """Per value: coefficients of h^-1 .. h^-order."""
    result = []
    for f in values:
        if f.is_zero():
            result.append([0] * order)
            continue
        valuation, series = laurent_expansion(f, cocharacter, z, order + 1)
        polar = []
        for t in range(1, order + 1):
            index = -t - valuation
            polar.append(series[index] if 0 <= index < len(series) else 0)
        result.append(polar)
    return result


#####################################################################
# Operations

def _rows(values: list, fixed_sign: int, cocharacter: tuple, order: int, samples: int, rng: random.Random) -> list:
    rows = []
    while len(rows) < samples * order:
        z = rng.randrange(2, MODULUS - 1)
        try:
            polar = polar_parts(values, cocharacter, z, order)
        except ZeroDivisionError:
            continue
        for t in range(order):
            rhs = -(fixed_sign * polar[0][t] + sum(p[t] for p in polar[1:]))
            rows.append([(-2 * p[t]) % MODULUS for p in polar[1:]] + [rhs % MODULUS])
    return rows


def _satisfies(entries: list, bits: tuple) -> bool:
    for row in entries:
        if sum(c * b for c, b in zip(row[:-1], bits)) % MODULUS != row[-1] % MODULUS:
            return False
    return True


def cancelling_signs(values: list, preferred: Iterable[int], cocharacter: tuple, budget: int = None,
                     rng: random.Random = None) -> list:
    """Sign vectors making sum s_i values_i regular at t = 1, preferred first.

    The first sign is fixed to preferred[0]. An empty list means no
    assignment cancels the poles.

    Raises:
        NonGenericCocharacter: the cocharacter is not generic for some factor.
        SearchBudgetExhausted: too many free signs.
    """
    preferred = tuple(preferred)
    budget = budget or settings.CY4VERTEX_SEARCH_BUDGET
    rng = rng or random.Random(settings.CY4VERTEX_SEED)
    order = max((pole_order(f, cocharacter) for f in values), default=0)
    n = len(values) - 1
    if not order:
        return [preferred]
    samples = max(1, math.ceil((n + EXTRA_POINTS) / order))
    rows = _rows(values, preferred[0], cocharacter, order, samples, rng)
    if not n:
        return [preferred] if all(not row[-1] for row in rows) else []

    matrix = DomainMatrix([[_FIELD(v) for v in row] for row in rows], (len(rows), n + 1), _FIELD)
    reduced, pivots = matrix.rref()
    entries = [[int(x) % MODULUS for x in row] for row in reduced.to_Matrix().tolist()]
    if n in pivots:
        return []
    wanted = tuple((1 - s) // 2 for s in preferred[1:])
    if _satisfies(entries, wanted):
        return [preferred]

    free = [c for c in range(n) if c not in pivots]
    if 2 ** len(free) > budget:
        raise SearchBudgetExhausted("sign search budget exhausted", free=len(free), budget=budget)
    solutions = []
    for assignment in product((0, 1), repeat=len(free)):
        beta = dict(zip(free, assignment))
        for r, c in enumerate(pivots):
            value = (entries[r][n] - sum(entries[r][f] * beta[f] for f in free)) % MODULUS
            if value not in (0, 1):
                break
            beta[c] = value
        else:
            solutions.append((preferred[0],) + tuple(1 - 2 * beta[c] for c in range(n)))
    settings.log(f"pole cancellation: {n} unknowns, {len(free)} free, {len(solutions)} solutions")
    return solutions

