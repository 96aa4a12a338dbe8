from __future__ import annotations

from fractions import Fraction
import random

import pytest
import sympy

from cy4vertex.errors import DegenerateSubstitution, InputError, NonGenericCocharacter, NotLaurentPolynomial, PoleAtFixedWeight, SpecializationPole
from cy4vertex.exact_algebra import (
    ONE,
    T1,
    T2,
    Y,
    LaurentPoly,
    MonomialFraction,
    SqrtOutcome,
    WeightClass,
    adams,
    bracket_eval,
    cohomological_leading,
    cy_normalize,
    cy_reduce,
    dump_terms,
    expand_to_laurent,
    load_terms,
    lp_arith,
    probably_equal,
    specialize_cocharacter,
    sqrt_split,
    substitute_monomial,
    to_weight_class,
    weights_of,
)
from cy4vertex.exact_algebra.fraction import binomial_power
from cy4vertex.exact_algebra.specialize import S1, S2


def _rng() -> random.Random:
    return random.Random(20230101)


def _random_weight(rng: random.Random) -> tuple:
    while True:
        weight = tuple(rng.randint(-1, 1) for _ in range(5))
        if any(cy_reduce(weight)):
            return weight


def _random_poly(rng: random.Random, terms: int = 4) -> LaurentPoly:
    return LaurentPoly.from_weights({
        tuple(rng.randint(-2, 2) for _ in range(5)): rng.randint(-3, 3) for _ in range(terms)
    })


def _random_class(rng: random.Random, size: int = 4) -> WeightClass:
    weights = {}
    while len(weights) < size:
        weight = _random_weight(rng)
        weights[weight] = rng.choice((-2, -1, 1, 2))
    return cy_normalize(WeightClass(weights))


#####################################################################
# LaurentPoly

def test_difference_of_squares():
    assert lp_arith(T1 + 1, T1 - 1, "mul") == T1 * T1 - 1


def test_additive_identity():
    p = T1 * Y - 3
    assert lp_arith(p, LaurentPoly(), "add") == p


def test_half_exponents_add_in_doubled_lattice():
    root = LaurentPoly.monomial((1, 0, 0, 0, 0))
    assert root * root == T1


def test_substitution_rewrites_variable():
    # t2 -> t2 t1^-m with m = -1
    assert substitute_monomial(T2, {"t2": (1, 1, 0, 0)}) == T1 * T2


def test_substitution_transforms_denominator_factor():
    f = MonomialFraction.geometric((0, 1))
    assert substitute_monomial(f, {"t2": (1, 1)}) == MonomialFraction.geometric((1, 1))


def test_identity_substitution():
    f = MonomialFraction.geometric((1, -1, 0, 0, 1), T1 + Y)
    assert substitute_monomial(f, {}) == f


def test_degenerate_substitution():
    with pytest.raises(DegenerateSubstitution):
        substitute_monomial(MonomialFraction.geometric((0, 1)), {"t2": (0, 0, 0, 0)})


def test_numerator_factor_sent_to_one_vanishes():
    f = MonomialFraction(ONE, {(0, 2, 0, 0, 0): 1})
    assert substitute_monomial(f, {"t2": (0, 0, 0, 0)}).is_zero()


#####################################################################
# Exact division

def test_geometric_factor_divides():
    assert expand_to_laurent(MonomialFraction(1 - T1 * T1, {(2, 0, 0, 0, 0): -1})) == 1 + T1


def test_full_cancellation():
    f = MonomialFraction((1 - T1) * (1 - T2), {(2, 0, 0, 0, 0): -1, (0, 2, 0, 0, 0): -1})
    assert expand_to_laurent(f) == ONE


def test_negative_weight_denominator():
    f = MonomialFraction(1 - T1 ** -2, {(-2, 0, 0, 0, 0): -1})
    assert expand_to_laurent(f) == 1 + T1 ** -1


def test_non_divisible_numerator():
    with pytest.raises(NotLaurentPolynomial):
        expand_to_laurent(MonomialFraction(1 - T1 * T2, {(2, 0, 0, 0, 0): -1}))


def test_division_round_trip_on_random_fractions():
    rng = _rng()
    for _ in range(40):
        p = _random_poly(rng)
        factors = {}
        for _ in range(rng.randint(1, 3)):
            weight = tuple(2 * x for x in _random_weight(rng))
            factors[weight] = factors.get(weight, 0) + rng.randint(1, 2)
        numerator = p
        for weight, e in factors.items():
            numerator = numerator * binomial_power(weight, e)
        f = MonomialFraction(numerator, {w: -e for w, e in factors.items()})
        assert expand_to_laurent(f) == p


def test_sum_pulls_out_common_factors():
    total = MonomialFraction.geometric((1, 0)) + MonomialFraction.geometric((-1, 0))
    assert expand_to_laurent(total) == ONE


#####################################################################
# Weight classes

def test_to_weight_class_reads_coefficients():
    c = to_weight_class(T1 * T2 - LaurentPoly.from_weights({(0, 0, -1): 1}))
    assert c.weights == {(1, 1, 0, 0, 0): 1, (0, 0, -1, 0, 0): -1}


def test_to_weight_class_of_zero_is_empty():
    c = to_weight_class(LaurentPoly())
    assert c.rank == 0 and len(c) == 0


def test_to_weight_class_multiplicity():
    assert to_weight_class(LaurentPoly.from_weights({(0, 0, 0, 1): 2})).weights == {(0, 0, 0, 1, 0): 2}


@pytest.mark.parametrize("poly", [
    LaurentPoly.from_weights({(1,): Fraction(1, 2)}),
    LaurentPoly.monomial((1, 0, 0, 0, 0)),
])
def test_to_weight_class_rejects_non_integral(poly):
    with pytest.raises(InputError):
        to_weight_class(poly)


@pytest.mark.parametrize("entries, expected", [
    ([((1, 1, 1, 1), 1)], {(0, 0, 0, 0, 0): 1}),
    ([((2, 1, 1, 1), 1)], {(1, 0, 0, 0, 0): 1}),
    ([((1, 0, 0, 0), 1), ((0, -1, -1, -1), -1)], {}),
])
def test_cy_normalize(entries, expected):
    assert cy_normalize(weights_of(entries)).weights == expected


def test_cy_normalize_is_idempotent_and_additive():
    rng = _rng()
    for _ in range(20):
        a = WeightClass({_random_weight(rng): 1, _random_weight(rng): -2})
        b = WeightClass({_random_weight(rng): 3})
        assert cy_normalize(cy_normalize(a)) == cy_normalize(a)
        assert cy_normalize(a + b) == cy_normalize(a) + cy_normalize(b)


def test_conjugate_is_an_involution():
    c = _random_class(_rng())
    assert c.conjugate().conjugate() == c


#####################################################################
# Brackets and square roots

def test_bracket_of_single_weight():
    half = LaurentPoly.monomial((1, 1, 0, 0, 0))
    expected = half - half.dual()
    assert bracket_eval(weights_of([((1, 1), 1)])) == MonomialFraction(expected)


def test_bracket_of_empty_class_is_one():
    assert bracket_eval(WeightClass()) == MonomialFraction.one()


def test_bracket_of_trivial_weight_vanishes():
    assert bracket_eval(weights_of([((0, 0, 0, 0), 1)])).is_zero()


def test_bracket_pole_at_trivial_weight():
    with pytest.raises(PoleAtFixedWeight):
        bracket_eval(weights_of([((1, 1, 1, 1), -1)]))


def test_bracket_sums_calabi_yau_equivalent_trivial_weights():
    c = weights_of([((0, 0, 0, 0), 1), ((-1, -1, -1, -1), -1), ((1, 0), 1)])
    assert bracket_eval(c) == bracket_eval(weights_of([((1, 0), 1)]))


def test_bracket_trivial_weights_with_positive_total_vanish():
    assert bracket_eval(weights_of([((0, 0, 0, 0), 2), ((1, 1, 1, 1), -1), ((1, 0), 1)])).is_zero()


def test_bracket_trivial_weights_with_negative_total():
    with pytest.raises(PoleAtFixedWeight):
        bracket_eval(weights_of([((0, 0, 0, 0), 1), ((2, 2, 2, 2), -2)]))


def test_bracket_merges_calabi_yau_equivalent_weights():
    assert bracket_eval(weights_of([((1, 0), 1), ((2, 1, 1, 1), -1)])) == MonomialFraction.one()


def test_fixed_part_sums_calabi_yau_classes():
    c = weights_of([((0, 0, 0, 0), 1), ((-1, -1, -1, -1), -1), ((1, 1, 1, 1), -1), ((1, 0), 3)])
    assert c.fixed_part() == weights_of([((0, 0, 0, 0), -1)])
    assert not weights_of([((0, 0, 0, 0), 1), ((-1, -1, -1, -1), -1)]).fixed_part()


def test_bracket_of_conjugate():
    rng = _rng()
    for _ in range(20):
        c = _random_class(rng)
        sign = -1 if c.rank % 2 else 1
        assert bracket_eval(cy_normalize(c.conjugate())) == bracket_eval(c) * sign


def test_sqrt_split_one_pair():
    half = sqrt_split(weights_of([((1, 0), 1), ((-1, 0), 1)]))
    assert half.weights == {(1, 0, 0, 0, 0): 1}


def test_sqrt_split_zero_weight():
    assert sqrt_split(weights_of([((0, 0), 2)])) is SqrtOutcome.ZERO


def test_sqrt_split_unmatched_weight():
    assert sqrt_split(weights_of([((1, 0), 1)])) is SqrtOutcome.DEGENERATE


def test_sqrt_split_odd_zero_weight():
    assert sqrt_split(weights_of([((0, 0), 1)])) is SqrtOutcome.DEGENERATE


def test_sqrt_split_squares_back():
    rng = _rng()
    for _ in range(20):
        d = _random_class(rng, size=3)
        c = cy_normalize(d + d.conjugate())
        half = sqrt_split(c)
        assert isinstance(half, WeightClass)
        sign = -1 if (c.rank // 2) % 2 else 1
        assert bracket_eval(half) ** 2 == bracket_eval(c) * sign


#####################################################################
# Limits

def test_cohomological_limit_of_bracket_ratio():
    f = bracket_eval(weights_of([((1, 0), 1), ((0, 1), -1)]))
    assert sympy.simplify(cohomological_leading(f) - S1 / S2) == 0


def test_cocharacter_limit_of_bracket_ratio():
    f = bracket_eval(weights_of([((1, 0), 1), ((0, 1), -1)]))
    assert specialize_cocharacter(f, (1, 2, -1, -2)) == MonomialFraction.one() * Fraction(1, 2)


def test_cocharacter_limit_of_self_ratio():
    b = bracket_eval(weights_of([((1, 1), 1)]))
    assert specialize_cocharacter(b / b, (1, 2, -1, -2)) == MonomialFraction.one()


def test_cocharacter_limit_leaves_y_untouched():
    y_bracket = bracket_eval(weights_of([((0, 0, 0, 0, 1), 1)]))
    f = bracket_eval(weights_of([((0, 0, 0, 0, 1), 1), ((1, 0), 1), ((0, 1), -1)]))
    assert specialize_cocharacter(f, (1, 2, -1, -2)) == y_bracket * Fraction(1, 2)


def test_cocharacter_limit_cancels_poles_in_sums():
    total = MonomialFraction.geometric((1, 0)) + MonomialFraction.geometric((-1, 0))
    assert specialize_cocharacter(total, (1, 2, -1, -2)) == MonomialFraction.one()


def test_cocharacter_limit_non_generic():
    f = bracket_eval(weights_of([((1, 0), 1)]))
    with pytest.raises(NonGenericCocharacter):
        specialize_cocharacter(f, (0, 1, 1, -2))


def test_cocharacter_limit_surviving_pole():
    f = bracket_eval(weights_of([((1, 0), -1)]))
    with pytest.raises(SpecializationPole):
        specialize_cocharacter(f, (1, 2, -1, -2))


#####################################################################
# Evaluation, Adams operations, serialization

def test_random_evaluation_agrees_with_structural_equality():
    rng = _rng()
    f = MonomialFraction(1 - T1 * T1, {(2, 0, 0, 0, 0): -1})
    assert probably_equal(f, 1 + T1, rng)
    assert not probably_equal(f, 1 - T1, rng)


def test_adams_operation():
    assert adams(T1 + Y, 2) == T1 ** 2 + Y ** 2


def test_dump_and_load_terms():
    p = T1 + Y * Fraction(1, 2)
    text = dump_terms(p)
    assert text == "1/2  0 0 0 0 2\n1  2 0 0 0 0\n"
    assert load_terms(text) == p
