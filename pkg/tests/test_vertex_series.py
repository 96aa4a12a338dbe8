from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, T1, Y, bracket_eval, weights_of
from cy4vertex.exact_algebra.specialize import S1, S2, S3, M
from cy4vertex.partitions import SolidPartition, enumerate_solid_partitions, mu_from_text, solid_from_text
from cy4vertex.vertex_series import (
    QSeries,
    SignAssignment,
    SignSearch,
    case_spec,
    check_correspondence,
    cohomological_limit,
    dt_fixed_points,
    dt_vertex_series,
    fixed_point_ident,
    magnificent_four,
    palindromy_check,
    plethystic_exp,
    pt0_fixed_points,
    pt0_vertex_series,
    sign_from_formula,
    verify_correspondence,
    vertex_series,
)


def _bracket(*entries) -> MonomialFraction:
    return bracket_eval(weights_of(entries))


def _up_to_sign(value, expected) -> bool:
    return value == expected or value == -expected


def _y_poly(weights: dict) -> LaurentPoly:
    return LaurentPoly({(0, 0, 0, 0, e): c for e, c in weights.items()})


#####################################################################
# QSeries

def test_series_product_truncates():
    a = QSeries({0: MonomialFraction.one(), 1: MonomialFraction(T1)}, 3)
    b = QSeries({0: MonomialFraction.one(), 1: MonomialFraction(-T1)}, 3)
    product = a * b
    assert product.precision == 3
    assert product.coefficient(1).is_zero()
    assert product.coefficient(2) == MonomialFraction(-(T1 * T1))


def test_series_normalized_starts_with_one():
    series = QSeries({-1: MonomialFraction(T1 * 2), 0: MonomialFraction(T1 * T1)})
    normalized = series.normalized()
    assert normalized.leading() == ((0, 0), MonomialFraction.one())
    assert normalized.coefficient(1) == MonomialFraction(T1 * Fraction(1, 2))


def test_series_normalization_ignores_leading_sign():
    series = QSeries({0: MonomialFraction(T1), 2: MonomialFraction(Y)}, 4)
    assert series.normalized() == (-series).normalized()


def test_series_table_lists_precision():
    table = QSeries({0: MonomialFraction.one()}, 2).format_table()
    assert table.splitlines()[-1].split() == ["O", "q^2"]


#####################################################################
# Plethystic exponential

def test_geometric_plethysm():
    series = plethystic_exp(QSeries({1: MonomialFraction(T1)}, 3), 2)
    assert series == QSeries({0: MonomialFraction.one(), 1: MonomialFraction(T1), 2: MonomialFraction(T1 * T1)}, 3)


def test_plethysm_rejects_constant_term():
    with pytest.raises(InputError):
        plethystic_exp(QSeries({0: MonomialFraction(T1)}), 2)


def test_magnificent_four_order_zero():
    assert magnificent_four(0) == QSeries.one(1)


def test_magnificent_four_first_coefficient():
    b = _bracket(
        ((1, 1, 0, 0), 1), ((1, 0, 1, 0), 1), ((0, 1, 1, 0), 1), ((0, 0, 0, 0, 1), 1),
        ((1, 0, 0, 0), -1), ((0, 1, 0, 0), -1), ((0, 0, 1, 0), -1), ((0, 0, 0, 1), -1),
    )
    assert magnificent_four(1).coefficient(1) == -b


#####################################################################
# DT vertex

def test_empty_dt_vertex_order_zero():
    assert dt_vertex_series(None, 0) == QSeries.one(1)


def test_single_box_matches_magnificent_four():
    assert dt_vertex_series(None, 1).coefficient(1) == magnificent_four(1).coefficient(1)


def test_dt_vertex_matches_magnificent_four():
    assert dt_vertex_series(None, 2).agrees_with(magnificent_four(2))


@pytest.mark.slow
def test_dt_vertex_matches_magnificent_four_through_q4():
    assert dt_vertex_series(None, 4).agrees_with(magnificent_four(4))


def test_dt_vertex_starts_at_renormalized_volume():
    series = dt_vertex_series(mu_from_text("12:1 34:1"), 0, signs="positive")
    assert series.leading()[0] == (-1, 0)


def test_explicit_signs_must_cover_fixed_points():
    with pytest.raises(InputError):
        dt_vertex_series(None, 1, signs=SignAssignment({fixed_point_ident("dt", []): 1}))


#####################################################################
# PT0 vertex

def test_pt0_two_planes():
    series = pt0_vertex_series(mu_from_text("12:1 34:1"), 1)
    assert _up_to_sign(series.coefficient(-1), _bracket(((1, 0, 1, 0), 1), ((0, 1, 1, 0), 1), ((0, 0, 0, 0, 1), -1)))
    assert _up_to_sign(series.coefficient(0), _bracket(((1, 1, 0, 0), 1)))


def test_pt0_three_planes():
    series = pt0_vertex_series(mu_from_text("12:1+t4 13:1 34:1"), 1)
    expected = _bracket(((1, 0, 1, 0), 1), ((0, 1, 1, 0), 1), ((1, 2, 2, 0), 1), ((1, 1, 1, 0, 1), -1))
    assert _up_to_sign(series.coefficient(-1), expected)
    assert _up_to_sign(series.coefficient(0), _bracket(((1, 1, 0, 0), 1), ((0, 1, 1, 0), 1)))


def test_pt0_thickened_plane():
    series = pt0_vertex_series(mu_from_text("12:1+t3 34:1"), 2)
    expected = [
        _bracket(((1, 0, 1, 0), 1), ((0, 1, 1, 0), 1), ((1, 0, 2, 0), 1), ((0, 1, 2, 0), 1),
                 ((0, 0, 0, 0, 1), -1), ((0, 0, -1, 0, 1), -1)),
        _bracket(((1, 1, 0, 0), 1), ((1, 0, 1, 0), 1), ((0, 1, 1, 0), 1), ((0, 0, 2, 0), 1),
                 ((0, 0, 0, 0, 1), -1), ((0, 0, 1, 0), -1)),
        _bracket(((1, 1, 0, 0), 1), ((1, 1, -1, 0), 1)),
    ]
    for q, value in zip((-2, -1, 0), expected):
        assert _up_to_sign(series.coefficient(q), value)


def test_unknown_vertex_kind():
    with pytest.raises(InputError):
        vertex_series("pt2", "empty", 1)


#####################################################################
# Sign formulas

def test_sign_of_empty_partition():
    assert sign_from_formula(SolidPartition(), "zero_dim") == 1


def test_sign_of_single_box():
    assert sign_from_formula(SolidPartition(None, [(0, 0, 0, 0)]), "zero_dim") == -1


def test_sign_of_box_above_diagonal():
    assert sign_from_formula(SolidPartition(None, [(0, 0, 0, 0), (0, 0, 0, 1)]), "zero_dim") == -1


@pytest.mark.parametrize("pi", [pi for size in range(4) for pi in enumerate_solid_partitions(None, 3)[size]])
def test_two_dim_formula_extends_zero_dim(pi):
    assert sign_from_formula(pi, "two_dim") == sign_from_formula(pi, "zero_dim")


def test_zero_dim_formula_needs_finite_partition():
    with pytest.raises(InputError):
        sign_from_formula(solid_from_text("12:1"), "zero_dim")


def test_two_dim_formula_needs_support_off_fibre():
    with pytest.raises(InputError):
        sign_from_formula(solid_from_text("34:1"), "two_dim")


#####################################################################
# Correspondence

def test_correspondence_order_zero():
    assert verify_correspondence("12:1", 0).verified


def test_empty_correspondence_finds_single_box_sign():
    result = verify_correspondence(None, 2)
    assert result.verified
    assert result.signs.sign(fixed_point_ident("dt", [(0, 0, 0, 0)])) == -1


def test_flipped_sign_breaks_correspondence():
    signs = verify_correspondence(None, 2).signs
    result = check_correspondence(None, 2, signs.flipped(fixed_point_ident("dt", [(0, 0, 0, 0)])))
    assert not result.verified
    assert result.order == 1


def test_plane_correspondence_first_order():
    assert verify_correspondence("12:1", 2).verified


def test_unknown_case():
    with pytest.raises(InputError):
        case_spec("dtpt0-99")


@pytest.mark.slow
@pytest.mark.parametrize("case", ["dtpt0-1", "dtpt0-5", "dtpt0-11"])
def test_correspondence_cases(case):
    spec, order = case_spec(case)
    assert verify_correspondence(spec, order).verified


@pytest.mark.slow
def test_plane_correspondence_top_order_count():
    spec, order = case_spec("dtpt0-1")
    assert verify_correspondence(spec, order).counts[3]["DT"] == 19


@pytest.mark.slow
@pytest.mark.parametrize("case", ["dtpt0-1", "dtpt0-5", "dtpt0-11"])
def test_flipping_a_searched_sign_breaks_correspondence(case):
    spec, order = case_spec(case)
    signs = verify_correspondence(spec, order).signs
    mu, top = mu_from_text(spec), order - 1
    dt_points, pt_points = dt_fixed_points(mu, top), pt0_fixed_points(mu, top)
    search = SignSearch(dt_points, pt_points, magnificent_four(top), top)
    for point in dt_points + pt_points:
        if point.order == 0 or point.value.is_zero():
            continue
        failed, _ = search.check(signs.flipped(point.ident), "modular")
        assert failed == point.order


#####################################################################
# Limits and palindromy

def test_limit_of_constant_series():
    assert cohomological_limit(QSeries.one(), "tautological").coefficient(0) == 1


def test_limit_of_bracket_ratio():
    series = QSeries({0: MonomialFraction.one(), 1: _bracket(((1, 0, 0, 0), 1), ((0, 1, 0, 0), -1))})
    value = cohomological_limit(series, "tautological").coefficient(1)
    assert sympy.simplify(value - S1 / S2) == 0


def test_limit_of_two_planes():
    series = pt0_vertex_series(mu_from_text("12:1 34:1"), 1)
    value = cohomological_limit(series, "tautological").coefficient(1)
    expected = (S1 + S2) * M / ((S1 + S3) * (S2 + S3))
    assert sympy.simplify(value - expected) == 0 or sympy.simplify(value + expected) == 0


def test_unknown_limit_mode():
    with pytest.raises(InputError):
        cohomological_limit(QSeries.one(), "motivic")


def test_palindromic_after_bracket():
    coefficient = _bracket(((0, 0, 0, 0, 1), 1)) * _y_poly({2: 1, -2: 1})
    assert palindromy_check(coefficient, 1)


def test_single_y_is_not_palindromic():
    assert not palindromy_check(Y, 0)


def test_palindromic_coefficient_with_degree_bound():
    f = _y_poly({6: 7, 4: 12, 2: 15, 0: 16, -2: 15, -4: 12, -6: 7})
    assert palindromy_check(f, 0, vd=6)
    assert not palindromy_check(f, 0, vd=4)
    assert not palindromy_check(f + Y, 0)


def test_palindromy_rejects_torus_dependence():
    with pytest.raises(InputError):
        palindromy_check(T1, 0)
