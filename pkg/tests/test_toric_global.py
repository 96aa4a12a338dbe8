from __future__ import annotations

from fractions import Fraction

import pytest

from cy4vertex.errors import InputError, UnsupportedGeometry
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, bracket_eval, weights_of
from cy4vertex.toric_global import (
    GlobalClasses,
    ToricGeometry,
    build_geometry,
    c4,
    cancelling_signs,
    count_by_class,
    dimensional_reduction_check,
    enumerate_global,
    evaluate_contributions,
    global_series,
    local_p2,
    nested_pt1_formula,
    nested_pt1_series,
    support_signs,
)
from cy4vertex.vertex_series import magnificent_four
from cy4vertex.vertex_series.limits import Y_BRACKET


COCHARACTER = (1, 7, -3, -5)


def _y(n: int) -> MonomialFraction:
    return bracket_eval(weights_of([((0, 0, 0, 0, n), 1)]))


def _pole() -> MonomialFraction:
    # 1 / (1 - t1 t2^-1)
    return MonomialFraction(LaurentPoly.constant(1), {(2, -2, 0, 0, 0): -1})


def _y_poly(terms: dict) -> MonomialFraction:
    """Laurent polynomial in y from doubled exponents."""
    return MonomialFraction(LaurentPoly({(0, 0, 0, 0, e): c for e, c in terms.items()}))


def _sym(k: int) -> MonomialFraction:
    # y^(k/2) + y^(-k/2)
    return _y_poly({k: 1, -k: 1})


#####################################################################
# Geometry


def test_local_p2_geometry():
    g = build_geometry("local-p2:a=2")
    assert (len(g.charts), len(g.edges), len(g.faces)) == (3, 3, 1)
    for edge in g.edges:
        assert sorted(m for _, m in edge.normal) == [-2, -1, 1]
    assert g.is_local_surface()


def test_c4_geometry():
    g = build_geometry("c4")
    assert (len(g.charts), len(g.edges), len(g.faces)) == (1, 0, 0)
    assert g.fibre is None


def test_kY_c3_has_fibre():
    assert build_geometry("kY:c3").fibre == 3


def test_edge_entry_violating_cy_condition():
    charts = local_p2(2).charts
    with pytest.raises(InputError) as err:
        ToricGeometry("bad", charts, 3, explicit_edges=[{"chart": 0, "axis": 1, "normal": [1, 0, -2]}])
    assert err.value.details["problems"]


def test_chart_weights_must_add_up():
    with pytest.raises(InputError):
        ToricGeometry("bad", [((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 1, 1))])


def test_unknown_geometry():
    with pytest.raises(UnsupportedGeometry):
        build_geometry("quintic")


def test_bad_builtin_parameter():
    with pytest.raises(InputError):
        build_geometry("local-p2:b=2")


@pytest.mark.parametrize("spec, square", [
    ("local-p2:a=2", 1),
    ("local-p2:a=1", 1),
    ("local-p1xp1:a=1,b=1", 2),
])
def test_surface_square(spec, square):
    assert build_geometry(spec).surface_square() == square


def test_geometry_file(tmp_path):
    path = tmp_path / "affine.yaml"
    path.write_text("name: affine\ncharts:\n  - [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]\nfibre: 4\n")
    g = build_geometry(str(path))
    assert g.name == "affine"
    assert g.fibre == 3
    assert not g.edges


#####################################################################
# Enumeration


def test_c4_dt_points():
    points = enumerate_global(c4(), "dt", GlobalClasses.of(0, (0, 0), (0, 3)))
    assert len(points) == 16
    assert sorted(count_by_class(points).items()) == [((0, 0), 1), ((1, 0), 1), ((2, 0), 4), ((3, 0), 10)]


def test_empty_classes():
    assert enumerate_global(local_p2(2), "pt0", GlobalClasses.of(1, (2, 1), (0, 3))) == []


def test_negative_degree():
    with pytest.raises(InputError):
        GlobalClasses.of(-1, (0, 1), (0, 1))


def test_unknown_kind():
    with pytest.raises(InputError):
        enumerate_global(c4(), "gw", GlobalClasses.of(0, (0, 0), (0, 1)))


@pytest.mark.parametrize("kind", ["dt", "pt0", "pt1"])
def test_reduced_surface_is_the_only_leading_point(kind):
    points = enumerate_global(local_p2(2), kind, GlobalClasses.of(1, (0, Fraction(3, 2)), (1, 1)))
    assert len(points) == 1
    assert points[0].n == 1
    assert points[0].m == Fraction(3, 2)


def test_local_p2_pt1_points_by_class():
    points = enumerate_global(local_p2(2), "pt1", GlobalClasses.of(1, (0, Fraction(5, 2)), (1, 3)))
    counts = count_by_class(points)
    assert counts[(1, 3)] == 1
    assert all(counts.get(key) for key in [(1, 5), (2, 5), (3, 5)])
    assert all(point.m <= Fraction(5, 2) for point in points)


def test_points_are_sorted_by_class():
    points = enumerate_global(c4(), "dt", GlobalClasses.of(0, (0, 0), (0, 3)))
    keys = [(p.n, p.key[1], p.ident) for p in points]
    assert keys == sorted(keys)


#####################################################################
# Signs and series


def test_support_signs_need_fibre():
    points = enumerate_global(c4(), "dt", GlobalClasses.of(0, (0, 0), (0, 1)))
    with pytest.raises(InputError):
        support_signs(c4(), points)


def test_cancelling_signs_opposite_poles():
    assert cancelling_signs([_pole(), _pole()], (1, 1), COCHARACTER) == [(1, -1)]


def test_cancelling_signs_without_poles():
    regular = MonomialFraction(LaurentPoly.constant(3))
    assert cancelling_signs([regular, regular], (1, 1), COCHARACTER) == [(1, 1)]


def test_cancelling_signs_without_solution():
    assert cancelling_signs([_pole(), _pole() * 2], (1, 1), COCHARACTER) == []


def test_kY_c3_reduces_to_magnificent_four():
    result = global_series(build_geometry("kY:c3"), "dt", GlobalClasses.of(0, (0, 0), (0, 1)), specialize=False)
    assert result.series.coefficient(1) == -magnificent_four(1).coefficient(1)


def test_local_p2_pt0_leading_term():
    result = global_series(local_p2(2), "pt0", GlobalClasses.of(1, (0, Fraction(3, 2)), (1, 1)))
    assert result.series.coefficient(1, 3) == Y_BRACKET
    (record,) = result.index()
    assert record["fixed_points"] == 1
    assert record["Q"] == "3/2"


def test_local_p2_pt0_contributions_with_embedded_curve():
    g = local_p2(2)
    points = enumerate_global(g, "pt0", GlobalClasses.of(1, (Fraction(5, 2), Fraction(5, 2)), (3, 3)))
    assert points
    values = evaluate_contributions(g, points)
    assert len(values) == len(points)
    assert not all(value.is_zero() for value in values)


def test_dimensional_reduction_report():
    g = build_geometry("kY:c3")
    points = enumerate_global(g, "dt", GlobalClasses.of(0, (0, 0), (0, 2)))
    report = dimensional_reduction_check(g, points)
    assert report["verified"]
    assert report["fixed_points"] == 6


#####################################################################
# Smooth surface closed form


@pytest.mark.parametrize("delta, n, expected", [
    (0, 1, _y(1)),
    (1, 1, _y(1) * 2),
    (1, 2, _y(2)),
    (1, 3, _y(3)),
    (2, 4, _y(4) * 2),
])
def test_nested_pt1_formula(delta, n, expected):
    assert nested_pt1_formula(delta, n) == expected


def test_nested_pt1_formula_vanishes_past_chi():
    assert nested_pt1_formula(1, 4).is_zero()


def test_nested_pt1_formula_needs_points():
    with pytest.raises(InputError):
        nested_pt1_formula(1, 0)


def test_nested_pt1_series_keys():
    assert nested_pt1_series(1, 3).keys() == [(1, 5), (2, 5), (3, 5)]


#####################################################################
# Local P2 series


@pytest.mark.slow
def test_local_p2_pt1_degree_one():
    result = global_series(local_p2(2), "pt1", GlobalClasses.of(1, (0, Fraction(5, 2)), (1, 3)), signs="search")
    assert result.series.coefficient(1, 3) == Y_BRACKET
    assert result.series.coefficient(1, 5) == Y_BRACKET * 2
    assert result.series.coefficient(2, 5) == _y(2)
    assert result.series.coefficient(3, 5) == _y(3)
    for n in (1, 2, 3):
        assert result.series.coefficient(n, 5) == nested_pt1_formula(1, n)


@pytest.mark.slow
def test_local_p2_pt0_degree_one():
    result = global_series(local_p2(2), "pt0", GlobalClasses.of(1, (0, Fraction(7, 2)), (1, 5)), signs="search")
    expected = {
        (1, 3): _y_poly({0: 1}),
        (3, 5): _y_poly({0: 1}),
        (4, 5): _sym(3),
        (5, 5): _sym(4),
    }
    for (n, doubled_m), value in expected.items():
        assert result.series.coefficient(n, doubled_m) == Y_BRACKET * value
    assert result.series.coefficient(4, 7).is_zero()
    assert result.series.coefficient(5, 7).is_zero()
    assert result.counts()[(5, 7)] == 15


@pytest.mark.slow
def test_local_p2_pt1_degree_two_leading_block():
    result = global_series(local_p2(2), "pt1", GlobalClasses.of(2, (0, 5), (4, 7)), signs="search")
    expected = {
        (4, 8): _y_poly({0: 1}),
        (4, 10): _y_poly({0: 4}),
        (5, 10): _sym(1) * 2,
        (6, 10): _sym(2) * 2,
        (7, 10): _sym(1) * _y_poly({2: 2, 0: 1, -2: 2}) * 2,
    }
    for (n, doubled_m), value in expected.items():
        assert result.series.coefficient(n, doubled_m) == Y_BRACKET ** 4 * value


@pytest.mark.slow
def test_local_p2_pt1_degree_two_q9_q6():
    result = global_series(local_p2(2), "pt1", GlobalClasses.of(2, (6, 6), (9, 9)), signs="search")
    assert result.counts()[(9, 12)] == 48
    expected = _sym(1) * _sym(2) * _y_poly({2: 5, 0: 1, -2: 5}) * 2
    assert result.series.coefficient(9, 12) == Y_BRACKET ** 4 * expected
