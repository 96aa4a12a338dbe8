from __future__ import annotations

import pytest

from cy4vertex.errors import FaceGluingError, InputError, PositiveFixedTerm
from cy4vertex.exact_algebra import LaurentPoly, cy_eliminate, to_weight_class
from cy4vertex.local_terms import (
    ChartCharacter,
    EdgeCharacter,
    FaceCharacter,
    dimensional_reduction_check,
    edge_polynomial,
    edge_tau,
    face_polynomial,
    face_tau,
    halving_check,
    rank_check,
    taylor_oracle,
    threefold_oracle,
    vertex_polynomial,
)
from cy4vertex.local_terms.chart import check_fixed
from cy4vertex.partitions import FinitePartition, ModuleDecomposition, SolidPartition, enumerate_solid_partitions, solid_from_text


def _poly(weights: dict) -> LaurentPoly:
    return LaurentPoly.from_weights(weights)


def _point() -> ChartCharacter:
    return ChartCharacter.from_solid(SolidPartition(None, [(0, 0, 0, 0)]))


def _finite_partitions(max_size: int = 3) -> list:
    result = []
    for size, partitions in sorted(enumerate_solid_partitions(None, max_size).items()):
        if size:
            result.extend(partitions)
    return result


def _finite_charts(max_size: int = 3) -> list:
    return [ChartCharacter.from_solid(pi) for pi in _finite_partitions(max_size)]


def _fibre_pair() -> ChartCharacter:
    return ChartCharacter.from_solid(SolidPartition(None, [(0, 0, 0, 0), (0, 0, 0, 1)]))


# local P1 x P1 times C, vertices indexed by (s1, s2) in {0, 1}^2
def _p1xp1_charts() -> list:
    charts = []
    for s1 in (0, 1):
        for s2 in (0, 1):
            charts.append((
                ((-1) ** s1, 0, 0, 0),
                (0, (-1) ** s2, 0, 0),
                (2 * s1, 2 * s2, 1, 0),
                (0, 0, 0, 1),
            ))
    return charts


#####################################################################
# Vertex terms

def test_point_vertex():
    expected = _poly({
        (1, 0, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 1, 0): 1, (0, 0, 0, 1): 1,
        (-1, 0, 0, 0): 1, (0, -1, 0, 0): 1, (0, 0, -1, 0): 1, (0, 0, 0, -1): 1,
        (1, 1, 0, 0): -1, (1, 0, 1, 0): -1, (1, 0, 0, 1): -1,
        (0, 1, 1, 0): -1, (0, 1, 0, 1): -1, (0, 0, 1, 1): -1,
    })
    assert cy_eliminate(vertex_polynomial(_point())) == cy_eliminate(expected)


def test_point_halved_vertex():
    expected = _poly({
        (-1, -1, -1, 0): 1,
        (0, -1, -1, 0): -1, (-1, 0, -1, 0): -1, (-1, -1, 0, 0): -1,
        (0, 0, -1, 0): 1, (0, -1, 0, 0): 1, (-1, 0, 0, 0): 1,
    })
    assert vertex_polynomial(_point(), "halved") == expected


def test_plane_vertex_vanishes():
    chart = ChartCharacter.from_solid(solid_from_text("12:1"))
    assert vertex_polynomial(chart).is_zero()
    assert vertex_polynomial(chart, "halved").is_zero()


def test_point_twisted_vertex_y_blocks():
    value = vertex_polynomial(_point(), "tilde") - vertex_polynomial(_point())
    y = LaurentPoly.variable(4)
    assert value == -y - y ** -1


def test_halved_vertex_needs_module_off_fibre():
    chart = ChartCharacter.from_solid(solid_from_text("34:1"))
    with pytest.raises(InputError):
        vertex_polynomial(chart, "halved")


def test_unknown_flavor():
    with pytest.raises(InputError):
        vertex_polynomial(_point(), "quarter")


@pytest.mark.parametrize("chart", _finite_charts() + [ChartCharacter.from_solid(solid_from_text("12:1"))])
def test_halving(chart):
    assert halving_check(chart)


@pytest.mark.parametrize("flavor", ["plain", "tilde", "halved", "halved_tilde"])
def test_boxes_along_fibre(flavor):
    vertex_polynomial(_fibre_pair(), flavor)


@pytest.mark.parametrize("flavor", ["plain", "halved"])
def test_fixed_weights_along_fibre_cancel(flavor):
    assert to_weight_class(vertex_polynomial(_fibre_pair(), flavor)).fixed_part().rank <= 0


def test_fixed_weights_cancel_modulo_calabi_yau_relation():
    check_fixed(_poly({(0, 0, 0, 0): 1, (-1, -1, -1, -1): -1, (1, 0, 0, 0): 1}), "edge", allow_negative=False)


def test_positive_fixed_weight():
    with pytest.raises(PositiveFixedTerm):
        check_fixed(_poly({(0, 0, 0, 0): 1, (1, 1, 1, 1): 1, (-1, -1, -1, -1): -1}), "vertex")


def test_negative_fixed_weight_on_edge():
    check_fixed(_poly({(1, 1, 1, 1): -1}), "vertex")
    with pytest.raises(PositiveFixedTerm):
        check_fixed(_poly({(1, 1, 1, 1): -1}), "edge", allow_negative=False)


#####################################################################
# Oracles

@pytest.mark.parametrize("pi", _finite_partitions())
def test_taylor_matches_vertex(pi):
    assert taylor_oracle(pi.addable()) == vertex_polynomial(ChartCharacter.from_solid(pi))


def test_taylor_leg_block():
    expected = _poly({
        (0, 0, -1, -1): 1, (0, -1, 0, -1): 1, (0, -1, -1, 0): 1,
        (0, -1, 0, 0): -1, (0, 0, -1, 0): -1, (0, 0, 0, -1): -1,
    })
    generators = [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    assert taylor_oracle(generators, inverted=(0,)) == expected


def test_taylor_rejects_many_generators():
    with pytest.raises(InputError):
        taylor_oracle([(k, 9 - k, 0, 0) for k in range(10)])


def test_threefold_point():
    point = ModuleDecomposition((0, 1, 2), {frozenset(): LaurentPoly.constant(1)})
    expected = _poly({
        (-1, 0, 0): 1, (0, -1, 0): 1, (0, 0, -1): 1,
        (-1, -1, 0): -1, (-1, 0, -1): -1, (0, -1, -1): -1,
    })
    assert threefold_oracle(point) == expected


@pytest.mark.parametrize("chart", _finite_charts() + [ChartCharacter.from_solid(solid_from_text("12:1"))])
def test_rank_at_t_equal_one(chart):
    assert rank_check(chart) == 0


@pytest.mark.parametrize("chart", _finite_charts())
def test_dimensional_reduction(chart):
    assert dimensional_reduction_check(chart)


def test_dimensional_reduction_of_leg():
    assert dimensional_reduction_check(ChartCharacter.from_solid(solid_from_text("mu1=1")))


def test_dimensional_reduction_off_divisor():
    chart = _fibre_pair()
    assert not chart.inside_divisor()
    assert dimensional_reduction_check(chart)


#####################################################################
# Edge terms

def _leg_edge(normal=None, insertion_beta=None) -> EdgeCharacter:
    chart = ChartCharacter.from_solid(solid_from_text("mu1=1"))
    return EdgeCharacter(chart, 0, normal or {1: 0, 2: 0, 3: -2}, insertion_beta)


def test_leg_edge():
    expected = _poly({
        (-1, 0, -1, -1): 1, (-1, -1, 0, -1): 1, (-1, 0, 0, -1): -1,
        (0, -1, -1, 0): -1, (0, -1, 0, 0): 1, (0, 0, -1, 0): 1,
    })
    assert edge_polynomial(_leg_edge()) == expected


def test_leg_halved_edge():
    expected = _poly({(0, -1, -1, 0): -1, (0, -1, 0, 0): 1, (0, 0, -1, 0): 1})
    assert edge_polynomial(_leg_edge(), "halved") == expected


def test_edge_tautological_character():
    expected = _poly({(0, 0, 0, 0): 1, (1, 0, 0, 0): 1, (2, 0, 0, 0): 1})
    assert edge_tau(_leg_edge(insertion_beta=(2, 0, 0, 0))) == expected


def test_edge_degree_condition():
    with pytest.raises(InputError):
        _leg_edge(normal={1: 0, 2: 0, 3: -1})


#####################################################################
# Face terms

def test_face_of_local_p1xp1():
    face = FaceCharacter(FinitePartition([1]), _p1xp1_charts())
    expected = _poly({(-1, -1, -1, 0): 1, (0, 0, 0, -1): 1})
    assert face_polynomial(face) == expected
    assert face_polynomial(face, "halved") == _poly({(-1, -1, -1, 0): 1})


def test_face_tautological_character_is_euler_characteristic():
    face = FaceCharacter(FinitePartition([1]), _p1xp1_charts())
    assert face_tau(face) == LaurentPoly.constant(1)


def test_face_rejects_non_unimodular_chart():
    charts = _p1xp1_charts()
    charts[0] = ((2, 0, 0, 0),) + charts[0][1:]
    with pytest.raises(FaceGluingError):
        FaceCharacter(FinitePartition([1]), charts)
