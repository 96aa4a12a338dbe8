from __future__ import annotations

import pytest

from cy4vertex.errors import InconsistentAsymptotics, InputError, ModuliPresent
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction
from cy4vertex.partitions import (
    EMPTY,
    FinitePartition,
    SolidPartition,
    SurfaceSlice,
    cm_classify,
    compute_T0_OW,
    decompose_module,
    enumerate_solid_partitions,
    finite_partitions,
    format_partition_spec,
    gravity_closure,
    parse_partition_spec,
    pt0_enumerate,
    pt1_enumerate,
    quot_bound,
    renormalized_volume,
    solid_from_text,
)


def _lambdas(text: str) -> dict:
    return parse_partition_spec(text).lambdas


def _counts(levels: dict) -> list:
    return [len(levels[k]) for k in sorted(levels)]


#####################################################################
# Finite partitions

def test_partition_numbers():
    assert [len(finite_partitions(n)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]


def test_from_boxes_rejects_skew_shapes():
    with pytest.raises(InputError):
        FinitePartition.from_boxes([(0, 0), (1, 1)])


def test_transpose_of_a_column():
    assert FinitePartition([3]).transpose() == FinitePartition([1, 1, 1])


#####################################################################
# Solid partitions

def test_solid_partition_counts_without_asymptotics():
    assert _counts(enumerate_solid_partitions(None, 4)) == [1, 1, 4, 10, 26]


def test_finite_character_is_box_sum():
    for pi in enumerate_solid_partitions(None, 3)[3]:
        expected = LaurentPoly.from_weights({box: 1 for box in pi.boxes()})
        assert pi.character == MonomialFraction(expected)


def test_plane_character():
    pi = solid_from_text("12:1")
    expected = MonomialFraction.geometric((1, 0, 0, 0)) * MonomialFraction.geometric((0, 1, 0, 0))
    assert pi.character == expected


def test_two_planes_have_volume_minus_one():
    pi = solid_from_text("12:1 34:1")
    assert renormalized_volume(pi.decomposition) == -1
    assert pi.decomposition.w == LaurentPoly.constant(-1)


def test_unsupported_box_is_rejected():
    with pytest.raises(InputError):
        SolidPartition(None, [(0, 1, 0, 0)])


#####################################################################
# Surface analysis

@pytest.mark.parametrize("text,case", [
    ("12:1", "i"),
    ("12:1 34:1", "ii"),
    ("12:1+t4 13:1 34:1", "iii"),
    ("12:1 13:1 34:1", "iv"),
])
def test_cm_cases(text, case):
    result = cm_classify(_lambdas(text))
    assert result.case == case
    assert result.cohen_macaulay == (case in ("i", "iv"))


def test_embedded_point_is_torsion():
    t0 = compute_T0_OW(_lambdas("12:1+t4 13:1 34:1"))
    assert t0 == LaurentPoly.from_weights({(0, 0, 0, 1): 1})


def test_quot_bound_of_cube():
    assert quot_bound(_lambdas("12:1+t3 34:1+t1+t2+t1*t2")) == 8


def test_no_surface_is_rejected():
    with pytest.raises(InputError):
        cm_classify({})


#####################################################################
# PT0 configurations

def test_pt0_two_planes():
    mu = parse_partition_spec("12:1 34:1").mu
    assert _counts(pt0_enumerate(mu, 1)) == [1, 1]


def test_pt0_cube_counts():
    mu = parse_partition_spec("12:1+t3 34:1+t1+t2+t1*t2").mu
    assert _counts(pt0_enumerate(mu, 8)) == [1, 1, 3, 3, 4, 3, 3, 1, 1]


def test_pt0_without_surfaces_is_trivial():
    assert _counts(pt0_enumerate(parse_partition_spec("12:1").mu, 2)) == [1, 0]


#####################################################################
# PT1 configurations

def test_gravity_closure_of_thickened_plane_is_infinite():
    region = frozenset((i, j, 0, 0) for i in range(5) for j in range(5))
    closure, finite = gravity_closure(region, [(0, 0, 0, 0)], 3)
    assert not finite
    assert (3, 3, 0, 0) in closure


def test_gravity_closure_of_point():
    assert gravity_closure(frozenset({(0, 0, 0, 0)}), [(0, 0, 0, 0)], 3) == (frozenset({(0, 0, 0, 0)}), True)


@pytest.mark.parametrize("curve,nu", [
    ((1, 0), EMPTY),
    ((1, 1), EMPTY),
    ((1, 1), FinitePartition([1])),
    ((2, 1), FinitePartition([1, 1])),
])
def test_slice_character_matches_decomposition(curve, nu):
    piece = SurfaceSlice((0, 1), (0, 0), curve, nu)
    decomposition = decompose_module(lambda x: int(piece.contains(x)), -max(curve), 4)
    assert decomposition.reassemble() == piece.character()


def test_pt1_single_plane():
    configs = pt1_enumerate(_lambdas("12:1"), 1, {(0, 1): {(0, 0): (1, 0)}})
    assert [c.colength for c in configs] == [0, 1]


def test_pt1_intersecting_planes_carry_moduli():
    with pytest.raises(ModuliPresent):
        pt1_enumerate(_lambdas("12:1 13:1"), 1)


#####################################################################
# Text format

@pytest.mark.parametrize("text", [
    "12:1+t4 34:1",
    "12:1 mu3=1+t1 box=0,1,1,0",
    "empty",
])
def test_text_round_trip(text):
    assert format_partition_spec(parse_partition_spec(text)) == text


def test_disagreeing_lambda_token():
    with pytest.raises(InconsistentAsymptotics):
        parse_partition_spec("12:1+t4 mu1=1/(1-t2)")


def test_unknown_token():
    with pytest.raises(InputError):
        parse_partition_spec("foo")
