"""CY4Vertex face terms

A compact torus invariant surface S_f carries a cross section lambda_f.
In every chart meeting S_f the local coordinates are ordered so that S_f
is {x3 = x4 = 0}; the chart contributes the surface block of lambda_f in
t3, t4 divided by the tangent weights (1 - t^w1)(1 - t^w2):

    F = sum_charts A_f(t^w3, t^w4) / ((1 - t^w1)(1 - t^w2)),
    A_f = Z + Zbar/(t3 t4) - P34/(t3 t4) Z Zbar,   Z = Z_lambda_f.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import Iterable

import sympy

from cy4vertex.errors import FaceGluingError, InputError, NotLaurentPolynomial
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, WeightClass, expand_to_laurent, mf_sum, to_weight_class
from cy4vertex.exact_algebra.laurent import double
from cy4vertex.local_terms.chart import FLAVORS, check_fixed, full_block, half_block, images_from_weights, monomial, pad
from cy4vertex.local_terms.vertex import y_twist
from cy4vertex.partitions import FinitePartition


#####################################################################
# Constants

SURFACE_AXES = (0, 1)
NORMAL_AXES = (2, 3)


#####################################################################
# FaceCharacter

class FaceCharacter:
    """Cross section of a compact surface with the chart weights along it."""

    __slots__ = ("partition", "charts", "insertions")

    def __init__(self, partition: FinitePartition, charts: Iterable[Iterable[Iterable[int]]],
                 insertions: Iterable[Iterable[int]] = None):
        self.partition = partition
        self.charts = tuple(tuple(tuple(int(x) for x in w) for w in chart) for chart in charts)
        if insertions is None:
            insertions = [()] * len(self.charts)
        self.insertions = tuple(pad(L) for L in insertions)
        if len(self.insertions) != len(self.charts):
            raise InputError("A face needs one insertion weight per chart")
        self._validate()

    def _validate(self) -> None:
        """
        Raises:
            InputError: a chart does not have four weights.
            FaceGluingError: a chart basis is not unimodular or the charts disagree on the surface.
        """
        if not self.charts:
            raise InputError("A face needs at least one chart")
        tangent, normals = [], []
        for chart in self.charts:
            if len(chart) != 4 or any(len(w) != 4 for w in chart):
                raise InputError(f"Face chart {chart} must list four weights of length four")
            if abs(sympy.Matrix(chart).det()) != 1:
                raise FaceGluingError("face gluing: chart basis is not unimodular", chart=chart)
            tangent.extend(chart[:2])
            normals.append(chart[2:])
        span = sympy.Matrix(tangent)
        if span.rank() != 2:
            raise FaceGluingError("face gluing: tangent weights do not span a plane")
        first = normals[0]
        for other in normals[1:]:
            for a, b in zip(first, other):
                difference = [x - y for x, y in zip(a, b)]
                if span.col_join(sympy.Matrix([difference])).rank() != 2:
                    raise FaceGluingError("face gluing: normal weights differ off the surface", chart=other)

    def images(self, index: int) -> tuple:
        return images_from_weights(self.charts[index])

    def __repr__(self) -> str:
        return f"FaceCharacter({self.partition!r}, charts={len(self.charts)})"


#####################################################################
# Internal helper

def _block(face: FaceCharacter, halved: bool) -> LaurentPoly:
    z = MonomialFraction(face.partition.character(NORMAL_AXES))
    if halved:
        block = half_block(z, NORMAL_AXES[:1], 1)
    else:
        block = full_block(z, NORMAL_AXES, 1)
    return expand_to_laurent(block)


def _tangent_factors(chart: tuple) -> dict:
    return {double(pad(chart[a])): -1 for a in SURFACE_AXES}


def _glue(face: FaceCharacter, local: LaurentPoly, insertions: bool = False) -> LaurentPoly:
    terms = []
    for index, chart in enumerate(face.charts):
        value = local.substitute(face.images(index))
        if insertions:
            value = value * monomial(face.insertions[index])
        terms.append(MonomialFraction(value, _tangent_factors(chart)))
    try:
        return expand_to_laurent(mf_sum(terms))
    except NotLaurentPolynomial as err:  # NotLaurentPolynomial(InternalAssertion)
        raise FaceGluingError("face gluing", face=repr(face)) from err


def face_tau(face: FaceCharacter) -> LaurentPoly:
    """Tautological contribution sum_i L_i Z_lambda / ((1 - t^w1)(1 - t^w2))."""
    return _glue(face, face.partition.character(NORMAL_AXES), insertions=True)


#####################################################################
# Operations

def face_polynomial(face: FaceCharacter, flavor: str = "plain") -> LaurentPoly:
    """Exact face term of the given flavor in global variables.

    Raises:
        InputError: unknown flavor.
        FaceGluingError: the chart contributions do not glue to a Laurent polynomial.
        PositiveFixedTerm: the face term has a T-fixed weight.
    """
    if flavor not in FLAVORS:
        raise InputError(f"Unknown face flavor '{flavor}', expected one of {FLAVORS}")
    halved = flavor.startswith("halved")
    value = LaurentPoly()
    if face.partition:
        value = _glue(face, _block(face, halved))
        check_fixed(value, "face", allow_negative=False)
    if flavor.endswith("tilde"):
        value = y_twist(value, face_tau(face), halved)
    return value


def face_term(face: FaceCharacter, flavor: str = "plain") -> WeightClass:
    return to_weight_class(face_polynomial(face, flavor))
