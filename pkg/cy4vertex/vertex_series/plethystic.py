"""CY4Vertex plethystic exponential

Exp(F) = exp(sum_k psi_k(F) / k) for a q-series F without constant term,
expanded through the recurrence

    E_0 = 1,  E_m = (1/m) sum_{j=1..m} j l_j E_{m-j},
    l_m = sum_{k | m} psi_k(F_{m/k}) / k.

The reference series of the empty vertex is Exp of

    [t1t2][t1t3][t2t3][y] / ([t1][t2][t3][t4][y^(1/2) q][y^(1/2) q^-1])
        = -B sum_{n>=1} q^n sum_{j=0..n-1} y^((n-1-2j)/2),

B = [t1t2][t1t3][t2t3][y] / ([t1][t2][t3][t4]).

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from fractions import Fraction

from cy4vertex import settings
from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import LaurentPoly, MonomialFraction, bracket_eval, mf_sum, weights_of
from cy4vertex.vertex_series.series import QSeries


#####################################################################
# Constants

# [t1t2][t1t3][t2t3][y] / ([t1][t2][t3][t4])
PREFACTOR_WEIGHTS = (
    ((1, 1, 0, 0), 1), ((1, 0, 1, 0), 1), ((0, 1, 1, 0), 1), ((0, 0, 0, 0, 1), 1),
    ((1, 0, 0, 0), -1), ((0, 1, 0, 0), -1), ((0, 0, 1, 0), -1), ((0, 0, 0, 1), -1),
)


#####################################################################
# Internal helper

def _divisors(m: int) -> list:
    return [k for k in range(1, m + 1) if m % k == 0]


def _y_string(n: int) -> LaurentPoly:
    """sum_{j=0..n-1} y^((n-1-2j)/2)."""
    return LaurentPoly({(0, 0, 0, 0, n - 1 - 2 * j): 1 for j in range(n)})


#####################################################################
# Operations

def plethystic_exp(exponent: QSeries, order: int) -> QSeries:
    """Exp of a q-series with zero constant term, known through q^order.

    Raises:
        InputError: negative order, a constant term, or Q-dependence.
    """
    if order < 0:
        raise InputError(f"Order must be nonnegative, got {order}")
    if any(key[1] or key[0] < 1 for key in exponent.keys()):
        raise InputError("Plethystic exponential needs a q-series without constant term or Q-dependence")
    f = {n: exponent.coefficient(n) for n in range(1, order + 1)}
    logs = {}
    for m in range(1, order + 1):
        logs[m] = mf_sum(f[m // k].adams(k) * Fraction(1, k) for k in _divisors(m))
    e = {0: MonomialFraction.one()}
    for m in range(1, order + 1):
        e[m] = mf_sum(logs[j] * e[m - j] * Fraction(j, m) for j in range(1, m + 1))
        settings.log(f"plethystic exponential: order {m} done")
    return QSeries(e, order + 1)


def magnificent_four_prefactor() -> MonomialFraction:
    return bracket_eval(weights_of(PREFACTOR_WEIGHTS))


def magnificent_four_exponent(order: int) -> QSeries:
    """The q-expansion of the exponent through q^order."""
    b = magnificent_four_prefactor()
    return QSeries({n: -(b * _y_string(n)) for n in range(1, order + 1)}, order + 1)


def magnificent_four(order: int) -> QSeries:
    """Reference series of the empty vertex through q^order."""
    return plethystic_exp(magnificent_four_exponent(order), order)
