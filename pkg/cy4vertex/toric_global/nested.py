"""CY4Vertex smooth surface closed form

For a smooth surface S in Tot(L1 + L2) over P2 the PT1 coefficient of
class (delta, n) is CO_{chi(O(delta)) - n} [y^n], with CO_k the q^k
coefficient of (prod_k 1/(1 - q^k))^(e(S) + L(L - K_S)).

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from cy4vertex.errors import InputError
from cy4vertex.exact_algebra import MonomialFraction, bracket_eval, weights_of
from cy4vertex.vertex_series import QSeries


#####################################################################
# Constants

# e(P2) and L(L - K) for L = O(-1) on P2
P2_EULER = 3
P2_TWIST = -2


#####################################################################
# Internal helper

def _euler_product(exponent: int, length: int) -> list:
    """Coefficients of (prod_k 1/(1 - q^k))^exponent through q^(length - 1)."""
    series = [1] + [0] * (length - 1)
    for k in range(1, length):
        factor = [0] * length
        if exponent >= 0:
            # 1/(1 - q^k)^e
            for j in range(0, length, k):
                factor[j] = _multichoose(exponent, j // k)
        else:
            for j in range(0, min(length, k * (-exponent) + 1), k):
                factor[j] = (-1) ** (j // k) * _choose(-exponent, j // k)
        series = [sum(series[i] * factor[n - i] for i in range(n + 1)) for n in range(length)]
    return series


def _choose(n: int, k: int) -> int:
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


def _multichoose(n: int, k: int) -> int:
    return _choose(n + k - 1, k) if n else int(k == 0)


def _y_bracket(n: int) -> MonomialFraction:
    return bracket_eval(weights_of([((0, 0, 0, 0, n), 1)]))


def surface_chi(delta: int) -> int:
    """chi(O_P2(delta)) for delta >= -2."""
    return (delta + 1) * (delta + 2) // 2


#####################################################################
# Operations

def nested_pt1_formula(delta: int, n: int, euler: int = P2_EULER, twist: int = P2_TWIST) -> MonomialFraction:
    """Closed form PT1 coefficient of a smooth curve class delta with n points.

    Raises:
        InputError: n <= 0 or delta < 0.
    """
    if n <= 0:
        raise InputError(f"PT1 closed form needs n > 0, got {n}")
    if delta < 0:
        raise InputError(f"PT1 closed form needs delta >= 0, got {delta}")
    index = surface_chi(delta) - n
    if index < 0:
        return MonomialFraction()
    count = _euler_product(euler + twist, index + 1)[index]
    return _y_bracket(n) * count


def nested_pt1_series(delta: int, n_max: int, euler: int = P2_EULER, twist: int = P2_TWIST) -> QSeries:
    """sum_n nested_pt1_formula(delta, n) q^n Q^(3/2 + delta) for 0 < n <= n_max."""
    terms = [((n, 3 + 2 * delta), nested_pt1_formula(delta, n, euler, twist)) for n in range(1, n_max + 1)]
    return QSeries.from_terms(terms, n_max + 1)
