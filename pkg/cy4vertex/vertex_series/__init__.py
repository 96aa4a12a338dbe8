# Simplify importing package
from .cache import cache_key, memoized  # noqa: F401
from .limits import cohomological_limit, palindromy_check  # noqa: F401
from .main import KINDS, VertexResult, vertex_series  # noqa: F401
from .plethystic import magnificent_four, magnificent_four_exponent, magnificent_four_prefactor, plethystic_exp  # noqa: F401
from .search import CORRESPONDENCE_CASES, CorrespondenceResult, SignSearch, case_spec, check_correspondence, verify_correspondence  # noqa: F401
from .series import QSeries, format_q_exponents  # noqa: F401
from .signs import SignAssignment, sign_from_formula  # noqa: F401
from .vertex import FixedPoint, assemble, dt_fixed_points, dt_vertex_series, evaluate_roots, fixed_point_ident, formula_signs, pt0_fixed_points, pt0_vertex_series, resolve_signs, root_contribution  # noqa: F401

__all__ = (
    'CORRESPONDENCE_CASES',
    'KINDS',
    'CorrespondenceResult',
    'FixedPoint',
    'QSeries',
    'SignAssignment',
    'SignSearch',
    'VertexResult',
    'assemble',
    'cache_key',
    'case_spec',
    'check_correspondence',
    'cohomological_limit',
    'dt_fixed_points',
    'dt_vertex_series',
    'evaluate_roots',
    'fixed_point_ident',
    'format_q_exponents',
    'formula_signs',
    'magnificent_four',
    'magnificent_four_exponent',
    'magnificent_four_prefactor',
    'memoized',
    'palindromy_check',
    'plethystic_exp',
    'pt0_fixed_points',
    'pt0_vertex_series',
    'resolve_signs',
    'root_contribution',
    'sign_from_formula',
    'verify_correspondence',
    'vertex_series',
)
