# Simplify importing package
from .fixed_points import GLOBAL_KINDS, GlobalClasses, GlobalFixedPoint, check_enumerable, count_by_class, enumerate_global, leg_extensions  # noqa: F401
from .geometry import BUILTINS, ToricEdge, ToricFace, ToricGeometry, build_geometry, c4, load_geometry, local_p1xp1, local_p2  # noqa: F401
from .main import bracket_power, dimensional_reduction_check, palindromy_report  # noqa: F401
from .nested import nested_pt1_formula, nested_pt1_series  # noqa: F401
from .poles import cancelling_signs, laurent_expansion, pole_order  # noqa: F401
from .series import GLOBAL_SIGN_MODES, GlobalResult, assemble_global, evaluate_contributions, explicit_signs, global_contribution, global_series, search_signs, support_signs  # noqa: F401

__all__ = (
    'BUILTINS',
    'GLOBAL_KINDS',
    'GLOBAL_SIGN_MODES',
    'GlobalClasses',
    'GlobalFixedPoint',
    'GlobalResult',
    'ToricEdge',
    'ToricFace',
    'ToricGeometry',
    'assemble_global',
    'bracket_power',
    'build_geometry',
    'c4',
    'cancelling_signs',
    'check_enumerable',
    'count_by_class',
    'dimensional_reduction_check',
    'enumerate_global',
    'evaluate_contributions',
    'explicit_signs',
    'global_contribution',
    'global_series',
    'laurent_expansion',
    'leg_extensions',
    'load_geometry',
    'local_p1xp1',
    'local_p2',
    'nested_pt1_formula',
    'nested_pt1_series',
    'palindromy_report',
    'pole_order',
    'search_signs',
    'support_signs',
)
