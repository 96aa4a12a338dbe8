# Simplify importing package
from .evaluate import evaluate_mod_p, probably_equal, random_point  # noqa: F401
from .fraction import MonomialFraction, cy_eliminate, expand_to_laurent, mf_sum  # noqa: F401
from .laurent import ONE, T1, T2, T3, T4, Y, LaurentPoly  # noqa: F401
from .main import adams, as_fraction, lp_arith, lp_dual, mf_add, mf_dual, mf_mul, substitute_monomial, substitution_images, to_laurent  # noqa: F401
from .specialize import cohomological_leading, refined_leading, specialize_cocharacter, specialize_limit, specialize_with_retry  # noqa: F401
from .weights import SqrtOutcome, WeightClass, bracket_eval, cy_normalize, cy_reduce, dump_terms, load_terms, sqrt_split, to_weight_class, weights_of  # noqa: F401

__all__ = (
    'LaurentPoly',
    'MonomialFraction',
    'WeightClass',
    'SqrtOutcome',
    'ONE', 'T1', 'T2', 'T3', 'T4', 'Y',
    'adams',
    'as_fraction',
    'bracket_eval',
    'cohomological_leading',
    'cy_eliminate',
    'cy_normalize',
    'cy_reduce',
    'dump_terms',
    'evaluate_mod_p',
    'expand_to_laurent',
    'load_terms',
    'lp_arith',
    'lp_dual',
    'mf_add',
    'mf_dual',
    'mf_mul',
    'mf_sum',
    'probably_equal',
    'random_point',
    'refined_leading',
    'specialize_cocharacter',
    'specialize_limit',
    'specialize_with_retry',
    'sqrt_split',
    'substitute_monomial',
    'substitution_images',
    'to_laurent',
    'to_weight_class',
    'weights_of',
)
