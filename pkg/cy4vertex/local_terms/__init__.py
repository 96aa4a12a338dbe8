# Simplify importing package
from .chart import FIBRE, FLAVORS, ChartCharacter, images_from_weights  # noqa: F401
from .edge import EdgeCharacter, edge_polynomial, edge_tau, edge_term  # noqa: F401
from .face import FaceCharacter, face_polynomial, face_tau, face_term  # noqa: F401
from .main import chart_character, tautological_character  # noqa: F401
from .oracles import dimensional_reduction_check, edge_reduction_check, halving_check, rank_check, residual_module, taylor_character, taylor_oracle, threefold_oracle  # noqa: F401
from .vertex import vertex_polynomial, vertex_tau, vertex_term  # noqa: F401

__all__ = (
    'FIBRE',
    'FLAVORS',
    'ChartCharacter',
    'EdgeCharacter',
    'FaceCharacter',
    'chart_character',
    'dimensional_reduction_check',
    'edge_polynomial',
    'edge_reduction_check',
    'edge_tau',
    'edge_term',
    'face_polynomial',
    'face_tau',
    'face_term',
    'halving_check',
    'images_from_weights',
    'rank_check',
    'residual_module',
    'tautological_character',
    'taylor_character',
    'taylor_oracle',
    'threefold_oracle',
    'vertex_polynomial',
    'vertex_tau',
    'vertex_term',
)
