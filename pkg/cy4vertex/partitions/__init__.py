# Simplify importing package
from .boxes import BoxConfig, SurfaceSlice, closed_subsets, gravity_closure, pt0_enumerate, pt0_region, pt1_enumerate, pt1_limit_region  # noqa: F401
from .decompose import ModuleDecomposition, decompose_module, renormalized_volume  # noqa: F401
from .finite import AXES, EMPTY, PAIRS, FinitePartition, complement, finite_partitions, pair_label, parse_pair, partitions_up_to  # noqa: F401
from .main import chart_module, configurations, mu_from_text, pt0_module, pt1_configurations, pt1_module, solid_from_text  # noqa: F401
from .plane import PlanePartition, check_compatible, empty_asymptotics, minimal_plane_partitions, surface_partitions  # noqa: F401
from .solid import SolidPartition, enumerate_solid_partitions  # noqa: F401
from .surface import CmClassification, cm_classify, compute_T0_OW, quot_bound, t0_weights, w_membership  # noqa: F401
from .text import PartitionSpec, format_partition_spec, parse_partition_spec  # noqa: F401

__all__ = (
    'AXES',
    'EMPTY',
    'PAIRS',
    'BoxConfig',
    'CmClassification',
    'FinitePartition',
    'ModuleDecomposition',
    'PartitionSpec',
    'PlanePartition',
    'SolidPartition',
    'SurfaceSlice',
    'chart_module',
    'check_compatible',
    'closed_subsets',
    'cm_classify',
    'complement',
    'compute_T0_OW',
    'configurations',
    'decompose_module',
    'empty_asymptotics',
    'enumerate_solid_partitions',
    'finite_partitions',
    'format_partition_spec',
    'gravity_closure',
    'minimal_plane_partitions',
    'mu_from_text',
    'pair_label',
    'parse_pair',
    'parse_partition_spec',
    'partitions_up_to',
    'pt0_enumerate',
    'pt0_module',
    'pt0_region',
    'pt1_configurations',
    'pt1_enumerate',
    'pt1_limit_region',
    'pt1_module',
    'quot_bound',
    'renormalized_volume',
    'solid_from_text',
    'surface_partitions',
    't0_weights',
    'w_membership',
)
