"""Exact Kronecker products of symmetric-group characters.

Decomposes [mu].[nu] by two independent methods (character inner products
and a width recursion over skew characters), locates (almost) extreme
constituents, and machine-verifies the classification of products with
few homogeneous components at small n.
"""

from .characters import (
    CharacterTable,
    ClassFunction,
    character_table,
    class_size,
    degree,
    inner_product,
    mn_character_value,
)
from .extreme import (
    ExtremeReport,
    StarVerdict,
    almost_extreme_report,
    almost_width_chi,
    extreme_components,
    hook_bound_check,
    hypothesis_star,
)
from .kronecker import (
    VirtualCharacter,
    component_count,
    dvir_coefficient,
    induce_one_step,
    kron_coefficient,
    kron_decompose,
    rect_hull,
)
from .lr import (
    ShapeClass,
    classify_skew_shape,
    lr_coefficient,
    outer_product_expand,
    skew_decompose,
    skew_syt_count,
)
from .partitions import (
    Partition,
    SkewShape,
    conjugate,
    format_partition,
    intersect,
    parse_partition,
    parse_skew,
    partitions_of,
    skew_shape,
)

__version__ = "0.1.0"
