"""Finite matrix groups over Z/nZ and their structure theory."""

from cubictorsion.groups.ambient import Ambient, ambient, gl2_order
from cubictorsion.groups.enumerate import (
    SubgroupView,
    build_carrier,
    enumerate_subgroups,
    exponent_divides_filter,
)
from cubictorsion.groups.group import (
    FiniteGroup,
    MatrixGroup,
    close_elements,
    direct_product,
    is_normal,
    quotient_group,
    symmetric_group_3,
)
from cubictorsion.groups.matrices import (
    gens_to_wire,
    mat,
    mconj,
    mdet,
    minv,
    mmul,
    morder,
    mpow,
    mtrace,
    neg_identity,
    parse_gens,
    parse_mat,
)
from cubictorsion.groups.maximal import (
    SUPPORTED_MODULI,
    MaximalImage,
    maximal_images_for_T,
)
from cubictorsion.groups.s3 import is_generalized_s3_type, s3_residual
from cubictorsion.groups.structure import (
    conjugate_into,
    det_surjective,
    fixed_submodule,
    has_cc_element,
    is_borel_conjugate,
    is_split_cartan_conjugate,
    level_of,
)

__all__ = [
    "Ambient",
    "FiniteGroup",
    "MatrixGroup",
    "MaximalImage",
    "SUPPORTED_MODULI",
    "SubgroupView",
    "ambient",
    "build_carrier",
    "close_elements",
    "conjugate_into",
    "det_surjective",
    "direct_product",
    "enumerate_subgroups",
    "exponent_divides_filter",
    "fixed_submodule",
    "gens_to_wire",
    "gl2_order",
    "has_cc_element",
    "is_borel_conjugate",
    "is_generalized_s3_type",
    "is_normal",
    "is_split_cartan_conjugate",
    "level_of",
    "quotient_group",
    "mat",
    "maximal_images_for_T",
    "mconj",
    "mdet",
    "minv",
    "mmul",
    "morder",
    "mpow",
    "mtrace",
    "neg_identity",
    "parse_gens",
    "parse_mat",
    "s3_residual",
    "symmetric_group_3",
]
