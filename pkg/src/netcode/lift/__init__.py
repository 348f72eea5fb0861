from .matrix import (
    BinaryMatrix,
    SignedMatrix,
    juxtapose_kernels,
    parse_field_matrix,
    parse_matrix,
    serialize_matrix,
    view_over_field,
)
from .graphic import graphic_row_reduce, sign_to_tu
from .unimodular import incidence_matrix, signed_matroid, verify_tu
from .pipeline import LiftResult, lift_matrix, lift_pipeline, lift_solution
