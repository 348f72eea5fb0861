"""GF(2) kernel matrix -> graphic form -> TU signing -> any finite field."""
from dataclasses import dataclass, replace

import numpy as np

from ..coding.linear_code import GlobalKernelMatrix, LinearCode, verify_multicast
from ..config import resolve
from ..errors import LiftPostconditionError
from ..field import GF2, format_field_spec
from ..log import or_silent
from ..matroid.core import matroids_equal, vector_matroid
from .graphic import graphic_row_reduce, sign_to_tu
from .matrix import juxtapose_kernels, view_over_field


@dataclass(frozen=True, eq=False)
class LiftResult:
    transform: np.ndarray
    reduced: object
    signed: object
    lifted: GlobalKernelMatrix
    code: LinearCode = None
    matroid_checked: bool = False

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- GF(2) -> GF({self.lifted.field}), {len(self.lifted.labels)} columns"

    def to_document(self):
        lifted = {
            "field": format_field_spec(self.lifted.field),
            "global": self.lifted.to_document(),
            "local": None,
        }
        if self.code is not None:
            n = self.code.network
            lifted["local"] = [
                {"d": d, "e": e, "k": int(k)}
                for (d, e), k in zip(n.adjacent_pairs, self.code.local.values)
            ]
        return {
            "transform": np.asarray(self.transform).tolist(),
            "reduced": self.reduced.to_document(),
            "signed": self.signed.to_document(),
            "lifted": lifted,
            "matroid_checked": self.matroid_checked,
        }


def lift_matrix(b, spec, check_cap=None, logger=None):
    """Steps one to four on a bare binary matrix; no topology involved."""
    logger = or_silent(logger)
    logger.on_session_start("lift", field=format_field_spec(spec), columns=len(b.labels))
    transform, reduced = graphic_row_reduce(b)
    logger.log_progress(stage="graphic", transform=transform.tolist())
    signed = sign_to_tu(reduced)
    logger.log_progress(stage="signed")
    lifted = view_over_field(signed, spec)

    checked = len(b.labels) <= resolve(check_cap, "lift_matroid_check_cap")
    if checked:
        binary = vector_matroid(reduced.over(GF2), reduced.labels, name="binary")
        image = vector_matroid(lifted.values, lifted.labels, name=f"GF({spec})")
        if not matroids_equal(binary, image):
            raise LiftPostconditionError(f"column matroid changed under the lift to GF({spec})")
    logger.on_session_end(stage="viewed", matroid_checked=checked)
    return LiftResult(transform, reduced, signed, lifted, matroid_checked=checked)


def normalize_imaginary(network, lifted):
    """Left-multiply so the imaginary columns become the standard basis again."""
    block = lifted.columns(network.imaginary_links)
    values = np.linalg.inv(block) @ lifted.values
    return GlobalKernelMatrix(lifted.field, lifted.labels, values)


def lift_pipeline(network, code, spec, check_cap=None, logger=None):
    if not verify_multicast(code):
        raise ValueError("the binary code is not a linear multicast")
    result = lift_matrix(juxtapose_kernels(code), spec, check_cap, logger)
    lifted = LinearCode.from_global(network, normalize_imaginary(network, result.lifted))
    verdict = verify_multicast(lifted)
    if not verdict:
        raise LiftPostconditionError(
            f"lifted code over GF({spec}) fails at {list(verdict.failing)}"
        )
    return replace(result, lifted=lifted.global_kernels, code=lifted)


def lift_solution(network, code, spec, check_cap=None, logger=None):
    return lift_pipeline(network, code, spec, check_cap, logger).code
