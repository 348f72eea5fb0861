"""Code documents: {"field", "local": [{d, e, k}]} or {"field", "global": {labels, rows}}."""
import numpy as np

from ..document import FrozenJSON, dump
from ..errors import CodeFormatError
from ..field import format_field_spec, parse_field_spec
from .linear_code import GlobalKernelMatrix, LinearCode, LocalKernels


def parse_code(text, network):
    doc = FrozenJSON.load(text, CodeFormatError)
    field = parse_field_spec(doc.field)
    try:
        if "local" in doc:
            mapping = {(str(item.d), str(item.e)): int(item.k) for item in doc.local}
            local = LocalKernels.from_mapping(network, field, mapping)
            return LinearCode.from_local(network, local)
        if "global_" in doc:
            labels = tuple(str(l) for l in doc.global_.labels)
            rows = [[int(x) for x in row] for row in doc.global_.rows]
            if labels != network.link_ids:
                raise CodeFormatError(
                    f"global columns {list(labels)} do not follow the network link order"
                )
            values = field.array(np.array(rows, dtype=np.int64).reshape(network.dimension, len(labels)))
            return LinearCode.from_global(network, GlobalKernelMatrix(field, labels, values))
    except (KeyError, ValueError, TypeError) as e:
        if isinstance(e, CodeFormatError):
            raise
        raise CodeFormatError(f"malformed code document: {e}") from e
    raise CodeFormatError("code document needs a local or a global section")


def code_document(code, form="local"):
    document = {"field": format_field_spec(code.field)}
    if form == "local":
        document["local"] = [
            {"d": d, "e": e, "k": int(k)}
            for (d, e), k in zip(code.network.adjacent_pairs, code.local.values)
        ]
    elif form == "global":
        document["global"] = code.global_kernels.to_document()
    else:
        raise ValueError(f"unknown code document form: {form}")
    return document


def serialize_code(code, form="local"):
    return dump(code_document(code, form)).encode("utf-8")
