import numpy as np

from ..config import resolve
from ..errors import CapExceededError, NotGraphicError
from .matrix import BinaryMatrix, SignedMatrix

ROOT = "r"


def _candidate_rows(omega):
    rows = [
        tuple((v >> (omega - 1 - i)) & 1 for i in range(omega)) for v in range(1, 2**omega)
    ]
    return sorted(rows, key=lambda r: (sum(r), [-x for x in r]))


def graphic_row_reduce(b, cap=None):
    """
    First invertible T (rows in candidate order: lighter rows first, unit
    vectors in index order) with at most two ones per column of T b.

    >>> T, reduced = graphic_row_reduce(kernel_b)
    >>> T.tolist()
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    """
    omega = b.rows
    cap = resolve(cap, "gl_search_cap")
    if omega > cap:
        raise CapExceededError(f"graphic reduction is capped at {cap} rows, got {omega}")
    if omega == 0:
        return np.zeros((0, 0), dtype=np.int64), b
    columns = np.unique(b.values.T, axis=0)
    columns = columns[columns.any(axis=1)]
    candidates = _candidate_rows(omega)
    weights_of = [(columns @ np.array(c)) % 2 for c in candidates]
    vector = [int("".join(map(str, c)), 2) for c in candidates]

    chosen = []

    def extend(start, span, weights):
        if len(chosen) == omega:
            return True
        for i in range(start, len(candidates)):
            if vector[i] in span:
                continue
            total = weights + weights_of[i]
            if total.size and total.max() > 2:
                continue
            chosen.append(i)
            if extend(i + 1, span | {s ^ vector[i] for s in span}, total):
                return True
            chosen.pop()
        return False

    if not extend(0, {0}, np.zeros(len(columns), dtype=np.int64)):
        raise NotGraphicError("no invertible binary row transform leaves two ones per column")
    T = np.array([candidates[i] for i in chosen], dtype=np.int64)
    return T, BinaryMatrix(b.labels, (T @ b.values) % 2)


def sign_to_tu(b):
    """+1 in the upper nonzero row of every weight-two column, -1 in the lower."""
    signed = b.values.copy()
    for j in range(signed.shape[1]):
        rows = np.flatnonzero(signed[:, j])
        if len(rows) > 2:
            raise NotGraphicError(f"column {b.labels[j]} has {len(rows)} ones")
        if len(rows) == 2:
            signed[rows[1], j] = -1
    return SignedMatrix(b.labels, signed)


def graph_of(m):
    """
    Edge list of the graph whose incidence structure `m` is.

    Rows are vertices; a weight-one column meets the extra vertex ROOT and a
    zero column is a loop at ROOT.
    """
    edges = {}
    for j, label in enumerate(m.labels):
        rows = [f"v{i + 1}" for i in np.flatnonzero(m.values[:, j])]
        if len(rows) > 2:
            raise NotGraphicError(f"column {label} has {len(rows)} nonzeros")
        ends = rows + [ROOT] * (2 - len(rows))
        edges[label] = tuple(ends)
    return edges
