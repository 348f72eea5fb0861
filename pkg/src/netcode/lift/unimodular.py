import itertools
from dataclasses import dataclass

import numpy as np

from ..config import resolve
from ..errors import CapExceededError
from ..matroid.core import Matroid
from .matrix import SignedMatrix


def integer_determinant(rows):
    """Exact determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * a * integer_determinant(minor)
    return total


@dataclass(frozen=True)
class TUVerdict:
    ok: bool
    rows: tuple = None
    columns: tuple = None
    determinant: int = None
    checked: int = 0

    def __bool__(self):
        return self.ok

    def to_document(self):
        return {
            "ok": self.ok,
            "witness": None
            if self.ok
            else {"rows": list(self.rows), "columns": list(self.columns), "determinant": self.determinant},
            "checked": self.checked,
        }


def verify_tu(s, cap=None):
    """Every square submatrix has determinant -1, 0 or 1 (exhaustive)."""
    values = np.asarray(s.values if isinstance(s, SignedMatrix) else s, dtype=np.int64).tolist()
    n_rows = len(values)
    n_cols = len(values[0]) if values else 0
    cap = resolve(cap, "tu_exhaustive_cap")
    if min(n_rows, n_cols) > cap:
        raise CapExceededError(f"exhaustive TU check is capped at {cap}, got {n_rows}x{n_cols}")
    checked = 0
    for k in range(1, min(n_rows, n_cols) + 1):
        for rs in itertools.combinations(range(n_rows), k):
            for cs in itertools.combinations(range(n_cols), k):
                det = integer_determinant([[values[r][c] for c in cs] for r in rs])
                checked += 1
                if det not in (-1, 0, 1):
                    return TUVerdict(False, rs, cs, det, checked)
    return TUVerdict(True, checked=checked)


def integer_rank(values):
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    rows = [[int(x) for x in row] for row in values]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank, previous = 0, 1
    for c in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][c]
        for r in range(rank + 1, n_rows):
            # exact: every entry stays a minor of the input
            rows[r] = [(p * rows[r][j] - rows[r][c] * rows[rank][j]) // previous for j in range(n_cols)]
        previous = p
        rank += 1
    return rank


def signed_matroid(s):
    """Column matroid of a signed matrix over the rationals."""
    position = {l: i for i, l in enumerate(s.labels)}
    values = s.values.tolist()

    def _rank(X):
        cols = sorted(position[x] for x in X)
        return integer_rank([[row[c] for c in cols] for row in values])

    return Matroid(s.labels, rank=_rank, name="signed")


def incidence_matrix(vertices, edges):
    """
    Directed incidence matrix: +1 where the vertex is the tail, -1 at the head.

    `edges` maps edge ids to (tail, head); self-loops give zero columns.
    """
    vertices = tuple(vertices)
    row = {v: i for i, v in enumerate(vertices)}
    values = np.zeros((len(vertices), len(edges)), dtype=np.int64)
    for j, (tail, head) in enumerate(edges.values()):
        if tail != head:
            values[row[tail], j] = 1
            values[row[head], j] = -1
    return SignedMatrix(tuple(edges), values)
