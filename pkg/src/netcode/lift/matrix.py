from dataclasses import dataclass

import numpy as np

from ..errors import FieldMismatchError, MatrixFormatError
from ..field import GF2, from_signed_int
from ..functools import FuncList
from ..coding.linear_code import GlobalKernelMatrix


@dataclass(frozen=True, eq=False)
class LabelledMatrix:
    labels: tuple
    values: np.ndarray

    ENTRIES = ()

    def __post_init__(self):
        values = np.array(self.values, dtype=np.int64)
        if values.ndim != 2 or values.shape[1] != len(self.labels):
            raise MatrixFormatError(
                f"{values.shape} entries do not match {len(self.labels)} column labels"
            )
        if len(set(self.labels)) != len(self.labels):
            raise MatrixFormatError("duplicate column label")
        bad = set(np.unique(values).tolist()) - set(self.ENTRIES)
        if bad:
            raise MatrixFormatError(f"{self.__class__.__name__} entries must be in {self.ENTRIES}, got {sorted(bad)}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", tuple(self.labels))

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- {self.values.shape[0]}x{self.values.shape[1]}"

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.labels == other.labels
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.labels, self.values.tobytes()))

    @property
    def rows(self):
        return self.values.shape[0]

    def column(self, label):
        return self.values[:, self.labels.index(label)]

    def to_document(self):
        return {"labels": list(self.labels), "rows": self.values.tolist()}


class BinaryMatrix(LabelledMatrix):
    ENTRIES = (0, 1)

    def over(self, spec=GF2):
        return spec.array(self.values)


class SignedMatrix(LabelledMatrix):
    ENTRIES = (-1, 0, 1)

    def mod2(self):
        return BinaryMatrix(self.labels, np.abs(self.values) % 2)


def _read_rows(text):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise MatrixFormatError(f"invalid UTF-8: {e}") from e
    lines = (
        FuncList(text.split("\n"))
        .map(str.strip)
        .filter(lambda line: line and not line.startswith("#"))
        .map(str.split)
        .to_list()
    )
    if not lines:
        raise MatrixFormatError("empty matrix document")
    labels, rows = tuple(lines[0]), lines[1:]
    if any(len(row) != len(labels) for row in rows):
        raise MatrixFormatError("every row needs one entry per column label")
    try:
        values = np.array([[int(x) for x in row] for row in rows], dtype=np.int64)
    except ValueError as e:
        raise MatrixFormatError(f"non-integer matrix entry: {e}") from e
    return labels, values.reshape(len(rows), len(labels))


def parse_matrix(text, kind=BinaryMatrix):
    """
    Header line of column labels, then one row of space-separated entries
    per line; blank lines and lines starting with '#' are skipped.

    >>> parse_matrix("a b\\n1 0\\n0 1\\n").values.tolist()
    [[1, 0], [0, 1]]
    """
    return kind(*_read_rows(text))


def parse_field_matrix(text, spec):
    labels, values = _read_rows(text)
    return GlobalKernelMatrix(spec, labels, spec.array(values))


def serialize_matrix(m):
    widths = [max(len(label), 2) for label in m.labels]
    header = " ".join(f"{label:>{w}}" for label, w in zip(m.labels, widths))
    body = [
        " ".join(f"{int(x):>{w}}" for x, w in zip(row, widths)) for row in m.values.tolist()
    ]
    return ("\n".join([header] + body) + "\n").encode("utf-8")


def juxtapose_kernels(code):
    if code.field != GF2:
        raise FieldMismatchError(code.field, GF2)
    g = code.global_kernels
    return BinaryMatrix(g.labels, g.to_ints())


def view_over_field(s, spec):
    """Entrywise image of a signed matrix in GF(q)."""
    image = {n: from_signed_int(n, spec).value for n in (-1, 0, 1)}
    values = np.vectorize(image.__getitem__, otypes=[np.int64])(s.values)
    return GlobalKernelMatrix(spec, s.labels, spec.array(values.reshape(s.values.shape)))
