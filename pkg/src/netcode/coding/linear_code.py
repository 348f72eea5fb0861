from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..errors import FieldMismatchError, KernelRecoveryError
from ..field import FieldElement
from ..matroid.core import vector_matroid
from ..network.flow import check_nodes


@dataclass(frozen=True)
class LocalKernels:
    """
    k_{d,e} for every adjacent pair, stored as canonical integers.

    `values` is a tuple aligned with `network.adjacent_pairs`.
    """

    network: object
    field: object
    values: tuple

    def __repr__(self):
        nonzero = sum(1 for v in self.values if v)
        return f"<{self.__class__.__name__}> -- GF({self.field}), {nonzero}/{len(self.values)} nonzero"

    @staticmethod
    def from_mapping(network, field, mapping):
        """Absent pairs are zero; keys must be adjacent pairs of the network."""
        index = {pair: i for i, pair in enumerate(network.adjacent_pairs)}
        values = [0] * len(index)
        for pair, k in mapping.items():
            pair = tuple(pair)
            if pair not in index:
                raise KeyError(f"{pair} is not an adjacent pair")
            if isinstance(k, FieldElement):
                if k.spec != field:
                    raise FieldMismatchError(k.spec, field)
                k = k.value
            k = int(k)
            if not 0 <= k < field.order:
                raise ValueError(f"kernel {k} for {pair} is not an element of GF({field})")
            values[index[pair]] = k
        return LocalKernels(network, field, tuple(values))

    @staticmethod
    def zeros(network, field):
        return LocalKernels(network, field, (0,) * len(network.adjacent_pairs))

    def as_mapping(self):
        return {
            pair: FieldElement(v, self.field)
            for pair, v in zip(self.network.adjacent_pairs, self.values)
        }

    def __getitem__(self, pair):
        return FieldElement(self.values[self.network.adjacent_pairs.index(tuple(pair))], self.field)

    def node_matrix(self, node):
        """|In(node)| x |Out(node)| kernel matrix."""
        n = self.network
        ins, outs = n.in_links(node), n.out_links(node)
        lookup = dict(zip(n.adjacent_pairs, self.values))
        return self.field.array([[lookup[(d, e)] for e in outs] for d in ins]).reshape(
            len(ins), len(outs)
        )


@dataclass(frozen=True)
class GlobalKernelMatrix:
    """ω x |links| field array with one labelled column f_e per link."""

    field: object
    labels: tuple
    values: object

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- GF({self.field}), {self.values.shape[0]}x{len(self.labels)}"

    def __eq__(self, other):
        if not isinstance(other, GlobalKernelMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.labels == other.labels
            and np.array_equal(self.to_ints(), other.to_ints())
        )

    def __hash__(self):
        return hash((self.field, self.labels, self.to_ints().tobytes()))

    @cached_property
    def position(self):
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def rows(self):
        return self.values.shape[0]

    def column(self, label):
        return self.values[:, self.position[label]]

    def columns(self, labels):
        return self.values[:, [self.position[l] for l in labels]]

    def rank(self, labels):
        labels = list(labels)
        if not labels:
            return 0
        return int(np.linalg.matrix_rank(self.columns(labels)))

    def to_ints(self):
        return self.values.view(np.ndarray).astype(np.int64)

    def to_document(self):
        return {"labels": list(self.labels), "rows": self.to_ints().tolist()}


def compute_global_kernels(network, local, order=None):
    """
    f_e = sum_d k_{d,e} f_d, evaluated node by node in topological order.

    `order` may be any topological order of the nodes; the result does not
    depend on it.
    """
    if local.network != network:
        raise ValueError("local kernels belong to a different network")
    field = local.field
    order = network.topological_nodes if order is None else tuple(order)
    pos = network.link_position
    F = field.zeros((network.dimension, len(network.links)))
    for i, imag in enumerate(network.imaginary_links):
        F[i, pos[imag]] = 1
    for node in order:
        ins, outs = network.in_links(node), network.out_links(node)
        if not ins or not outs:
            continue
        K = local.node_matrix(node)
        F[:, [pos[e] for e in outs]] = F[:, [pos[d] for d in ins]] @ K
    return GlobalKernelMatrix(field, network.link_ids, F)


@dataclass(frozen=True)
class LinearCode:
    network: object
    local: LocalKernels
    global_kernels: GlobalKernelMatrix

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- GF({self.field}) on {self.network!r}"

    @property
    def field(self):
        return self.local.field

    @staticmethod
    def from_local(network, local):
        return LinearCode(network, local, compute_global_kernels(network, local))

    @staticmethod
    def from_global(network, global_kernels):
        local = recover_local_kernels(network, global_kernels)
        return LinearCode.from_local(network, local)


def subspace_dim(code, t):
    code.network.in_links(t)
    if t == code.network.source:
        raise ValueError("subspace_dim is undefined at the source")
    return code.global_kernels.rank(code.network.in_links(t))


@dataclass(frozen=True)
class MulticastVerdict:
    ok: bool
    failing: tuple = ()

    def __bool__(self):
        return self.ok

    def to_document(self):
        return {"ok": self.ok, "failing": list(self.failing)}


def verify_multicast(code):
    """dim V_t = ω at every non-source node with maxflow(t) >= ω."""
    n = code.network
    failing = tuple(t for t in check_nodes(n) if subspace_dim(code, t) != n.dimension)
    return MulticastVerdict(not failing, failing)


def _consistent(A, b):
    if A.shape[1] == 0:
        return not np.any(np.asarray(b))
    augmented = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    return np.linalg.matrix_rank(A) == np.linalg.matrix_rank(augmented)


def _smallest_solution(field, A, b):
    """Lexicographically smallest k with A k = b, or None."""
    if not _consistent(A, b):
        return None
    GF = field.GF
    chosen = []
    residual = b.copy()
    for j in range(A.shape[1]):
        rest = A[:, j + 1 :]
        for v in range(field.order):
            trial = residual - A[:, j] * GF(v)
            if _consistent(rest, trial):
                chosen.append(v)
                residual = trial
                break
        else:
            return None
    return chosen


def recover_local_kernels(network, global_kernels):
    """
    Solve f_e = sum_{d in In(t)} k_{d,e} f_d node by node, taking the
    lexicographically smallest solution for every out-link.
    """
    if global_kernels.labels != network.link_ids:
        raise ValueError("global kernel columns do not follow the network link order")
    field = global_kernels.field
    mapping = {}
    for node in network.topological_nodes:
        ins = network.in_links(node)
        A = global_kernels.columns(ins) if ins else field.zeros((network.dimension, 0))
        for e in network.out_links(node):
            solution = _smallest_solution(field, A, global_kernels.column(e))
            if solution is None:
                raise KernelRecoveryError(node, e)
            for d, k in zip(ins, solution):
                mapping[(d, e)] = k
    return LocalKernels.from_mapping(network, field, mapping)


def induced_matroid(code):
    """Vector matroid of the global kernel columns, imaginary links included."""
    g = code.global_kernels
    return vector_matroid(g.values, g.labels, name="induced")
