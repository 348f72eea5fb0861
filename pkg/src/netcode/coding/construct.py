import itertools
import math

import networkx as nx
import numpy as np

from ..config import resolve
from ..errors import BudgetExceededError, ConstructionError, FieldTooSmallError
from ..log import or_silent
from ..network.flow import check_nodes, edge_disjoint_paths
from .linear_code import LinearCode, LocalKernels, verify_multicast


class BruteForceSearch:
    """
    Exhaustive search for the lexicographically first linear multicast.

    Local kernels are assigned pair by pair in `network.adjacent_pairs`
    order, canonical field values ascending. A check node is tested as soon
    as every pair that can reach its inputs is assigned, and a failing
    prefix is cut; the first complete assignment reached is therefore the
    same witness the plain product scan would return.

    >>> search = BruteForceSearch(butterfly, GF2)
    >>> code = search.run()
    >>> search.stats["visited"] > 0
    True
    """

    def __init__(self, network, field, budget_bits=None, logger=None):
        self.network = network
        self.field = field
        self.logger = or_silent(logger)
        self.pairs = network.adjacent_pairs
        budget = resolve(budget_bits, "search_budget_bits")
        self.bits = len(self.pairs) * math.log2(field.order)
        if self.bits > budget:
            raise BudgetExceededError(
                f"{len(self.pairs)} pairs over GF({field}) need {self.bits:.1f} bits, budget is {budget}"
            )
        self.stats = {
            "pairs": len(self.pairs),
            "space": field.order ** len(self.pairs),
            "visited": 0,
            "pruned": 0,
        }
        self._prepare()

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- {len(self.pairs)} pairs over GF({self.field})"

    def _prepare(self):
        n = self.network
        index = {pair: i for i, pair in enumerate(self.pairs)}
        self._node_plan = {}
        for v in n.nodes:
            ins, outs = n.in_links(v), n.out_links(v)
            if ins and outs:
                self._node_plan[v] = (
                    [n.link_position[d] for d in ins],
                    [n.link_position[e] for e in outs],
                    np.array([[index[(d, e)] for e in outs] for d in ins], dtype=np.int64),
                )
        self.schedule = [[] for _ in range(len(self.pairs) + 1)]
        self._ancestry = {}
        for t in check_nodes(n):
            upstream = nx.ancestors(n.graph, t)
            self._ancestry[t] = [v for v in n.topological_nodes if v in upstream and v in self._node_plan]
            feeding = {l.id for l in n.links if l.head in upstream or l.head == t}
            depth = max(
                (i + 1 for i, (_, e) in enumerate(self.pairs) if e in feeding),
                default=0,
            )
            self.schedule[depth].append(t)

    def _passes(self, t, values):
        n = self.network
        GF = self.field.GF
        F = GF.Zeros((n.dimension, len(n.links)))
        for i in range(n.dimension):
            F[i, i] = 1
        for v in self._ancestry[t]:
            ins, outs, idx = self._node_plan[v]
            F[:, outs] = F[:, ins] @ GF(values[idx])
        cols = [n.link_position[d] for d in n.in_links(t)]
        return int(np.linalg.matrix_rank(F[:, cols])) == n.dimension

    def run(self):
        self.logger.on_session_start(
            "brute_force", field=str(self.field), pairs=len(self.pairs), bits=round(self.bits, 3)
        )
        values = np.zeros(len(self.pairs), dtype=np.int64)
        q = self.field.order

        def dfs(depth):
            for t in self.schedule[depth]:
                if not self._passes(t, values):
                    self.stats["pruned"] += 1
                    return False
            if depth == len(self.pairs):
                return True
            for v in range(q):
                values[depth] = v
                self.stats["visited"] += 1
                if dfs(depth + 1):
                    return True
            values[depth] = 0
            return False

        found = dfs(0)
        self.logger.on_session_end(found=found, **self.stats)
        if not found:
            return None
        local = LocalKernels(self.network, self.field, tuple(int(v) for v in values))
        return LinearCode.from_local(self.network, local)


def brute_force_solve(network, field, budget_bits=None, logger=None):
    return BruteForceSearch(network, field, budget_bits, logger).run()


def _candidate_vectors(field, m):
    """Moment-curve points (1, a, a^2, ...) first, then every nonzero vector."""
    GF = field.GF
    seen = set()
    for a in range(field.order):
        a = GF(a)
        point = tuple(int(a**i) for i in range(m))
        if point not in seen:
            seen.add(point)
            yield point
    for point in itertools.product(range(field.order), repeat=m):
        if any(point) and point not in seen:
            seen.add(point)
            yield point


def jaggi_sanders_construct(network, field, logger=None):
    """
    Greedy frontier construction over GF(q), q > |receivers|.

    Every sink (each receiver plus every other non-source node with maxflow
    >= ω) keeps ω frontier links, one per disjoint path; each link on some
    sink path takes the first candidate combination of its path predecessors
    that keeps all affected frontiers invertible.
    """
    logger = or_silent(logger)
    if field.order <= len(network.receivers):
        raise FieldTooSmallError(field.order, len(network.receivers))
    n = network
    GF = field.GF
    sinks = list(n.receivers) + [t for t in check_nodes(n) if t not in n.receivers]
    routes = [edge_disjoint_paths(n, t) for t in sinks]
    logger.on_session_start("jaggi_sanders", field=str(field), sinks=sinks)

    frontier = [[path[0] for path in ps.paths] for ps in routes]
    uses = {}
    for i, ps in enumerate(routes):
        for j, path in enumerate(ps.paths):
            for d, e in zip(path, path[1:]):
                uses.setdefault(e, []).append((i, j, d))

    pos = n.link_position
    F = GF.Zeros((n.dimension, len(n.links)))
    for i in range(n.dimension):
        F[i, i] = 1
    mapping = {}
    for v in n.topological_nodes:
        for e in n.out_links(v):
            if e not in uses:
                continue
            preds = sorted({d for _, _, d in uses[e]}, key=pos.__getitem__)
            basis = F[:, [pos[d] for d in preds]]
            for coefficients in _candidate_vectors(field, len(preds)):
                column = basis @ GF(np.array(coefficients, dtype=np.int64))
                F[:, pos[e]] = column
                if all(
                    np.linalg.matrix_rank(
                        F[:, [pos[e] if k == j else pos[l] for k, l in enumerate(frontier[i])]]
                    )
                    == n.dimension
                    for i, j, _ in uses[e]
                ):
                    break
            else:
                raise ConstructionError(e)
            for i, j, _ in uses[e]:
                frontier[i][j] = e
            for d, k in zip(preds, coefficients):
                mapping[(d, e)] = k
            logger.log_progress(link=e, coefficients=list(coefficients))

    code = LinearCode.from_local(n, LocalKernels.from_mapping(n, field, mapping))
    verdict = verify_multicast(code)
    logger.on_session_end(ok=verdict.ok)
    if not verdict:
        raise ConstructionError(None, f"constructed code fails at {list(verdict.failing)}")
    return code
