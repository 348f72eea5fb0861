import itertools
import threading
from dataclasses import dataclass

import networkx as nx
import numpy as np

from ..config import resolve
from ..errors import BudgetExceededError, GroundSetError


def _sorted_set(s, order):
    return sorted(s, key=order.__getitem__)


class Matroid:
    """
    A matroid on an ordered ground set, given by exactly one of an
    independence oracle, a rank function or an explicit basis family.

    The other two views are derived. Bases are materialized once, on
    demand, behind a lock; oracle matroids larger than the enumeration caps
    stay oracle-only.

    >>> m = Matroid("ab", bases=[{"a"}, {"b"}])
    >>> m.rank(), m.is_independent({"a", "b"})
    (1, False)
    """

    def __init__(self, ground, independence=None, rank=None, bases=None, name=None):
        given = [x is not None for x in (independence, rank, bases)]
        if sum(given) != 1:
            raise ValueError("give exactly one of independence, rank, bases")
        self.ground = tuple(ground)
        self.ground_set = frozenset(self.ground)
        if len(self.ground_set) != len(self.ground):
            raise ValueError("ground set has repeated elements")
        self.order = {e: i for i, e in enumerate(self.ground)}
        self.name = name or "matroid"
        self._independence = independence
        self._rank = rank
        self._bases = None
        self._lock = threading.Lock()
        if bases is not None:
            family = frozenset(frozenset(b) for b in bases)
            if not family:
                raise ValueError("a basis family is never empty")
            sizes = {len(b) for b in family}
            if len(sizes) != 1:
                raise ValueError(f"bases are not equicardinal: sizes {sorted(sizes)}")
            stray = frozenset().union(*family) - self.ground_set
            if stray:
                raise GroundSetError(stray)
            self._bases = family

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- {self.name}: |E|={len(self.ground)}, rank {self.rank()}"

    def _check(self, X):
        X = frozenset(X)
        stray = X - self.ground_set
        if stray:
            raise GroundSetError(stray)
        return X

    @property
    def is_extensional(self):
        return self._independence is None and self._rank is None

    def is_independent(self, X):
        X = self._check(X)
        if not X:
            return True
        if self._independence is not None:
            return bool(self._independence(X))
        if self._rank is not None:
            return self._rank(X) == len(X)
        return any(X <= b for b in self._bases)

    def rank(self, X=None):
        X = self.ground_set if X is None else self._check(X)
        if self._rank is not None:
            return int(self._rank(X))
        if self._independence is None:
            return max(len(X & b) for b in self._bases)
        chosen = set()
        for e in _sorted_set(X, self.order):
            if self._independence(frozenset(chosen | {e})):
                chosen.add(e)
        return len(chosen)

    @property
    def bases(self):
        if self._bases is None:
            with self._lock:
                if self._bases is None:
                    self._bases = self._enumerate_bases()
        return self._bases

    def _enumerate_bases(self, ground_cap=None, count_cap=None):
        ground_cap = resolve(ground_cap, "basis_ground_cap")
        count_cap = resolve(count_cap, "basis_count_cap")
        if len(self.ground) > ground_cap:
            raise BudgetExceededError(
                f"{self.name}: ground set of {len(self.ground)} exceeds the enumeration cap {ground_cap}"
            )
        r = self.rank()
        found = []
        for combo in itertools.combinations(self.ground, r):
            if self.is_independent(combo):
                found.append(frozenset(combo))
                if len(found) > count_cap:
                    raise BudgetExceededError(f"{self.name}: more than {count_cap} bases")
        return frozenset(found)

    def sorted_bases(self):
        """Bases as element lists in ground order, sorted by ground position."""
        rows = [_sorted_set(b, self.order) for b in self.bases]
        return sorted(rows, key=lambda b: [self.order[e] for e in b])

    def restrict(self, subset):
        subset = self._check(subset)
        return Matroid(
            [e for e in self.ground if e in subset],
            rank=lambda X: self.rank(X),
            name=f"{self.name}|{len(subset)}",
        )

    def loops(self):
        return tuple(e for e in self.ground if not self.is_independent({e}))

    def to_document(self):
        return {
            "ground": list(self.ground),
            "rank": self.rank(),
            "bases": self.sorted_bases(),
        }


def rank(m, X):
    return m.rank(X)


def is_independent(m, X):
    return m.is_independent(X)


def free_matroid(ground):
    return Matroid(ground, bases=[frozenset(ground)], name="free")


def uniform_matroid(r, ground):
    ground = tuple(ground)
    if not 0 <= r <= len(ground):
        raise ValueError(f"U_{{{r},{len(ground)}}} is undefined")
    return Matroid(ground, rank=lambda X: min(len(X), r), name=f"U({r},{len(ground)})")


def vector_matroid(values, labels, name="vector"):
    """Column matroid of a field array; `labels` name the columns."""
    labels = tuple(labels)
    position = {l: i for i, l in enumerate(labels)}

    def _rank(X):
        if not X:
            return 0
        return int(np.linalg.matrix_rank(values[:, sorted(position[x] for x in X)]))

    return Matroid(labels, rank=_rank, name=name)


def cycle_matroid(edges, name="cycle"):
    """Graphic matroid; `edges` maps edge ids to their (u, v) end points."""
    edges = dict(edges)

    def _forest(X):
        g = nx.MultiGraph()
        for e in X:
            g.add_edge(*edges[e], key=e)
        return nx.is_forest(g)

    return Matroid(tuple(edges), independence=_forest, name=name)


def dual(m):
    """M* with r*(X) = |X| + r(E - X) - r(E)."""
    full = m.rank()

    def _rank(X):
        return len(X) + m.rank(m.ground_set - X) - full

    return Matroid(m.ground, rank=_rank, name=f"{m.name}*")


def series_extension(m, x, y):
    _check_extension(m, x, y)
    family = {b | {y} for b in m.bases} | {b | {x} for b in m.bases if x not in b}
    return Matroid(m.ground + (y,), bases=family, name=f"{m.name}+s({x},{y})")


def parallel_extension(m, x, y):
    _check_extension(m, x, y)
    family = set(m.bases) | {(b - {x}) | {y} for b in m.bases if x in b}
    return Matroid(m.ground + (y,), bases=family, name=f"{m.name}+p({x},{y})")


def _check_extension(m, x, y):
    if x not in m.ground_set:
        raise GroundSetError([x])
    if y in m.ground_set:
        raise ValueError(f"{y} is already in the ground set")


def matroids_equal(a, b):
    if a.ground_set != b.ground_set:
        raise GroundSetError(a.ground_set ^ b.ground_set)
    return a.bases == b.bases


def satisfies_basis_exchange(m):
    """Exhaustive basis exchange: for B1, B2 and x in B1 - B2 some y in B2 - B1 works."""
    return basis_exchange_violation(m) is None


def basis_exchange_violation(m):
    bases = m.bases
    family = _sorted_family(m)
    for b1 in family:
        for b2 in family:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in bases for y in b2 - b1):
                    return b1, b2, x
    return None


def _sorted_family(m):
    return [frozenset(b) for b in m.sorted_bases()]


@dataclass(frozen=True)
class BaseOrderVerdict:
    ok: bool
    failing_pair: tuple = None

    def __bool__(self):
        return self.ok

    def to_document(self):
        pair = None
        if self.failing_pair is not None:
            pair = [sorted(b) for b in self.failing_pair]
        return {"ok": self.ok, "failing_pair": pair}


def exchange_ordering(m, b1, b2):
    """
    Bijection pi: b1 -> b2 with (b1 - x) + pi(x) and (b2 - pi(x)) + x bases
    for every x, found as a perfect matching; None when none exists.
    """
    bases = m.bases
    g = nx.Graph()
    left = [("x", x) for x in b1]
    g.add_nodes_from(left)
    g.add_nodes_from(("y", y) for y in b2)
    for x in b1:
        for y in b2:
            if (b1 - {x}) | {y} in bases and (b2 - {y}) | {x} in bases:
                g.add_edge(("x", x), ("y", y))
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
    if sum(1 for node in left if node in matching) < len(b1):
        return None
    return {x: matching[("x", x)][1] for x in b1}


def exchange_ordering_by_scan(m, b1, b2):
    """Same question by trying every bijection; factorial, kept as a cross-check."""
    bases = m.bases
    xs = sorted(b1)
    for image in itertools.permutations(sorted(b2)):
        if all(
            (b1 - {x}) | {y} in bases and (b2 - {y}) | {x} in bases
            for x, y in zip(xs, image)
        ):
            return dict(zip(xs, image))
    return None


def is_base_orderable(m):
    family = _sorted_family(m)
    for i, b1 in enumerate(family):
        for b2 in family[i + 1 :]:
            if exchange_ordering(m, b1, b2) is None:
                return BaseOrderVerdict(False, (b1, b2))
    return BaseOrderVerdict(True)
