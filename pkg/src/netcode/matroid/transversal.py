from dataclasses import dataclass

import networkx as nx

from .core import Matroid


@dataclass(frozen=True)
class BipartiteSystem:
    """
    Family (A_j : j in J) of subsets of S.

    >>> BipartiteSystem.from_family({"A1": {1, 2}, "A2": {2, 3}}).right
    ('A1', 'A2')
    """

    left: tuple
    right: tuple
    membership: tuple

    def __post_init__(self):
        if len(self.membership) != len(self.right):
            raise ValueError("one member set per index is required")
        left = set(self.left)
        for j, members in zip(self.right, self.membership):
            stray = set(members) - left
            if stray:
                raise ValueError(f"A_{j} is not a subset of S: {sorted(map(str, stray))}")

    @staticmethod
    def from_family(family, left=None):
        right = tuple(family)
        membership = tuple(frozenset(family[j]) for j in right)
        if left is None:
            seen = []
            for members in membership:
                seen.extend(sorted(members, key=str))
            left = tuple(dict.fromkeys(seen))
        return BipartiteSystem(tuple(left), right, membership)

    def members(self, j):
        return self.membership[self.right.index(j)]

    def graph(self, X=None):
        X = self.left if X is None else X
        g = nx.Graph()
        g.add_nodes_from(("s", x) for x in X)
        g.add_nodes_from(("j", j) for j in self.right)
        for j, members in zip(self.right, self.membership):
            for x in X:
                if x in members:
                    g.add_edge(("s", x), ("j", j))
        return g


def maximum_matching(system, X=None):
    """Matching of X into J as a dict x -> j."""
    X = system.left if X is None else tuple(X)
    if not X or not system.right:
        return {}
    top = [("s", x) for x in X]
    matching = nx.bipartite.hopcroft_karp_matching(system.graph(X), top_nodes=top)
    return {node[1]: matching[node][1] for node in top if node in matching}


def transversal_matroid(system):
    """Partial transversals of the family, decided by maximum bipartite matching."""
    return Matroid(
        system.left,
        rank=lambda X: len(maximum_matching(system, X)),
        name="transversal",
    )
