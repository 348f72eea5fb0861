from dataclasses import dataclass

import networkx as nx

from .core import Matroid
from .transversal import BipartiteSystem, maximum_matching

_SOURCE = ("$", "source")
_SINK = ("$", "sink")


@dataclass(frozen=True)
class LinkageInstance:
    nodes: tuple
    arcs: tuple
    targets: frozenset

    def __post_init__(self):
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("linkage instance nodes must be distinct")
        if not self.targets:
            raise ValueError("target set B must be nonempty")
        nodes = set(self.nodes)
        if not set(self.targets) <= nodes:
            raise ValueError("targets must be nodes")
        for u, v in self.arcs:
            if u not in nodes or v not in nodes:
                raise ValueError(f"arc ({u}, {v}) leaves the node set")

    def out_neighbours(self, v):
        return frozenset(b for a, b in self.arcs if a == v and b != v)


def linkage_rank(inst, X):
    """Most node-disjoint paths from X into B, via node splitting and max-flow."""
    if not X:
        return 0
    g = nx.DiGraph()
    for v in inst.nodes:
        g.add_edge(("in", v), ("out", v), capacity=1)
    for u, v in inst.arcs:
        if u != v:
            g.add_edge(("out", u), ("in", v), capacity=1)
    for x in X:
        g.add_edge(_SOURCE, ("in", x), capacity=1)
    for b in inst.targets:
        g.add_edge(("out", b), _SINK, capacity=1)
    return int(nx.maximum_flow_value(g, _SOURCE, _SINK))


def strict_gammoid(inst):
    """
    L(G, B) on all nodes: X is independent iff X links into B.

    >>> m = strict_gammoid(LinkageInstance(("a", "b"), (("a", "b"),), frozenset("b")))
    >>> m.is_independent({"a"}), m.is_independent({"a", "b"})
    (True, False)
    """
    return Matroid(inst.nodes, rank=lambda X: linkage_rank(inst, X), name="strict gammoid")


def linkage_transversal_system(inst):
    """(A_v : v not in B) with A_v = {v} and the out-neighbours of v; its
    transversal matroid is the dual of the strict gammoid."""
    right = tuple(v for v in inst.nodes if v not in inst.targets)
    membership = tuple(frozenset({v}) | inst.out_neighbours(v) for v in right)
    return BipartiteSystem(inst.nodes, right, membership)


def gammoid_from_transversal_system(system):
    """
    Digraph realization of the dual of a transversal matroid.

    Each set A_j is represented by its matched element s_j; arcs run from
    s_j to the rest of A_j and the targets are the unmatched elements.
    """
    matching = maximum_matching(system)
    if len(matching) < len(system.right):
        raise ValueError("the family has no transversal; drop the unmatched sets first")
    representative = {j: x for x, j in matching.items()}
    arcs = []
    for j, members in zip(system.right, system.membership):
        s_j = representative[j]
        arcs.extend((s_j, u) for u in sorted(members - {s_j}, key=system.left.index))
    targets = frozenset(system.left) - frozenset(representative.values())
    if not targets:
        raise ValueError("every element is matched; the dual is the rank-0 matroid")
    return LinkageInstance(tuple(system.left), tuple(arcs), targets)
