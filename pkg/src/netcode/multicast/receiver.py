"""Per-receiver strict gammoid on the edges of its ω disjoint paths."""
from dataclasses import dataclass

from ..errors import GroundSetError
from ..matroid.core import dual
from ..matroid.transversal import BipartiteSystem, transversal_matroid
from ..network.flow import maxflow
from ..network.model import MulticastNetwork
from ..registry import Marker

HAT = "^"


def hat(link_id):
    return f"{link_id}{HAT}"


@dataclass(frozen=True)
class ReceiverBipartite:
    """
    H(S, T, E) for one receiver.

    S copies the path edges, T copies them again without the ω path heads,
    and E joins e to its own copy and to the copy of its path successor.
    """

    receiver: str
    S: tuple
    T: tuple
    E: tuple

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- {self.receiver}: |S|={len(self.S)}, |T|={len(self.T)}, |E|={len(self.E)}"

    def degree(self, node):
        return sum(1 for s, t in self.E if node in (s, t))

    def system(self):
        membership = tuple(frozenset(s for s, t in self.E if t == t_hat) for t_hat in self.T)
        return BipartiteSystem(self.S, self.T, membership)


def build_bipartite_H(paths):
    chains = paths.chains
    S = tuple(e for chain in chains for e in chain)
    T = tuple(hat(e) for chain in chains for e in chain[1:])
    E = []
    for chain in chains:
        for d, e in zip(chain, chain[1:]):
            E.append((e, hat(e)))
            E.append((d, hat(e)))
    return ReceiverBipartite(paths.receiver, S, T, tuple(E))


def receiver_gammoid(network, paths):
    """
    M_G for one receiver: the dual of the transversal matroid of H.

    A basis takes exactly one edge from each of the receiver's paths.
    """
    paths.validate(network)
    H = build_bipartite_H(paths)
    m = dual(transversal_matroid(H.system()))
    m.name = f"gammoid({paths.receiver})"
    return m


def _terminal(e, X, node):
    return Marker.SINK if e in X else node


def gammoid_direct_oracle(network, paths, X, follow="paths"):
    """
    Whether ω edge-disjoint source paths can end on the edges of X, decided by
    max-flow on a derived network in which every X edge feeds a common sink.

    follow="paths" lets flow move only from an edge to its successor on the
    receiver's paths; follow="network" allows every adjacency among the path
    edges.
    """
    X = frozenset(X)
    stray = X - paths.edges
    if stray:
        raise GroundSetError(stray)
    if not X:
        return True
    if len(X) > network.dimension:
        return False
    if follow == "paths":
        junction = {e: f"@{e}" for e in paths.edges}
        links = []
        for chain in paths.chains:
            links.append((chain[0], network.source, _terminal(chain[0], X, junction[chain[0]])))
            for d, e in zip(chain, chain[1:]):
                links.append((e, junction[d], _terminal(e, X, junction[e])))
        nodes = [network.source] + sorted(junction.values()) + [Marker.SINK]
    elif follow == "network":
        links = [
            (l.id, l.tail, _terminal(l.id, X, l.head))
            for l in network.links
            if l.id in paths.edges
        ]
        nodes = list(network.nodes) + [Marker.SINK]
    else:
        raise ValueError(f"unknown follow mode: {follow}")
    derived = MulticastNetwork.build(nodes, links, network.source, [Marker.SINK], network.dimension)
    return maxflow(derived, Marker.SINK) == len(X)
