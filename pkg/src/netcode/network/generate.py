"""Seeded random acyclic multicast networks for the property suites."""
import numpy as np

from .flow import edge_disjoint_paths, maxflow
from .model import MulticastNetwork


def random_network(
    rng,
    dimension=2,
    n_relays=3,
    n_receivers=2,
    n_links=8,
    max_pairs=None,
    max_path_edges=None,
):
    """
    Draw one network; None when the draw is not a valid multicast instance.

    Nodes are s, r1.., T1.. in topological position; every link goes
    forward in that order, receivers never forward, parallel links allowed.
    """
    relays = [f"r{i + 1}" for i in range(n_relays)]
    receivers = [f"T{i + 1}" for i in range(n_receivers)]
    order = ["s"] + relays + receivers
    forwarding = len(order) - n_receivers

    ends = []
    for _ in range(n_links):
        tail = int(rng.integers(0, forwarding))
        head = int(rng.integers(tail + 1, len(order)))
        ends.append((tail, head))
    ends.sort()
    links = [(f"e{i + 1}", order[a], order[b]) for i, (a, b) in enumerate(ends)]
    n = MulticastNetwork.build(order, links, "s", receivers, dimension)

    if any(maxflow(n, t) < dimension for t in receivers):
        return None
    if max_pairs is not None and len(n.adjacent_pairs) > max_pairs:
        return None
    if max_path_edges is not None:
        if any(len(edge_disjoint_paths(n, t).edges) > max_path_edges for t in receivers):
            return None
    return n


def random_networks(seed, count, dimension=2, max_pairs=None, max_path_edges=None, max_attempts=None):
    """
    Yield `count` valid networks drawn from one seeded generator.

    Shape parameters are drawn per attempt so the suite mixes unicast,
    two- and three-receiver instances.
    """
    rng = np.random.default_rng(seed)
    max_attempts = max_attempts or 200 * count
    produced = 0
    if count <= 0:
        return
    for _ in range(max_attempts):
        n_receivers = int(rng.integers(1, 4))
        n_relays = int(rng.integers(1, 4))
        lo = dimension * n_receivers
        n_links = int(rng.integers(lo, lo + 2 * n_relays + 2))
        n = random_network(
            rng,
            dimension=dimension,
            n_relays=n_relays,
            n_receivers=n_receivers,
            n_links=n_links,
            max_pairs=max_pairs,
            max_path_edges=max_path_edges,
        )
        if n is not None:
            produced += 1
            yield n
            if produced >= count:
                return
    raise RuntimeError(f"produced {produced} of {count} networks in {max_attempts} draws")
