"""Unit-capacity max-flow from the imaginary links, by augmenting paths.

Search explores links in ascending id order (forward arcs before residual
back arcs), which fixes the flow and hence the extracted paths.
"""
import functools

from ..errors import MaxflowDeficitError, UnknownNodeError
from .model import PathSet


def _augmenting_path(network, t, flow):
    visited = set()

    def visit(node):
        if node == t:
            return []
        visited.add(node)
        forward = [l for l in network.out_links(node) if l not in flow]
        for l in sorted(forward):
            head = network.link_by_id[l].head
            if head in visited:
                continue
            rest = visit(head)
            if rest is not None:
                return [(l, True)] + rest
        backward = [
            l
            for l in network.in_links(node)
            if l in flow and not network.link_by_id[l].is_imaginary
        ]
        for l in sorted(backward):
            tail = network.link_by_id[l].tail
            if tail in visited:
                continue
            rest = visit(tail)
            if rest is not None:
                return [(l, False)] + rest
        return None

    free = [l for l in network.imaginary_links if l not in flow]
    if not free:
        return None
    rest = visit(network.source)
    if rest is None:
        return None
    return [(free[0], True)] + rest


@functools.lru_cache(maxsize=4096)
def unit_flow(network, t):
    """Set of links carrying flow in the maximum flow into t."""
    if t not in set(network.nodes):
        raise UnknownNodeError(t)
    if t == network.source:
        raise ValueError("maxflow is undefined at the source")
    flow = set()
    while True:
        path = _augmenting_path(network, t, flow)
        if path is None:
            return frozenset(flow)
        for link, forward in path:
            if forward:
                flow.add(link)
            else:
                flow.discard(link)


def maxflow(network, t):
    """
    >>> maxflow(butterfly, "T1")
    2
    """
    flow = unit_flow(network, t)
    return sum(1 for l in network.imaginary_links if l in flow)


def decompose(network, t, flow):
    used = set()
    paths = []
    for imag in network.imaginary_links:
        if imag not in flow:
            continue
        path = [imag]
        node = network.source
        while node != t:
            link = min(l for l in network.out_links(node) if l in flow and l not in used)
            used.add(link)
            path.append(link)
            node = network.link_by_id[link].head
        paths.append(tuple(path))
    return tuple(paths)


def edge_disjoint_paths(network, t):
    flow = unit_flow(network, t)
    value = maxflow(network, t)
    if value < network.dimension:
        raise MaxflowDeficitError(t, value, network.dimension)
    return PathSet(t, decompose(network, t, flow))


def all_path_sets(network):
    return tuple(edge_disjoint_paths(network, t) for t in network.receivers)


def check_nodes(network):
    """Non-source nodes with maxflow >= ω, in topological order."""
    return tuple(
        v
        for v in network.topological_nodes
        if v != network.source and maxflow(network, v) >= network.dimension
    )


def is_cut(network, links, t):
    """True iff removing `links` leaves no route from the imaginary links to t."""
    removed = set(links)
    if all(l in removed for l in network.imaginary_links):
        return True
    reached = {network.source}
    frontier = [network.source]
    while frontier:
        node = frontier.pop()
        for l in network.out_links(node):
            if l in removed:
                continue
            head = network.link_by_id[l].head
            if head not in reached:
                reached.add(head)
                frontier.append(head)
    return t not in reached
