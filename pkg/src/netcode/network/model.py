from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from ..document import FrozenJSON, dump
from ..errors import (
    CycleError,
    DanglingNodeError,
    DuplicateLinkError,
    NetworkFormatError,
    UnknownNodeError,
)
from ..registry import Marker


def imaginary_id(i):
    return f"{Marker.IMAGINARY}{i}"


def is_imaginary_id(link_id):
    return link_id.startswith(Marker.IMAGINARY)


@dataclass(frozen=True)
class Link:
    id: str
    tail: str
    head: str

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- {self.id}: {self.tail} -> {self.head}"

    @property
    def is_imaginary(self):
        return self.tail == Marker.SOURCE_TAIL


@dataclass(frozen=True)
class MulticastNetwork:
    """
    Acyclic multigraph with unit-capacity links, one source and ordered receivers.

    `links` starts with the ω imaginary links "$imag1".."$imagω" (tail
    marker, head = source) followed by the real links in document order;
    this is also the column order of every global kernel matrix.

    >>> n = MulticastNetwork.build(["s", "t"], [("e1", "s", "t"), ("e2", "s", "t")], "s", ["t"], 2)
    >>> [l.id for l in n.links]
    ['$imag1', '$imag2', 'e1', 'e2']
    """

    nodes: tuple
    links: tuple
    source: str
    receivers: tuple
    dimension: int

    def __post_init__(self):
        if not isinstance(self.dimension, int) or self.dimension < 1:
            raise NetworkFormatError(f"dimension must be a positive integer, got {self.dimension}")
        if len(set(self.nodes)) != len(self.nodes):
            raise NetworkFormatError("duplicate node id")
        if any(not isinstance(v, str) or v == Marker.SOURCE_TAIL for v in self.nodes):
            raise NetworkFormatError("node ids must be strings other than the reserved tail marker")
        nodes = set(self.nodes)
        if self.source not in nodes:
            raise NetworkFormatError(f"source {self.source} is not a node")
        if not self.receivers:
            raise NetworkFormatError("receivers must be nonempty")
        if len(set(self.receivers)) != len(self.receivers):
            raise NetworkFormatError("duplicate receiver")
        for t in self.receivers:
            if t not in nodes:
                raise NetworkFormatError(f"receiver {t} is not a node")
            if t == self.source:
                raise NetworkFormatError("the source cannot be a receiver")

        seen = set()
        imaginary = []
        for link in self.links:
            if link.id in seen:
                raise DuplicateLinkError(link.id)
            seen.add(link.id)
            if link.is_imaginary:
                if link.head != self.source or not is_imaginary_id(link.id):
                    raise NetworkFormatError(f"imaginary link {link.id} must be {Marker.IMAGINARY}i into the source")
                imaginary.append(link.id)
                continue
            if is_imaginary_id(link.id):
                raise NetworkFormatError(f"link id {link.id} uses the reserved prefix {Marker.IMAGINARY}")
            for end in (link.tail, link.head):
                if end not in nodes:
                    raise DanglingNodeError(link.id, end)
        expected = tuple(imaginary_id(i + 1) for i in range(self.dimension))
        if tuple(imaginary) != expected or tuple(l.id for l in self.links[: self.dimension]) != expected:
            raise NetworkFormatError(f"expected imaginary links {expected} first")

        try:
            cycle = nx.find_cycle(self.graph)
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle:
            raise CycleError([arc[0] for arc in cycle] + [cycle[-1][1]])

    def __repr__(self):
        return (
            f"<{self.__class__.__name__}> -- {len(self.nodes)} nodes, "
            f"{len(self.real_links)} links, source {self.source}, "
            f"receivers {list(self.receivers)}, dimension {self.dimension}"
        )

    @staticmethod
    def build(nodes, links, source, receivers, dimension):
        """Create a network from real links; the imaginary links are generated."""
        imaginary = tuple(
            Link(imaginary_id(i + 1), Marker.SOURCE_TAIL, source) for i in range(dimension)
        )
        real = tuple(l if isinstance(l, Link) else Link(*l) for l in links)
        return MulticastNetwork(
            tuple(nodes), imaginary + real, source, tuple(receivers), dimension
        )

    @cached_property
    def graph(self):
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.nodes)
        for link in self.links:
            if not link.is_imaginary:
                g.add_edge(link.tail, link.head, key=link.id)
        return g

    @cached_property
    def link_by_id(self):
        return {link.id: link for link in self.links}

    @cached_property
    def link_position(self):
        return {link.id: i for i, link in enumerate(self.links)}

    @property
    def link_ids(self):
        return tuple(link.id for link in self.links)

    @cached_property
    def imaginary_links(self):
        return tuple(link.id for link in self.links if link.is_imaginary)

    @cached_property
    def real_links(self):
        return tuple(link.id for link in self.links if not link.is_imaginary)

    @cached_property
    def _incidence(self):
        ins = {v: [] for v in self.nodes}
        outs = {v: [] for v in self.nodes}
        for link in self.links:
            ins[link.head].append(link.id)
            if not link.is_imaginary:
                outs[link.tail].append(link.id)
        return (
            {v: tuple(ls) for v, ls in ins.items()},
            {v: tuple(ls) for v, ls in outs.items()},
        )

    def _check_node(self, node):
        if node not in self._incidence[0]:
            raise UnknownNodeError(node)

    def in_links(self, node):
        self._check_node(node)
        return self._incidence[0][node]

    def out_links(self, node):
        self._check_node(node)
        return self._incidence[1][node]

    @cached_property
    def topological_nodes(self):
        return tuple(nx.lexicographical_topological_sort(self.graph))

    @cached_property
    def adjacent_pairs(self):
        """Every (d, e) with d in In(t), e in Out(t), sorted by (d, e)."""
        pairs = [
            (d, e)
            for v in self.nodes
            for d in self.in_links(v)
            for e in self.out_links(v)
        ]
        return tuple(sorted(pairs))


@dataclass(frozen=True)
class PathSet:
    receiver: str
    paths: tuple

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- {self.receiver}: {[list(p) for p in self.paths]}"

    @property
    def chains(self):
        """Per path, the real links only."""
        return tuple(tuple(l for l in p if not is_imaginary_id(l)) for p in self.paths)

    @property
    def edges(self):
        return frozenset(l for chain in self.chains for l in chain)

    @property
    def heads(self):
        return tuple(chain[0] for chain in self.chains)

    @property
    def successor(self):
        return {
            d: e for chain in self.chains for d, e in zip(chain, chain[1:])
        }

    def validate(self, network):
        if len(self.paths) != network.dimension:
            raise ValueError(f"expected {network.dimension} paths, got {len(self.paths)}")
        used = set()
        for path in self.paths:
            if not path or not is_imaginary_id(path[0]):
                raise ValueError(f"path {path} must start at an imaginary link")
            if network.link_by_id[path[-1]].head != self.receiver:
                raise ValueError(f"path {path} does not end in In({self.receiver})")
            for d, e in zip(path, path[1:]):
                if network.link_by_id[d].head != network.link_by_id[e].tail:
                    raise ValueError(f"({d}, {e}) is not an adjacent pair")
            if used.intersection(path):
                raise ValueError(f"paths share links {sorted(used.intersection(path))}")
            used.update(path)
        return self


def parse_network(text):
    doc = FrozenJSON.load(text, NetworkFormatError)
    try:
        dimension = doc.dimension
        links = tuple(Link(str(l.id), str(l.tail), str(l.head)) for l in doc.links)
        nodes = tuple(str(v) for v in doc.nodes)
        receivers = tuple(str(t) for t in doc.receivers)
        source = str(doc.source)
    except (AttributeError, TypeError) as e:
        raise NetworkFormatError(f"malformed network document: {e}") from e
    if isinstance(dimension, bool) or not isinstance(dimension, int):
        raise NetworkFormatError(f"dimension must be an integer, got {dimension!r}")
    return MulticastNetwork.build(nodes, links, source, receivers, dimension)


def serialize_network(n):
    return dump(
        {
            "dimension": n.dimension,
            "source": n.source,
            "receivers": list(n.receivers),
            "nodes": list(n.nodes),
            "links": [
                {"id": l.id, "tail": l.tail, "head": l.head}
                for l in n.links
                if not l.is_imaginary
            ],
        }
    ).encode("utf-8")


def augment_super_source(n):
    """
    Route the source through a fresh node when |Out(s)| > ω.

    The fresh node becomes the source; s keeps its out-links and gains ω
    real input links "$super1".."$superω".
    """
    if len(n.out_links(n.source)) <= n.dimension:
        return n
    taken = set(n.nodes)
    super_source = Marker.SUPER_SOURCE
    while super_source in taken:
        super_source += "'"
    taken_links = set(n.link_ids)
    prefix = Marker.SUPER_SOURCE
    while any(f"{prefix}{i + 1}" in taken_links for i in range(n.dimension)):
        prefix += "'"
    feeders = tuple(
        Link(f"{prefix}{i + 1}", super_source, n.source) for i in range(n.dimension)
    )
    real = tuple(l for l in n.links if not l.is_imaginary)
    return MulticastNetwork.build(
        (super_source,) + n.nodes, feeders + real, super_source, n.receivers, n.dimension
    )


def restrict(n, link_ids, receivers=None):
    """Sub-network keeping every node but only the given real links."""
    keep = set(link_ids)
    real = tuple(l for l in n.links if not l.is_imaginary and l.id in keep)
    return MulticastNetwork.build(
        n.nodes, real, n.source, receivers or n.receivers, n.dimension
    )
