import itertools
import json

import numpy as np
import pytest

from netcode import fixtures
from netcode.errors import (
    CycleError,
    DanglingNodeError,
    DuplicateLinkError,
    MaxflowDeficitError,
    NetworkFormatError,
    UnknownNodeError,
)
from netcode.network import (
    MulticastNetwork,
    all_path_sets,
    augment_super_source,
    check_nodes,
    edge_disjoint_paths,
    is_cut,
    maxflow,
    parse_network,
    restrict,
    serialize_network,
)
from netcode.network.generate import random_networks


def _document(**changes):
    doc = json.loads(fixtures.read_bytes("butterfly.json"))
    doc.update(changes)
    return json.dumps(doc)


def test_butterfly_layout(butterfly):
    assert butterfly.link_ids[:2] == ("$imag1", "$imag2")
    assert butterfly.real_links == tuple(f"e{i}" for i in range(1, 10))
    assert butterfly.topological_nodes == ("s", "u", "v", "w", "x", "T1", "T2")
    assert len(butterfly.adjacent_pairs) == 12
    assert butterfly.adjacent_pairs[:5] == (
        ("$imag1", "e1"),
        ("$imag1", "e2"),
        ("$imag2", "e1"),
        ("$imag2", "e2"),
        ("e1", "e3"),
    )
    assert butterfly.in_links("w") == ("e3", "e4")
    assert butterfly.out_links("T1") == ()


def test_butterfly_maxflow_and_paths(butterfly):
    assert [maxflow(butterfly, t) for t in butterfly.receivers] == [2, 2]
    assert check_nodes(butterfly) == ("w", "T1", "T2")
    p1, p2 = all_path_sets(butterfly)
    assert p1.paths == (("$imag1", "e1", "e5"), ("$imag2", "e2", "e4", "e6", "e8"))
    assert p2.paths == (("$imag1", "e1", "e3", "e6", "e9"), ("$imag2", "e2", "e7"))
    assert p1.edges == {"e1", "e2", "e4", "e5", "e6", "e8"}
    assert p2.edges == {"e1", "e2", "e3", "e6", "e7", "e9"}
    assert p1.heads == ("e1", "e2")
    assert p1.successor == {"e1": "e5", "e2": "e4", "e4": "e6", "e6": "e8"}


def test_maxflow_below_dimension(butterfly):
    cut = restrict(butterfly, [l for l in butterfly.real_links if l != "e5"])
    assert maxflow(cut, "T1") == 1
    assert maxflow(cut, "T2") == 2
    with pytest.raises(MaxflowDeficitError) as e:
        edge_disjoint_paths(cut, "T1")
    assert (e.value.node, e.value.maxflow, e.value.dimension) == ("T1", 1, 2)


def test_unknown_node(butterfly):
    with pytest.raises(UnknownNodeError):
        butterfly.in_links("nowhere")
    with pytest.raises(UnknownNodeError):
        maxflow(butterfly, "nowhere")


def test_is_cut(butterfly):
    assert is_cut(butterfly, {"e1", "e2"}, "T1")
    assert is_cut(butterfly, {"e5", "e8"}, "T1")
    assert not is_cut(butterfly, {"e4", "e5"}, "T1")
    assert not is_cut(butterfly, {"e5", "e8"}, "T2")


def test_serialize_round_trip(butterfly):
    raw = serialize_network(butterfly)
    assert raw == fixtures.read_bytes("butterfly.json")
    assert parse_network(raw) == butterfly


def test_cycle_rejected():
    doc = json.loads(_document())
    doc["links"].append({"id": "back", "tail": "x", "head": "u"})
    with pytest.raises(CycleError):
        parse_network(json.dumps(doc))


def test_duplicate_and_dangling_links():
    doc = json.loads(_document())
    doc["links"].append(dict(doc["links"][0]))
    with pytest.raises(DuplicateLinkError):
        parse_network(json.dumps(doc))
    doc = json.loads(_document())
    doc["links"].append({"id": "e10", "tail": "x", "head": "y"})
    with pytest.raises(DanglingNodeError) as e:
        parse_network(json.dumps(doc))
    assert e.value.node == "y"


@pytest.mark.parametrize(
    "raw",
    [
        "not json",
        b'{"dimension": 2, "source": "\xff"}',
        "[]",
        json.dumps({"dimension": 2, "source": "s"}),
        _document(dimension="2"),
        _document(dimension=0),
        _document(receivers=[]),
        _document(receivers=["s"]),
        _document(source="nowhere"),
    ],
)
def test_malformed_documents(raw):
    with pytest.raises(NetworkFormatError):
        parse_network(raw)


def test_reserved_link_prefix():
    with pytest.raises(NetworkFormatError):
        MulticastNetwork.build(["s", "t"], [("$imag9", "s", "t")], "s", ["t"], 1)


def test_augment_super_source():
    n = MulticastNetwork.build(
        ["s", "t"], [("a", "s", "t"), ("b", "s", "t"), ("c", "s", "t")], "s", ["t"], 2
    )
    augmented = augment_super_source(n)
    assert augmented.source == "$super"
    assert augmented.in_links("s") == ("$super1", "$super2")
    assert maxflow(augmented, "t") == 2
    butterfly = fixtures.butterfly()
    assert augment_super_source(butterfly) is butterfly


def test_random_networks_are_seeded_and_valid():
    first = list(random_networks(7, 5, max_pairs=12))
    again = list(random_networks(7, 5, max_pairs=12))
    assert first == again
    assert len(first) == 5
    for n in first:
        assert len(n.adjacent_pairs) <= 12
        assert all(maxflow(n, t) >= n.dimension for t in n.receivers)


def _random_dag(rng, max_links=8):
    """Unfiltered forward-link network; receivers may be starved or unreachable."""
    relays = [f"r{i + 1}" for i in range(int(rng.integers(0, 3)))]
    receivers = [f"T{i + 1}" for i in range(int(rng.integers(1, 3)))]
    order = ["s"] + relays + receivers
    forwarding = len(order) - len(receivers)
    links = []
    for i in range(int(rng.integers(1, max_links + 1))):
        tail = int(rng.integers(0, forwarding))
        head = int(rng.integers(tail + 1, len(order)))
        links.append((f"e{i + 1}", order[tail], order[head]))
    return MulticastNetwork.build(order, links, "s", receivers, int(rng.integers(1, 3)))


def _min_cut(n, t):
    for size in range(len(n.real_links) + 1):
        if size >= n.dimension:
            return n.dimension
        for C in itertools.combinations(n.real_links, size):
            if is_cut(n, C, t):
                return size
    return n.dimension


def test_maxflow_matches_exhaustive_min_cut():
    rng = np.random.default_rng(3)
    for _ in range(150):
        n = _random_dag(rng)
        for t in n.receivers:
            assert maxflow(n, t) == _min_cut(n, t), (n.links, t)


def test_augment_super_source_keeps_every_maxflow():
    rng = np.random.default_rng(4)
    augmented_any = False
    for _ in range(150):
        n = _random_dag(rng)
        augmented = augment_super_source(n)
        augmented_any = augmented_any or augmented is not n
        for t in n.receivers:
            assert maxflow(augmented, t) == maxflow(n, t)
    assert augmented_any
