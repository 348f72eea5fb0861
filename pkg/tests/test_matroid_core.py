import itertools

import numpy as np
import pytest

from netcode import fixtures
from netcode.errors import BudgetExceededError, GroundSetError
from netcode.matroid import (
    BipartiteSystem,
    LinkageInstance,
    Matroid,
    dual,
    free_matroid,
    is_base_orderable,
    matroids_equal,
    parallel_extension,
    series_extension,
    strict_gammoid,
    transversal_matroid,
    uniform_matroid,
    vector_matroid,
)
from netcode.matroid.core import (
    basis_exchange_violation,
    cycle_matroid,
    exchange_ordering,
    exchange_ordering_by_scan,
    satisfies_basis_exchange,
)
from netcode.matroid.gammoid import gammoid_from_transversal_system, linkage_transversal_system
from netcode.field import GF2

K4 = {f"{u}{v}": (u, v) for u, v in itertools.combinations(range(4), 2)}


def test_uniform_matroid():
    m = uniform_matroid(2, "abcd")
    assert m.rank() == 2
    assert len(m.bases) == 6
    assert m.is_independent({"a", "c"})
    assert not m.is_independent({"a", "b", "c"})
    assert satisfies_basis_exchange(m)
    assert is_base_orderable(m)


def test_three_views_agree():
    by_rank = uniform_matroid(2, "abc")
    by_bases = Matroid("abc", bases=by_rank.bases)
    by_oracle = Matroid("abc", independence=lambda X: len(X) <= 2)
    assert matroids_equal(by_rank, by_bases)
    assert matroids_equal(by_bases, by_oracle)
    assert by_oracle.rank({"a", "b", "c"}) == 2


def test_constructor_checks():
    with pytest.raises(ValueError):
        Matroid("ab")
    with pytest.raises(ValueError):
        Matroid("abc", bases=[{"a"}, {"b", "c"}])
    with pytest.raises(GroundSetError):
        Matroid("ab", bases=[{"z"}])
    with pytest.raises(GroundSetError):
        free_matroid("ab").is_independent({"q"})


def test_dual_rank_formula():
    m = uniform_matroid(2, "abcd")
    assert matroids_equal(dual(m), m)
    assert dual(free_matroid("abc")).rank() == 0
    assert dual(uniform_matroid(1, "abc")).bases == uniform_matroid(2, "abc").bases


def test_extensions():
    m = uniform_matroid(1, "ab")
    assert series_extension(m, "a", "c").bases == uniform_matroid(2, "abc").bases
    assert parallel_extension(free_matroid("ab"), "a", "c").bases == {
        frozenset("ab"),
        frozenset("cb"),
    }
    with pytest.raises(ValueError):
        parallel_extension(m, "a", "b")


def test_matroids_equal_requires_same_ground():
    with pytest.raises(GroundSetError):
        matroids_equal(free_matroid("ab"), free_matroid("abc"))


def test_restrict_and_loops():
    m = vector_matroid(GF2.array([[1, 0, 1], [0, 0, 1]]), ["a", "z", "b"])
    assert m.loops() == ("z",)
    r = m.restrict({"a", "b"})
    assert r.ground == ("a", "b")
    assert r.rank() == 2


def test_fano_vector_matroid():
    fano = fixtures.fano()
    m = vector_matroid(fano.over(GF2), fano.labels)
    assert m.rank() == 3
    assert not m.is_independent({"f1", "f2", "f4"})
    assert m.is_independent({"f1", "f2", "f3"})
    assert len(m.bases) == 28


def test_k4_is_not_base_orderable():
    m = cycle_matroid(K4)
    assert len(m.bases) == 16
    assert satisfies_basis_exchange(m)
    verdict = is_base_orderable(m)
    assert not verdict
    b1, b2 = verdict.failing_pair
    assert exchange_ordering(m, b1, b2) is None
    assert exchange_ordering_by_scan(m, b1, b2) is None


def test_exchange_ordering_matches_scan():
    m = uniform_matroid(2, "abcd")
    b1, b2 = frozenset("ab"), frozenset("cd")
    pi = exchange_ordering(m, b1, b2)
    assert set(pi) == b1 and set(pi.values()) == b2
    assert exchange_ordering_by_scan(m, b1, b2) is not None


def test_non_matroid_family():
    m = Matroid("abcd", bases=[{"a", "b"}, {"c", "d"}])
    assert not satisfies_basis_exchange(m)
    b1, b2, x = basis_exchange_violation(m)
    assert x in b1 - b2


def test_basis_enumeration_cap():
    with pytest.raises(BudgetExceededError):
        uniform_matroid(1, range(21)).bases


def test_transversal_matroid():
    system = BipartiteSystem.from_family({"A1": {"a", "b"}, "A2": {"b"}})
    m = transversal_matroid(system)
    assert m.rank() == 2
    assert m.is_independent({"a", "b"})
    assert m.is_independent({"b"})
    assert m.bases == {frozenset("ab")}


def test_strict_gammoid():
    inst = LinkageInstance(("a", "b", "c", "d"), (("a", "b"), ("b", "d"), ("c", "d")), frozenset("d"))
    m = strict_gammoid(inst)
    assert m.rank() == 1
    assert m.is_independent({"a"})
    assert not m.is_independent({"a", "c"})


def test_strict_gammoid_dual_is_transversal():
    inst = LinkageInstance(
        ("a", "b", "c", "d", "e"),
        (("a", "b"), ("a", "c"), ("b", "d"), ("c", "e"), ("c", "d")),
        frozenset("de"),
    )
    assert matroids_equal(
        dual(strict_gammoid(inst)), transversal_matroid(linkage_transversal_system(inst))
    )


def test_gammoid_from_transversal_system():
    system = BipartiteSystem.from_family({"A1": {"a", "b", "c"}, "A2": {"b", "d"}})
    inst = gammoid_from_transversal_system(system)
    assert matroids_equal(strict_gammoid(inst), dual(transversal_matroid(system)))


def _random_instance(rng, max_nodes=7):
    nodes = tuple(f"v{i}" for i in range(int(rng.integers(2, max_nodes + 1))))
    arcs = tuple(
        (u, v)
        for u, v in itertools.permutations(nodes, 2)
        if rng.random() < 0.3
    )
    size = int(rng.integers(1, len(nodes) + 1))
    targets = frozenset(rng.choice(nodes, size=size, replace=False).tolist())
    return LinkageInstance(nodes, arcs, targets)


def _random_matroid(rng):
    n = int(rng.integers(1, 8))
    ground = tuple(f"x{i}" for i in range(n))
    kind = int(rng.integers(0, 4))
    if kind == 0:
        return uniform_matroid(int(rng.integers(0, n + 1)), ground)
    if kind == 1:
        return vector_matroid(GF2.array(rng.integers(0, 2, size=(3, n))), ground)
    if kind == 2:
        return cycle_matroid({x: tuple(rng.choice(4, size=2).tolist()) for x in ground})
    return strict_gammoid(_random_instance(rng))


def test_dual_is_an_involution():
    rng = np.random.default_rng(21)
    for _ in range(50):
        m = _random_matroid(rng)
        assert matroids_equal(dual(dual(m)), m), m


def test_strict_gammoid_transversal_duality_on_random_digraphs():
    rng = np.random.default_rng(22)
    for _ in range(40):
        inst = _random_instance(rng)
        assert matroids_equal(
            dual(strict_gammoid(inst)), transversal_matroid(linkage_transversal_system(inst))
        ), inst


def test_gammoid_from_random_transversal_systems():
    rng = np.random.default_rng(23)
    realized = 0
    for _ in range(60):
        left = tuple(f"x{i}" for i in range(int(rng.integers(2, 8))))
        family = {
            f"A{j + 1}": {x for x in left if rng.random() < 0.4}
            for j in range(int(rng.integers(1, len(left))))
        }
        system = BipartiteSystem.from_family(family, left=left)
        try:
            inst = gammoid_from_transversal_system(system)
        except ValueError:
            continue
        realized += 1
        assert matroids_equal(strict_gammoid(inst), dual(transversal_matroid(system))), family
    assert realized >= 10


def test_random_gammoids_and_restrictions_are_base_orderable():
    rng = np.random.default_rng(24)
    for _ in range(30):
        m = strict_gammoid(_random_instance(rng))
        assert is_base_orderable(m)
        keep = [x for x in m.ground if rng.random() < 0.7]
        assert is_base_orderable(m.restrict(keep))


def test_constructed_matroids_satisfy_basis_exchange():
    rng = np.random.default_rng(25)
    for _ in range(40):
        m = _random_matroid(rng)
        assert satisfies_basis_exchange(m), m
        assert satisfies_basis_exchange(dual(m))
        system = BipartiteSystem.from_family(
            {f"A{j}": {x for x in m.ground if rng.random() < 0.5} for j in range(3)},
            left=m.ground,
        )
        assert satisfies_basis_exchange(transversal_matroid(system))
