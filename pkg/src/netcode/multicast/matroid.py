from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from ..errors import ReceiverOrderError
from ..matroid.core import Matroid, is_base_orderable
from ..network.flow import is_cut
from ..registry import StepKind
from .receiver import receiver_gammoid


@dataclass(frozen=True)
class ExtensionStep:
    """
    One basis added while closing the family.

    A HEAD_CUT step seeds a later receiver's walk with its head cut; a
    PARALLEL step swaps `replaced` for its path successor `added`, turning
    `source` into `basis`.
    """

    receiver: str
    kind: str
    basis: frozenset
    path: int = None
    replaced: str = None
    added: str = None
    source: frozenset = None

    def to_document(self):
        return {
            "receiver": self.receiver,
            "kind": self.kind,
            "path": self.path,
            "replaced": self.replaced,
            "added": self.added,
            "source": sorted(self.source) if self.source is not None else None,
            "basis": sorted(self.basis),
        }


@dataclass(frozen=True)
class MulticastMatroid:
    ground: tuple
    bases: frozenset
    rank: int
    provenance: tuple = field(default=())

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- {len(self.bases)} bases of rank {self.rank} on {len(self.ground)} links"

    @cached_property
    def matroid(self):
        return Matroid(self.ground, bases=self.bases, name="multicast")

    def loops(self):
        covered = frozenset().union(*self.bases)
        return tuple(e for e in self.ground if e not in covered)

    def surplus(self, reference):
        return self.bases - frozenset(frozenset(b) for b in reference)

    def to_document(self):
        document = self.matroid.to_document()
        document["loops"] = list(self.loops())
        document["provenance"] = [step.to_document() for step in self.provenance]
        return document


def _walk(paths):
    """Every choice of one edge per path, reached by advancing one path at a time."""
    chains = paths.chains
    start = (0,) * len(chains)
    seen = {start}
    queue = deque([start])
    while queue:
        position = queue.popleft()
        basis = frozenset(chain[p] for chain, p in zip(chains, position))
        for i, chain in enumerate(chains):
            if position[i] + 1 >= len(chain):
                continue
            following = position[:i] + (position[i] + 1,) + position[i + 1 :]
            yield basis, i, chain[position[i]], chain[position[i] + 1], following
            if following not in seen:
                seen.add(following)
                queue.append(following)


def build_multicast_matroid(network, all_paths):
    """
    Start from the first receiver's gammoid and, for every later receiver,
    swap an edge for its successor on that receiver's path until no new
    basis appears. Links on no path are loops.
    """
    all_paths = tuple(all_paths)
    if tuple(ps.receiver for ps in all_paths) != network.receivers:
        raise ReceiverOrderError(
            f"path sets {[ps.receiver for ps in all_paths]} do not follow receivers {list(network.receivers)}"
        )
    bases = set(receiver_gammoid(network, all_paths[0]).bases)
    steps = []
    for paths in all_paths[1:]:
        paths.validate(network)
        head_cut = frozenset(paths.heads)
        if head_cut not in bases:
            bases.add(head_cut)
            steps.append(ExtensionStep(paths.receiver, StepKind.HEAD_CUT, head_cut))
        for basis, i, replaced, added, _ in _walk(paths):
            extended = (basis - {replaced}) | {added}
            if extended not in bases:
                bases.add(extended)
                steps.append(
                    ExtensionStep(paths.receiver, StepKind.PARALLEL, extended, i, replaced, added, basis)
                )
    return MulticastMatroid(network.real_links, frozenset(bases), network.dimension, tuple(steps))


@dataclass(frozen=True)
class RepresentationVerdict:
    ok: bool
    witness: frozenset = None
    checked: int = 0

    def __bool__(self):
        return self.ok

    def to_document(self):
        return {
            "ok": self.ok,
            "witness": sorted(self.witness) if self.witness is not None else None,
            "checked": self.checked,
        }


def verify_representation(code, gammoid, edges=None, receiver=None):
    """
    Every basis of `gammoid` must map to independent kernel columns.

    `edges` limits the check to bases inside that set; `receiver` (one node
    or several) limits it to bases that cut some such receiver off from the
    source.
    """
    if isinstance(receiver, str):
        receiver = (receiver,)
    if isinstance(gammoid, MulticastMatroid):
        gammoid = gammoid.matroid
    edges = None if edges is None else frozenset(edges)
    checked = 0
    for basis in gammoid.sorted_bases():
        basis = frozenset(basis)
        if edges is not None and not basis <= edges:
            continue
        if receiver is not None and not any(is_cut(code.network, basis, t) for t in receiver):
            continue
        checked += 1
        if code.global_kernels.rank(basis) != len(basis):
            return RepresentationVerdict(False, basis, checked)
    return RepresentationVerdict(True, None, checked)


def is_multicast_matroid_base_orderable(mm):
    return is_base_orderable(mm.matroid)
