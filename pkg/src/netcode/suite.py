"""Seeded property suites over random networks and matrices."""
import itertools
from dataclasses import dataclass, field

import numpy as np

from .coding.construct import brute_force_solve
from .coding.linear_code import verify_multicast
from .errors import NetcodeError
from .field import GF2, parse_field_spec
from .lift.matrix import BinaryMatrix, SignedMatrix, juxtapose_kernels
from .lift.pipeline import lift_matrix, lift_pipeline
from .lift.unimodular import verify_tu
from .log import or_silent
from .matroid.core import is_base_orderable, satisfies_basis_exchange
from .multicast.matroid import build_multicast_matroid, verify_representation
from .multicast.receiver import gammoid_direct_oracle, receiver_gammoid
from .network.flow import all_path_sets
from .network.generate import random_networks

LIFT_FIELDS = ("3", "2^2", "5", "7", "2^3", "3^2")


@dataclass
class SuiteOutcome:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def __bool__(self):
        return not self.failures

    def count(self, key, by=1):
        self.stats[key] = self.stats.get(key, 0) + by

    def to_document(self):
        return {
            "name": self.name,
            "ok": not self.failures,
            "checked": self.checked,
            "failures": self.failures,
            "stats": dict(sorted(self.stats.items())),
        }


def representation_checks(network, code, outcome, where=None):
    """Cut bases of every receiver gammoid and of the multicast family must be independent."""
    where = where or {}
    all_paths = all_path_sets(network)
    for paths in all_paths:
        gammoid = receiver_gammoid(network, paths)
        verdict = verify_representation(code, gammoid, receiver=paths.receiver)
        outcome.count("cut_bases", verdict.checked)
        if not verdict:
            outcome.failures.append(
                {**where, "receiver": paths.receiver, "witness": sorted(verdict.witness)}
            )
        if not verify_representation(code, gammoid):
            outcome.count("dependent_non_cut_bases")
    mm = build_multicast_matroid(network, all_paths)
    verdict = verify_representation(code, mm, receiver=network.receivers)
    if not verdict:
        outcome.failures.append(
            {**where, "receiver": "multicast", "witness": sorted(verdict.witness)}
        )


def _identity(transform):
    return np.array_equal(transform, np.eye(len(transform), dtype=transform.dtype))


def _mixed_rows(b):
    """Row-equivalent copy of b whose first column is all ones, so no identity transform fits."""
    mix = np.eye(b.rows, dtype=np.int64)
    mix[:, 0] = 1
    return BinaryMatrix(b.labels, (mix @ b.values) % 2)


def lift_suite(seed=0, solvable=100, fields=LIFT_FIELDS, max_pairs=12, dimensions=(2, 3), logger=None):
    """
    Every GF(2)-solvable random network lifts to every target field, and
    its binary solution represents the cut bases of each receiver gammoid.

    `solvable` instances are drawn per dimension. From ω = 3 on, a
    row-mixed copy of each kernel matrix is lifted as well, which forces a
    non-identity graphic transform.
    """
    logger = or_silent(logger)
    specs = [parse_field_spec(f) for f in fields]
    outcome = SuiteOutcome("lift")
    logger.on_session_start(outcome.name, seed=seed, solvable=solvable, dimensions=list(dimensions))
    for dimension in dimensions:
        found = 0
        networks = random_networks(seed, 20 * solvable, dimension=dimension, max_pairs=max_pairs)
        for index, network in enumerate(networks):
            if found >= solvable:
                break
            code = brute_force_solve(network, GF2)
            if code is None:
                outcome.count("unsolvable")
                continue
            found += 1
            outcome.checked += 1
            outcome.count(f"solvable_w{dimension}")
            where = {"dimension": dimension, "network": index}
            for spec in specs:
                try:
                    result = lift_pipeline(network, code, spec)
                    if not verify_multicast(result.code):
                        raise NetcodeError("lifted code is not a linear multicast")
                except NetcodeError as e:
                    outcome.failures.append({**where, "field": str(spec), "error": str(e)})
                    continue
                if spec == specs[0] and not _identity(result.transform):
                    outcome.count("pipeline_row_transformed")
            if dimension >= 3:
                try:
                    mixed = lift_matrix(_mixed_rows(juxtapose_kernels(code)), specs[0])
                    if not _identity(mixed.transform):
                        outcome.count("row_transformed")
                except NetcodeError as e:
                    outcome.failures.append({**where, "mixed_rows": True, "error": str(e)})
            representation_checks(network, code, outcome, where)
            logger.log_progress(**where, checked=outcome.checked, failures=len(outcome.failures))
    logger.on_session_end(**outcome.to_document())
    return outcome



def gammoid_equivalence_suite(seed=0, count=200, max_path_edges=12, logger=None):
    """
    Independence through H agrees with the direct max-flow oracle on every
    subset. The oracle's network mode, which may route along any adjacency
    among the path edges, is tallied against H without failing the suite.
    """
    logger = or_silent(logger)
    outcome = SuiteOutcome("gammoid_equivalence")
    outcome.stats.update(network_agree=0, network_mismatch=0)
    logger.on_session_start(outcome.name, seed=seed, count=count)
    for index, network in enumerate(
        random_networks(seed, count, max_path_edges=max_path_edges)
    ):
        all_paths = all_path_sets(network)
        for paths in all_paths:
            gammoid = receiver_gammoid(network, paths)
            ground = sorted(paths.edges)
            for size in range(len(ground) + 1):
                for X in itertools.combinations(ground, size):
                    outcome.checked += 1
                    independent = gammoid.is_independent(X)
                    if independent != gammoid_direct_oracle(network, paths, X):
                        outcome.failures.append(
                            {"network": index, "receiver": paths.receiver, "subset": list(X)}
                        )
                    if independent == gammoid_direct_oracle(network, paths, X, follow="network"):
                        outcome.count("network_agree")
                        continue
                    outcome.count("network_mismatch")
                    outcome.stats.setdefault(
                        "first_network_mismatch",
                        {
                            "network": index,
                            "receiver": paths.receiver,
                            "subset": list(X),
                            "independent": independent,
                            "paths": [list(p) for p in paths.paths],
                        },
                    )
            if not is_base_orderable(gammoid):
                outcome.failures.append(
                    {"network": index, "receiver": paths.receiver, "not_base_orderable": True}
                )
        mm = build_multicast_matroid(network, all_paths).matroid
        if satisfies_basis_exchange(mm):
            outcome.count("multicast_matroidal")
            if not is_base_orderable(mm):
                outcome.failures.append({"network": index, "multicast_not_base_orderable": True})
        else:
            outcome.count("multicast_not_matroidal")
        logger.log_progress(network=index, checked=outcome.checked)
    logger.on_session_end(**outcome.to_document())
    return outcome


def _random_signed_column(rng, n_rows, proper):
    column = np.zeros(n_rows, dtype=np.int64)
    if proper:
        kind = int(rng.integers(0, 4))
        rows = rng.permutation(n_rows)
        if kind == 1:
            column[rows[0]] = 1
        elif kind == 2:
            column[rows[0]] = -1
        elif kind == 3 and n_rows > 1:
            column[rows[0]], column[rows[1]] = 1, -1
        return column
    weight = int(rng.integers(2, n_rows + 1))
    picked = rng.permutation(n_rows)[:weight]
    column[picked] = rng.choice([-1, 1], size=weight)
    if weight == 2:
        column[picked] = rng.choice([-1, 1])
    return column


def random_signed_matrix(rng, proper, max_rows=4, max_columns=6):
    """
    Proper: every column has at most one +1 and one -1. Otherwise one
    column carries two equal signs or three or more nonzeros.
    """
    n_rows = int(rng.integers(1 if proper else 2, max_rows + 1))
    n_cols = int(rng.integers(1, max_columns + 1))
    columns = [_random_signed_column(rng, n_rows, True) for _ in range(n_cols)]
    if not proper:
        columns[int(rng.integers(0, n_cols))] = _random_signed_column(rng, n_rows, False)
    values = np.stack(columns, axis=1)
    return SignedMatrix(tuple(f"c{j + 1}" for j in range(n_cols)), values)


def signing_suite(seed=0, proper=1000, violating=100, logger=None):
    """Properly signed matrices are always TU; violating ones are only tallied."""
    logger = or_silent(logger)
    rng = np.random.default_rng(seed)
    outcome = SuiteOutcome("tu_signing")
    logger.on_session_start(outcome.name, seed=seed)
    for index in range(proper):
        s = random_signed_matrix(rng, proper=True)
        outcome.checked += 1
        if not verify_tu(s):
            outcome.failures.append({"matrix": index, "rows": s.values.tolist()})
    for _ in range(violating):
        s = random_signed_matrix(rng, proper=False)
        outcome.count("violating_tu" if verify_tu(s) else "violating_not_tu")
    logger.on_session_end(**outcome.to_document())
    return outcome
