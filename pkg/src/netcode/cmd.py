"""
The `netcode` command line.

>>> netcode check --network butterfly.json
>>> netcode solve --network butterfly.json --field 2 --out code.json
>>> netcode lift --network butterfly.json --code code.json --to 7 --json
"""
import argparse
import sys
import time

from .coding.construct import BruteForceSearch, jaggi_sanders_construct
from .coding.document import code_document, parse_code, serialize_code
from .coding.linear_code import subspace_dim, verify_multicast
from .errors import InputError, NetcodeError, UnknownNodeError
from .field import format_field_spec, parse_field_spec
from .lift.matrix import BinaryMatrix, SignedMatrix, parse_matrix, serialize_matrix
from .lift.pipeline import lift_matrix, lift_pipeline
from .lift.unimodular import verify_tu
from .log import get_logger
from .matroid.core import is_base_orderable, satisfies_basis_exchange
from .multicast.matroid import build_multicast_matroid, verify_representation
from .multicast.receiver import receiver_gammoid
from .network.flow import all_path_sets, check_nodes, edge_disjoint_paths, maxflow
from .network.model import parse_network
from .registry import Command, ExitCode
from .report import RunReport
from .suite import gammoid_equivalence_suite, lift_suite, signing_suite


def _read(report, name, path):
    with open(path, "rb") as f:
        raw = f.read()
    report.add_input(name, raw)
    return raw


def _write(path, raw):
    with open(path, "wb") as f:
        f.write(raw)


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"{args.command} needs {' '.join(missing)}")


def _network(args, report):
    _require(args, "network")
    return parse_network(_read(report, "network", args.network))


def _code(args, report, network):
    _require(args, "code")
    return parse_code(_read(report, "code", args.code), network)


def _receiver(network, value):
    """A receiver node id, or its 1-based position among the receivers."""
    if value in network.receivers:
        return value
    if value.isdigit() and 1 <= int(value) <= len(network.receivers):
        return network.receivers[int(value) - 1]
    raise UnknownNodeError(value)


def run_check(args, report, logger):
    network = _network(args, report)
    flows = {t: maxflow(network, t) for t in network.receivers}
    deficits = [t for t, value in flows.items() if value < network.dimension]
    report.outputs["dimension"] = network.dimension
    report.outputs["maxflow"] = flows
    report.outputs["paths"] = {
        t: [list(p) for p in edge_disjoint_paths(network, t).paths]
        for t in network.receivers
        if t not in deficits
    }
    report.outputs["deficits"] = deficits
    report.verdict = "deficit" if deficits else "ok"
    return ExitCode.NEGATIVE if deficits else ExitCode.OK


def run_solve(args, report, logger):
    network = _network(args, report)
    spec = parse_field_spec(args.field)
    report.outputs["field"] = format_field_spec(spec)
    if spec.order <= len(network.receivers):
        report.outputs["method"] = "brute_force"
        search = BruteForceSearch(network, spec, logger=logger)
        code = search.run()
        report.outputs["search"] = search.stats
        if code is None:
            report.verdict = f"no GF({spec}) solution"
            return ExitCode.NEGATIVE
    else:
        report.outputs["method"] = "jaggi_sanders"
        code = jaggi_sanders_construct(network, spec, logger)
    report.outputs["code"] = code_document(code, "local")
    if args.out is not None:
        _write(args.out, serialize_code(code))
    report.verdict = "solved"
    return ExitCode.OK


def run_verify(args, report, logger):
    network = _network(args, report)
    code = _code(args, report, network)
    verdict = verify_multicast(code)
    report.outputs["dimensions"] = {t: subspace_dim(code, t) for t in check_nodes(network)}
    report.outputs["multicast"] = verdict.to_document()
    report.verdict = "linear multicast" if verdict else "not a linear multicast"
    return ExitCode.OK if verdict else ExitCode.NEGATIVE


def run_matroid(args, report, logger):
    network = _network(args, report)
    receiver = None if args.receiver is None else _receiver(network, args.receiver)
    all_paths = all_path_sets(network)
    code = _code(args, report, network) if args.code is not None else None
    ok = True
    gammoids = {}
    for paths in all_paths:
        if receiver is not None and paths.receiver != receiver:
            continue
        m = receiver_gammoid(network, paths)
        gammoids[paths.receiver] = document = m.to_document()
        if code is not None:
            verdict = verify_representation(code, m, receiver=paths.receiver)
            document["represented"] = verdict.to_document()
            ok = ok and verdict.ok
    report.outputs["gammoids"] = gammoids
    if args.multicast:
        mm = build_multicast_matroid(network, all_paths)
        document = mm.to_document()
        document["basis_exchange"] = satisfies_basis_exchange(mm.matroid)
        document["base_orderable"] = is_base_orderable(mm.matroid).to_document()
        if code is not None:
            verdict = verify_representation(code, mm, receiver=network.receivers)
            document["represented"] = verdict.to_document()
            ok = ok and verdict.ok
        report.outputs["multicast"] = document
    report.verdict = "ok" if ok else "not represented"
    return ExitCode.OK if ok else ExitCode.NEGATIVE


def run_lift(args, report, logger):
    _require(args, "to")
    spec = parse_field_spec(args.to)
    if args.matrix is not None:
        b = parse_matrix(_read(report, "matrix", args.matrix), BinaryMatrix)
        result = lift_matrix(b, spec, logger=logger)
        if args.out is not None:
            _write(args.out, serialize_matrix(result.lifted))
    else:
        network = _network(args, report)
        code = _code(args, report, network)
        verdict = verify_multicast(code)
        if not verdict:
            report.outputs["multicast"] = verdict.to_document()
            report.verdict = "input code is not a linear multicast"
            return ExitCode.NEGATIVE
        result = lift_pipeline(network, code, spec, logger=logger)
        if args.out is not None:
            _write(args.out, serialize_code(result.code))
    report.outputs["lift"] = result.to_document()
    report.verdict = f"lifted to GF({spec})"
    return ExitCode.OK


def run_verify_tu(args, report, logger):
    _require(args, "matrix")
    s = parse_matrix(_read(report, "matrix", args.matrix), SignedMatrix)
    verdict = verify_tu(s)
    report.outputs["tu"] = verdict.to_document()
    report.verdict = "totally unimodular" if verdict else "not totally unimodular"
    return ExitCode.OK if verdict else ExitCode.NEGATIVE


SUITES = {
    "lift": lambda seed, count, logger: lift_suite(seed, count, logger=logger),
    "gammoid": lambda seed, count, logger: gammoid_equivalence_suite(seed, count, logger=logger),
    "signing": lambda seed, count, logger: signing_suite(seed, count, logger=logger),
}


def run_suite(args, report, logger):
    kinds = sorted(SUITES) if args.kind == "all" else [args.kind]
    ok = True
    for kind in kinds:
        count = args.count
        if count is None:
            count = {"lift": 100, "gammoid": 200, "signing": 1000}[kind]
        outcome = SUITES[kind](args.seed, count, logger)
        report.outputs[outcome.name] = outcome.to_document()
        ok = ok and bool(outcome)
    report.verdict = "ok" if ok else "failures"
    return ExitCode.OK if ok else ExitCode.NEGATIVE


COMMANDS = {
    Command.CHECK: run_check,
    Command.SOLVE: run_solve,
    Command.VERIFY: run_verify,
    Command.MATROID: run_matroid,
    Command.LIFT: run_lift,
    Command.VERIFY_TU: run_verify_tu,
    Command.SUITE: run_suite,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="netcode",
        description="Linear network coding, multicast matroids and GF(2) solution lifting.",
    )
    parser.add_argument("--json", action="store_true", help="Print the report as JSON.")
    parser.add_argument("--timing", action="store_true", help="Attach wall-clock timing to the report.")
    parser.add_argument("--verbose", action="store_true", help="Print progress records to stderr.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(Command.CHECK, help="Validate a network and report maxflow and paths.")
    p.add_argument("--network", required=True, help="Network JSON document.")

    p = sub.add_parser(Command.SOLVE, help="Find a linear multicast over a field.")
    p.add_argument("--network", required=True, help="Network JSON document.")
    p.add_argument("--field", default="2", help='Field order as "p", "p^k" or "q".')
    p.add_argument("--out", help="Write the code document here.")

    p = sub.add_parser(Command.VERIFY, help="Check that a code is a linear multicast.")
    p.add_argument("--network", required=True, help="Network JSON document.")
    p.add_argument("--code", required=True, help="Code JSON document.")

    p = sub.add_parser(Command.MATROID, help="Report receiver gammoids and the multicast matroid.")
    p.add_argument("--network", required=True, help="Network JSON document.")
    p.add_argument("--receiver", help="Limit the gammoid report to one receiver: its node id or 1-based index.")
    p.add_argument("--multicast", action="store_true", help="Also build the multicast matroid.")
    p.add_argument("--code", help="Check which cut bases the code represents.")

    p = sub.add_parser(Command.LIFT, help="Lift a GF(2) solution or binary matrix to another field.")
    p.add_argument("--network", help="Network JSON document.")
    p.add_argument("--code", help="GF(2) code JSON document.")
    p.add_argument("--matrix", help="Binary matrix text file (topology-free mode).")
    p.add_argument("--to", required=True, help="Target field.")
    p.add_argument("--out", help="Write the lifted code or matrix here.")

    p = sub.add_parser(Command.VERIFY_TU, help="Exhaustive total unimodularity check.")
    p.add_argument("--matrix", required=True, help="Signed matrix text file.")

    p = sub.add_parser(Command.SUITE, help="Run a seeded property suite.")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, help="Suite size (solvable instances per dimension for lift); defaults to the acceptance size.")
    p.add_argument("--kind", choices=sorted(SUITES) + ["all"], default="lift")
    return parser


def _arguments(args):
    hidden = {"json", "timing", "verbose"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in hidden}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logger = get_logger(1 if args.verbose else None)
    report = RunReport(args.command, _arguments(args))
    started = time.perf_counter()
    try:
        code = COMMANDS[args.command](args, report, logger)
    except (InputError, UnknownNodeError, OSError) as e:
        print(f"netcode {args.command}: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    except NetcodeError as e:
        report.verdict = type(e).__name__
        report.outputs["error"] = str(e)
        code = ExitCode.NEGATIVE
    if args.timing:
        report.timing = {"seconds": round(time.perf_counter() - started, 6)}
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
