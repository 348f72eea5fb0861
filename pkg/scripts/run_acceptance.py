import argparse
import sys

from netcode.document import dump
from netcode.log import get_logger
from netcode.suite import gammoid_equivalence_suite, lift_suite, signing_suite

# parse args
parser = argparse.ArgumentParser(description="Run every seeded property suite at acceptance size.")
parser.add_argument("--seed", type=int, default=0, help="Seed shared by all suites.")
parser.add_argument("--verbose", action="store_true")

args = parser.parse_args()
logger = get_logger(1 if args.verbose else None)

outcomes = [
    gammoid_equivalence_suite(args.seed, 200, logger=logger),
    lift_suite(args.seed, 100, logger=logger),
    signing_suite(args.seed, 1000, 100, logger=logger),
]

sys.stdout.write(dump([o.to_document() for o in outcomes]))
sys.exit(0 if all(outcomes) else 1)
