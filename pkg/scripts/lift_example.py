import argparse
import sys

from netcode import fixtures
from netcode.document import dump
from netcode.field import parse_field_spec
from netcode.lift import lift_matrix, serialize_matrix
from netcode.log import get_logger

# parse args
parser = argparse.ArgumentParser(
    description="Lift the pinned 3x21 binary kernel matrix to another field and print every stage."
)
parser.add_argument("--to", type=str, default="5", help="Target field, e.g. 5, 2^3 or 9.")
parser.add_argument("--json", action="store_true", help="Print the stage document as JSON.")
parser.add_argument("--verbose", action="store_true")

args = parser.parse_args()

result = lift_matrix(
    fixtures.kernel_b(), parse_field_spec(args.to), logger=get_logger(1 if args.verbose else None)
)

if args.json:
    sys.stdout.write(dump(result.to_document()))
else:
    print("row transform:")
    print(result.transform)
    for name, matrix in [("reduced", result.reduced), ("signed", result.signed), ("lifted", result.lifted)]:
        print(f"{name}:")
        sys.stdout.write(serialize_matrix(matrix).decode("utf-8"))
