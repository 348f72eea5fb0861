import pytest

from netcode import fixtures
from netcode.coding.linear_code import LinearCode, LocalKernels
from netcode.field import GF2

XOR = {
    ("$imag1", "e1"): 1,
    ("$imag2", "e2"): 1,
    ("e1", "e3"): 1,
    ("e1", "e5"): 1,
    ("e2", "e4"): 1,
    ("e2", "e7"): 1,
    ("e3", "e6"): 1,
    ("e4", "e6"): 1,
    ("e6", "e8"): 1,
    ("e6", "e9"): 1,
}


@pytest.fixture
def butterfly():
    return fixtures.butterfly()


@pytest.fixture
def xor_code(butterfly):
    return LinearCode.from_local(butterfly, LocalKernels.from_mapping(butterfly, GF2, XOR))


@pytest.fixture
def routing_code(butterfly):
    """w forwards e3 only, so T1 sees x1 twice."""
    mapping = dict(XOR)
    mapping[("e4", "e6")] = 0
    return LinearCode.from_local(butterfly, LocalKernels.from_mapping(butterfly, GF2, mapping))


@pytest.fixture
def write(tmp_path):
    def _write(name, raw):
        path = tmp_path / name
        path.write_bytes(raw if isinstance(raw, bytes) else raw.encode("utf-8"))
        return str(path)

    return _write
