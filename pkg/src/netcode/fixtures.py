"""Pinned instances shipped with the package."""
from importlib import resources

from .field import make_field
from .lift.matrix import BinaryMatrix, SignedMatrix, parse_field_matrix, parse_matrix
from .network.model import parse_network


def read_bytes(name):
    return resources.files("netcode.data").joinpath(name).read_bytes()


def butterfly():
    return parse_network(read_bytes("butterfly.json"))


def combination_4_2():
    return parse_network(read_bytes("combination_4_2.json"))


def kernel_b():
    return parse_matrix(read_bytes("kernel_b.txt"), BinaryMatrix)


def kernel_b_signed():
    return parse_matrix(read_bytes("kernel_b_signed.txt"), SignedMatrix)


def kernel_b_gf5():
    return parse_field_matrix(read_bytes("kernel_b_gf5.txt"), make_field(5))


def fano():
    return parse_matrix(read_bytes("fano.txt"), BinaryMatrix)
