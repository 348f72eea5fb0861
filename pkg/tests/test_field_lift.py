import numpy as np
import pytest

from netcode import fixtures
from netcode.coding import brute_force_solve, jaggi_sanders_construct, verify_multicast
from netcode.errors import (
    CapExceededError,
    FieldMismatchError,
    MatrixFormatError,
    NotGraphicError,
)
from netcode.field import GF2, make_field, parse_field_spec
from netcode.lift import (
    BinaryMatrix,
    SignedMatrix,
    graphic_row_reduce,
    incidence_matrix,
    juxtapose_kernels,
    lift_matrix,
    lift_pipeline,
    lift_solution,
    parse_matrix,
    serialize_matrix,
    sign_to_tu,
    signed_matroid,
    verify_tu,
    view_over_field,
)
from netcode.lift.graphic import graph_of
from netcode.lift.unimodular import integer_determinant, integer_rank
from netcode.matroid.core import cycle_matroid, matroids_equal, vector_matroid

TARGETS = ["3", "2^2", "5", "7", "2^3", "3^2"]


def _head(m, n):
    return BinaryMatrix(m.labels[:n], m.values[:, :n])


def test_kernel_matrix_is_already_graphic():
    b = fixtures.kernel_b()
    T, reduced = graphic_row_reduce(b)
    assert T.tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert reduced == b


def test_kernel_matrix_signing_exact():
    signed = sign_to_tu(fixtures.kernel_b())
    assert signed == fixtures.kernel_b_signed()
    assert signed.mod2() == fixtures.kernel_b()
    verdict = verify_tu(signed)
    assert verdict
    assert verdict.checked == 63 + 630 + 1330


def test_kernel_matrix_view_over_gf5():
    viewed = view_over_field(fixtures.kernel_b_signed(), make_field(5))
    assert viewed == fixtures.kernel_b_gf5()


def test_lift_matrix_lift_example():
    result = lift_matrix(fixtures.kernel_b(), make_field(5))
    assert result.lifted == fixtures.kernel_b_gf5()
    assert result.signed == fixtures.kernel_b_signed()
    assert not result.matroid_checked
    document = result.to_document()
    assert document["lifted"]["field"] == "5"
    assert document["lifted"]["local"] is None


@pytest.mark.parametrize("target", TARGETS)
def test_lift_matrix_preserves_column_matroid(target):
    b = _head(fixtures.kernel_b(), 12)
    result = lift_matrix(b, parse_field_spec(target))
    assert result.matroid_checked


def test_signed_matroid_matches_stored_signing():
    ours = sign_to_tu(_head(fixtures.kernel_b(), 10))
    stored = SignedMatrix(
        fixtures.kernel_b_signed().labels[:10], fixtures.kernel_b_signed().values[:, :10]
    )
    assert matroids_equal(signed_matroid(ours), signed_matroid(stored))


def test_row_transform_when_needed():
    b = BinaryMatrix(("c1", "c2", "c3"), [[1, 1, 0], [1, 0, 1], [1, 0, 0]])
    T, reduced = graphic_row_reduce(b)
    assert T.tolist() == [[1, 0, 0], [0, 1, 0], [1, 0, 1]]
    assert reduced.values.sum(axis=0).max() <= 2
    assert verify_tu(sign_to_tu(reduced))
    assert matroids_equal(
        vector_matroid(b.over(GF2), b.labels), vector_matroid(reduced.over(GF2), b.labels)
    )


def test_fano_is_not_graphic():
    with pytest.raises(NotGraphicError):
        graphic_row_reduce(fixtures.fano())
    with pytest.raises(NotGraphicError):
        lift_matrix(fixtures.fano(), make_field(3))


def test_graphic_reduction_cap():
    b = BinaryMatrix(tuple("abcdefg"), np.eye(7, dtype=np.int64))
    with pytest.raises(CapExceededError):
        graphic_row_reduce(b)


def test_graph_of_reduced_matrix():
    b = _head(fixtures.kernel_b(), 12)
    edges = graph_of(b)
    assert edges["e1"] == ("v1", "r")
    assert edges["e11"] == ("v1", "v2")
    assert matroids_equal(cycle_matroid(edges), vector_matroid(b.over(GF2), b.labels))


def test_integer_determinant():
    assert integer_determinant([[1, 1], [-1, 1]]) == 2
    assert integer_determinant([[2, 0, 0], [0, 3, 0], [0, 0, 1]]) == 6
    assert integer_determinant([]) == 1


def test_verify_tu_negative():
    verdict = verify_tu(SignedMatrix(("a", "b"), [[1, 1], [-1, 1]]))
    assert not verdict
    assert verdict.determinant == 2
    assert (verdict.rows, verdict.columns) == ((0, 1), (0, 1))


def test_verify_tu_cap():
    with pytest.raises(CapExceededError):
        verify_tu(SignedMatrix(tuple("abcde"), np.eye(5, dtype=np.int64)))


def test_incidence_matrix_is_tu_and_graphic():
    edges = {"a": ("x", "y"), "b": ("y", "z"), "c": ("x", "z"), "d": ("z", "w")}
    s = incidence_matrix(("x", "y", "z", "w"), edges)
    assert s.values[:, 0].tolist() == [1, -1, 0, 0]
    assert verify_tu(s)
    assert matroids_equal(signed_matroid(s), cycle_matroid(edges))


@pytest.mark.parametrize(
    "raw, kind",
    [
        ("", BinaryMatrix),
        ("a b\n1 0 1\n", BinaryMatrix),
        ("a b\n1 2\n", BinaryMatrix),
        ("a b\n1 x\n", BinaryMatrix),
        ("a b\n1 -2\n", SignedMatrix),
        ("a a\n1 0\n", BinaryMatrix),
    ],
)
def test_matrix_format_errors(raw, kind):
    with pytest.raises(MatrixFormatError):
        parse_matrix(raw, kind)


def test_matrix_text_round_trip():
    b = fixtures.kernel_b()
    assert parse_matrix(serialize_matrix(b)) == b
    s = fixtures.kernel_b_signed()
    assert parse_matrix(serialize_matrix(s), SignedMatrix) == s


@pytest.mark.parametrize("target", TARGETS)
def test_lift_butterfly_solution(butterfly, target):
    code = brute_force_solve(butterfly, GF2)
    spec = parse_field_spec(target)
    lifted = lift_solution(butterfly, code, spec)
    assert lifted.field == spec
    assert verify_multicast(lifted)
    assert lifted.global_kernels.columns(butterfly.imaginary_links).tolist() == [[1, 0], [0, 1]]


def test_lift_xor_code_to_gf7(butterfly, xor_code):
    result = lift_pipeline(butterfly, xor_code, make_field(7))
    assert result.code.global_kernels.column("e6").tolist() == [1, 6]
    assert result.matroid_checked
    document = result.to_document()
    assert {"d": "e4", "e": "e6", "k": 6} in document["lifted"]["local"]


def test_lift_rejects_non_multicast(butterfly, routing_code):
    with pytest.raises(ValueError):
        lift_pipeline(butterfly, routing_code, make_field(3))


def test_lift_needs_binary_code(butterfly):
    code = jaggi_sanders_construct(butterfly, make_field(3))
    with pytest.raises(FieldMismatchError):
        juxtapose_kernels(code)


def _invertible_binary(rng, n):
    while True:
        m = rng.integers(0, 2, size=(n, n))
        if np.linalg.matrix_rank(GF2.array(m)) == n:
            return m


def _scrambled_graphic(rng, omega, n_cols):
    """Reduced incidence matrix of a random graph on ω + 1 vertices, mixed by an invertible row map."""
    columns = []
    for _ in range(n_cols):
        ends = rng.choice(omega + 1, size=2, replace=False)
        column = np.zeros(omega, dtype=np.int64)
        column[[v for v in ends if v < omega]] = 1
        columns.append(column)
    incidence = np.stack(columns, axis=1)
    return BinaryMatrix(
        tuple(f"c{j + 1}" for j in range(n_cols)),
        (_invertible_binary(rng, omega) @ incidence) % 2,
    )


def test_graphic_row_reduce_keeps_subset_ranks():
    rng = np.random.default_rng(11)
    for _ in range(30):
        omega = int(rng.integers(2, 5))
        b = _scrambled_graphic(rng, omega, int(rng.integers(3, 9)))
        T, reduced = graphic_row_reduce(b)
        assert np.linalg.matrix_rank(GF2.array(T)) == omega
        assert reduced.values.sum(axis=0).max() <= 2
        for _ in range(10):
            size = int(rng.integers(1, len(b.labels) + 1))
            cols = sorted(rng.choice(len(b.labels), size=size, replace=False).tolist())
            assert np.linalg.matrix_rank(GF2.array(b.values[:, cols])) == np.linalg.matrix_rank(
                GF2.array(reduced.values[:, cols])
            )


def test_integer_rank_matches_float_rank():
    rng = np.random.default_rng(5)
    for _ in range(200):
        shape = (int(rng.integers(1, 6)), int(rng.integers(1, 8)))
        values = rng.integers(-2, 3, size=shape)
        if rng.random() < 0.3:
            values[-1] = values[0]
        assert integer_rank(values.tolist()) == np.linalg.matrix_rank(values.astype(float))
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0], [0, 0]]) == 0


def test_signed_matroid_on_all_columns():
    s = fixtures.kernel_b_signed()
    m = signed_matroid(s)
    assert m.rank() == 3
    assert m.rank(s.labels[:3]) == integer_rank(s.values[:, :3].tolist())
    assert m.is_independent(s.labels[:1])
