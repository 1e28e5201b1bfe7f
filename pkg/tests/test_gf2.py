"""GF(2) linear algebra against a plain-Python elimination oracle."""

import numpy as np
import pytest

from helpers import enumerate_codes
from qbp.gf2 import BinaryMatrix, RowSpace, as_dense, rank, rref


def rank_ref(mat) -> int:
    """Independent GF(2) rank: naive row elimination over Python ints."""
    rows = [int("".join(str(b) for b in row), 2) for row in np.atleast_2d(mat)]
    r = 0
    for bit in range(np.atleast_2d(mat).shape[1] - 1, -1, -1):
        pivot = next((i for i in range(r, len(rows)) if rows[i] >> bit & 1), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] >> bit & 1:
                rows[i] ^= rows[r]
        r += 1
    return r


def test_rank_known_cases():
    assert rank(np.eye(4, dtype=np.uint8)) == 4
    assert rank(np.zeros((3, 5), dtype=np.uint8)) == 0
    assert rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]], dtype=np.uint8)) == 2


def test_rank_matches_reference_on_random_matrices():
    rng = np.random.default_rng(31)
    for _ in range(200):
        m, n = rng.integers(1, 9, size=2)
        mat = rng.integers(0, 2, size=(m, n)).astype(np.uint8)
        assert rank(mat) == rank_ref(mat)


def test_rref_shape_and_pivots():
    rng = np.random.default_rng(5)
    for _ in range(100):
        m, n = rng.integers(1, 8, size=2)
        mat = rng.integers(0, 2, size=(m, n)).astype(np.uint8)
        red, pivots = rref(mat)
        assert red.shape == (len(pivots), n)  # zero rows are dropped
        assert len(pivots) == rank_ref(mat)
        for i, c in enumerate(pivots):
            assert red[i, c] == 1
            assert red[:, c].sum() == 1  # pivot columns are cleared
        # row spaces agree both ways
        space = RowSpace(mat)
        for row in red[: len(pivots)]:
            assert space.contains(row)
        back = RowSpace(red)
        for row in mat:
            assert back.contains(row)


def test_rowspace_contains_matches_enumeration():
    rng = np.random.default_rng(17)
    for _ in range(40):
        m, n = int(rng.integers(1, 6)), int(rng.integers(2, 8))
        mat = rng.integers(0, 2, size=(m, n)).astype(np.uint8)
        space = RowSpace(mat)
        spanned = {
            tuple((combo @ mat) % 2) for combo in enumerate_codes(m, 2)
        }
        for vec in enumerate_codes(n, 2)[:: max(1, 2 ** (n - 6))]:
            assert space.contains(vec) == (tuple(vec) in spanned)


def test_rowspace_reduce():
    mat = np.array([[1, 1, 0, 0], [0, 0, 1, 1]], dtype=np.uint8)
    space = RowSpace(mat)
    assert space.reduce(np.array([1, 1, 1, 1], dtype=np.uint8)).sum() == 0
    residue = space.reduce(np.array([1, 0, 0, 0], dtype=np.uint8))
    assert residue.any()
    with pytest.raises(ValueError):
        space.reduce(np.array([1, 0, 0], dtype=np.uint8))


def test_binary_matrix_entries_round_trip():
    entries = [(0, 1), (0, 3), (2, 0)]
    mat = BinaryMatrix.from_entries(3, 4, entries)
    assert mat.rows == 3 and mat.cols == 4
    assert mat.nnz == 3
    assert sorted(mat.entries()) == sorted(entries)
    assert mat.row_weights().tolist() == [2, 0, 1]
    assert mat.col_weights().tolist() == [1, 1, 0, 1]
    assert BinaryMatrix(mat.to_dense()) == mat
    assert hash(BinaryMatrix(mat.to_dense())) == hash(mat)


def test_binary_matrix_validation():
    with pytest.raises(ValueError):
        BinaryMatrix(np.array([[0, 2]], dtype=np.uint8))
    with pytest.raises(ValueError):
        BinaryMatrix.from_entries(2, 2, [(0, 0), (0, 0)])  # duplicate
    with pytest.raises(ValueError):
        BinaryMatrix.from_entries(2, 2, [(2, 0)])  # out of range
    with pytest.raises(ValueError):
        BinaryMatrix(np.zeros(3, dtype=np.uint8))  # not 2-D


def test_as_dense_accepts_matrix_and_array():
    arr = np.array([[1, 0], [0, 1]], dtype=np.uint8)
    assert np.array_equal(as_dense(BinaryMatrix(arr)), arr)
    assert np.array_equal(as_dense(arr), arr)
    assert np.array_equal(as_dense([[1, 0], [0, 1]]), arr)
