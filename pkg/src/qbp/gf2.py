"""Dense GF(2) matrices and Gaussian elimination helpers."""

from __future__ import annotations

import numpy as np

__all__ = ["BinaryMatrix", "as_dense", "rref", "rank", "RowSpace"]


class BinaryMatrix:
    """A binary matrix with validated 0/1 entries.

    Stored densely (uint8); fine for every code handled here.  Construction
    from an explicit entry list rejects out-of-range and duplicate entries.
    """

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.asarray(data)
        if arr.dtype == np.bool_:
            arr = arr.astype(np.uint8)
        arr = np.array(arr, dtype=np.uint8, copy=True)
        if arr.ndim != 2:
            raise ValueError("binary matrix must be two-dimensional")
        if arr.size and arr.max() > 1:
            raise ValueError("matrix entries must be 0 or 1")
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries) -> "BinaryMatrix":
        arr = np.zeros((rows, cols), dtype=np.uint8)
        seen = set()
        for r, c in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r}, {c}) out of range for {rows}x{cols}")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry ({r}, {c})")
            seen.add((r, c))
            arr[r, c] = 1
        return cls(arr)

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def nnz(self) -> int:
        return int(self._data.sum())

    def entries(self) -> list[tuple[int, int]]:
        rr, cc = np.nonzero(self._data)
        return list(zip(rr.tolist(), cc.tolist()))

    def to_dense(self) -> np.ndarray:
        """Read-only dense view."""
        return self._data

    def row_weights(self) -> np.ndarray:
        return self._data.sum(axis=1)

    def col_weights(self) -> np.ndarray:
        return self._data.sum(axis=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self._data.shape == other._data.shape and bool(
            np.array_equal(self._data, other._data)
        )

    def __hash__(self):
        return hash((self._data.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def as_dense(mat) -> np.ndarray:
    """Coerce a BinaryMatrix or array-like to a dense uint8 array mod 2."""
    if isinstance(mat, BinaryMatrix):
        return mat.to_dense()
    arr = np.asarray(mat)
    if arr.dtype == np.bool_:
        arr = arr.astype(np.uint8)
    arr = np.array(arr, dtype=np.uint8, copy=True)
    if arr.ndim != 2:
        raise ValueError("expected a two-dimensional matrix")
    if arr.size and arr.max() > 1:
        raise ValueError("matrix entries must be 0 or 1")
    return arr


def rref(mat) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2).

    Returns (R, pivots) where R contains only the nonzero rows and
    pivots[i] is the pivot column of R[i].
    """
    a = as_dense(mat).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        pr = r + int(hits[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        # clear every other 1 in this column with a single vectorized pass
        mask = a[:, c].astype(bool)
        mask[r] = False
        if mask.any():
            a[mask] ^= a[r]
        pivots.append(c)
        r += 1
    return a[: len(pivots)], pivots


def rank(mat) -> int:
    return len(rref(mat)[1])


class RowSpace:
    """Cached elimination for repeated GF(2) row-space membership queries."""

    def __init__(self, mat):
        self._reduced, self._pivots = rref(mat)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, vec) -> np.ndarray:
        v = np.array(np.asarray(vec), dtype=np.uint8, copy=True)
        if v.ndim != 1 or v.size != self._reduced.shape[1]:
            raise ValueError("vector length does not match row space")
        for row, piv in zip(self._reduced, self._pivots):
            if v[piv]:
                v ^= row
        return v

    def contains(self, vec) -> bool:
        return not self.reduce(vec).any()
