"""Reading and writing sparse binary matrices in alist text form.

Layout (indices are 1-based):

    line 1: N M                (columns, rows)
    line 2: max_col_w max_row_w
    line 3: N column weights
    line 4: M row weights
    next N lines: row indices of the ones in each column
    next M lines: column indices of the ones in each row

Zero entries used by some writers to pad irregular codes are accepted on
input and never produced on output.
"""

from __future__ import annotations

from .gf2 import BinaryMatrix

__all__ = ["AlistFormatError", "load_alist", "save_alist"]


class AlistFormatError(ValueError):
    """Malformed or inconsistent alist text."""


def save_alist(mat: BinaryMatrix) -> str:
    dense = mat.to_dense()
    rows, cols = dense.shape
    col_lists = [list((dense[:, c].nonzero()[0] + 1)) for c in range(cols)]
    row_lists = [list((dense[r, :].nonzero()[0] + 1)) for r in range(rows)]
    col_w = [len(c) for c in col_lists]
    row_w = [len(r) for r in row_lists]
    lines = [
        f"{cols} {rows}",
        f"{max(col_w, default=0)} {max(row_w, default=0)}",
        " ".join(map(str, col_w)),
        " ".join(map(str, row_w)),
    ]
    # weight-zero lists become a bare "0" so the line survives round trips
    lines.extend(" ".join(map(str, idx)) if idx else "0" for idx in col_lists)
    lines.extend(" ".join(map(str, idx)) if idx else "0" for idx in row_lists)
    return "\n".join(lines) + "\n"


def _ints(line: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise AlistFormatError(f"non-integer token in line {line!r}") from exc


def load_alist(text: str, *, allow_empty_columns: bool = False) -> BinaryMatrix:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if len(lines) < 4:
        raise AlistFormatError("alist text needs at least four lines")
    header = _ints(lines[0])
    if len(header) != 2:
        raise AlistFormatError("first line must hold exactly 'N M'")
    cols, rows = header
    if cols <= 0 or rows <= 0:
        raise AlistFormatError("matrix dimensions must be positive")
    if len(lines) != 4 + cols + rows:
        raise AlistFormatError(
            f"expected {4 + cols + rows} lines for a {rows}x{cols} matrix, "
            f"got {len(lines)}"
        )
    col_w = _ints(lines[2])
    row_w = _ints(lines[3])
    if len(col_w) != cols or len(row_w) != rows:
        raise AlistFormatError("weight lines do not match the declared dimensions")

    entries: set[tuple[int, int]] = set()
    for c in range(cols):
        seen = [v for v in _ints(lines[4 + c]) if v != 0]
        if len(seen) != col_w[c]:
            raise AlistFormatError(f"column {c} lists {len(seen)} entries, "
                                   f"declared weight is {col_w[c]}")
        if not seen and not allow_empty_columns:
            raise AlistFormatError(f"column {c} is empty")
        for v in seen:
            if not 1 <= v <= rows:
                raise AlistFormatError(f"row index {v} out of range in column {c}")
            if (v - 1, c) in entries:
                raise AlistFormatError(f"duplicate entry ({v - 1}, {c})")
            entries.add((v - 1, c))

    # the row lists must describe the same matrix
    row_entries: set[tuple[int, int]] = set()
    for r in range(rows):
        seen = [v for v in _ints(lines[4 + cols + r]) if v != 0]
        if len(seen) != row_w[r]:
            raise AlistFormatError(f"row {r} lists {len(seen)} entries, "
                                   f"declared weight is {row_w[r]}")
        for v in seen:
            if not 1 <= v <= cols:
                raise AlistFormatError(f"column index {v} out of range in row {r}")
            if (r, v - 1) in row_entries:
                raise AlistFormatError(f"duplicate entry ({r}, {v - 1})")
            row_entries.add((r, v - 1))
    if row_entries != entries:
        raise AlistFormatError("column lists and row lists disagree")

    return BinaryMatrix.from_entries(rows, cols, sorted(entries))
