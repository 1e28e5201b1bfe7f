"""CSV intake: validation, parsing helpers, series grouping.

The renderer draws whatever the files say — confidence bounds, averaged
iteration counts and probabilities are taken verbatim from their columns,
never rederived. The one arithmetic step anywhere is the logical error
rate, which the sweep schema stores as counts: rate = (detected +
undetected) / trials.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .figspec import FigureSpec

# columns each figure kind reads (on top of the spec's grouping keys)
REQUIRED_COLUMNS = {
    "error_rate": ("epsilon", "trials", "detected", "undetected",
                   "ci_low", "ci_high"),
    "avg_iter": ("epsilon", "avg_iter"),
    "trace": ("iteration", "pI", "pX", "pY", "pZ"),
}


class DataError(ValueError):
    """Input CSV missing, malformed, or empty."""


def load_rows(spec: FigureSpec) -> list[dict[str, str]]:
    """All data rows from the spec's CSVs, schema-checked per file."""
    needed = set(REQUIRED_COLUMNS[spec.kind]) | set(spec.series_keys())
    rows: list[dict[str, str]] = []
    for path in spec.csvs:
        p = Path(path)
        if not p.is_file():
            raise DataError(f"input CSV not found: {path}")
        with open(p, newline="") as fh:
            reader = csv.DictReader(fh)
            have = set(reader.fieldnames or ())
            missing = sorted(needed - have)
            if missing:
                raise DataError(f"{path}: missing columns {missing}")
            rows.extend(reader)
    if not rows:
        raise DataError("no data rows in " + ", ".join(spec.csvs))
    return rows


def group_rows(rows: list[dict[str, str]],
               keys: tuple[str, ...]) -> list[tuple[str, list[dict[str, str]]]]:
    """Split rows into labeled series, one per distinct key tuple.

    Labels keep bare values for decoder/schedule, shorten qubit to ``q<i>``,
    and spell the rest as ``key=value``; empty cells are skipped so an unset
    modifier column doesn't clutter the legend. Series come back sorted by
    label, which also fixes the color assignment.
    """
    buckets: dict[tuple[str, ...], list[dict[str, str]]] = {}
    for row in rows:
        buckets.setdefault(tuple(row[k] for k in keys), []).append(row)

    labeled = []
    for keyvals, grp in buckets.items():
        parts = []
        for k, v in zip(keys, keyvals):
            if v == "":
                continue
            if k in ("decoder", "schedule"):
                parts.append(v)
            elif k == "qubit":
                parts.append(f"q{v}")
            else:
                parts.append(f"{k}={v}")
        labeled.append((" ".join(parts) or "all", grp))
    labeled.sort(key=lambda item: item[0])
    return labeled


def numeric(row: dict[str, str], col: str) -> float:
    try:
        return float(row[col])
    except ValueError as exc:
        raise DataError(f"column {col!r}: not a number: {row[col]!r}") from exc


def error_rate(row: dict[str, str]) -> float:
    """Logical error rate of one sweep row, straight from its count columns."""
    trials = int(numeric(row, "trials"))
    if trials <= 0:
        raise DataError(f"non-positive trial count: {trials}")
    bad = int(numeric(row, "detected")) + int(numeric(row, "undetected"))
    return bad / trials
