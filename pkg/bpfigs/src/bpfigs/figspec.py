"""Declarative description of one figure.

A :class:`FigureSpec` names the input CSVs, what kind of figure to draw,
how rows group into series, the axis scales, and where the image goes.
Exactly one kind per spec; everything else has per-kind defaults.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

KINDS = ("error_rate", "avg_iter", "trace")
SCALES = ("linear", "log")

# series grouping defaults: sweep figures split by decoder configuration,
# trace figures split by qubit
DEFAULT_GROUP_KEYS = {
    "error_rate": ("decoder", "schedule", "alpha_c", "alpha_v", "beta"),
    "avg_iter": ("decoder", "schedule", "alpha_c", "alpha_v", "beta"),
    "trace": ("qubit",),
}
DEFAULT_SCALES = {
    "error_rate": ("log", "log"),
    "avg_iter": ("log", "linear"),
    "trace": ("linear", "linear"),
}


class SpecError(ValueError):
    """The figure spec itself is malformed."""


@dataclass(frozen=True)
class FigureSpec:
    csvs: tuple[str, ...]
    kind: str
    out: str
    group_keys: tuple[str, ...] | None = None
    xscale: str | None = None
    yscale: str | None = None
    title: str | None = None

    def __post_init__(self):
        if isinstance(self.csvs, str):
            object.__setattr__(self, "csvs", (self.csvs,))
        else:
            object.__setattr__(self, "csvs", tuple(self.csvs))
        if not self.csvs:
            raise SpecError("at least one input CSV is required")
        if self.kind not in KINDS:
            raise SpecError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if not self.out:
            raise SpecError("output path is required")
        if self.group_keys is not None:
            keys = tuple(self.group_keys)
            if not keys or any(not k for k in keys):
                raise SpecError("group_keys must be non-empty column names")
            object.__setattr__(self, "group_keys", keys)
        for name in ("xscale", "yscale"):
            val = getattr(self, name)
            if val is not None and val not in SCALES:
                raise SpecError(f"{name} must be one of {SCALES}, got {val!r}")

    def series_keys(self) -> tuple[str, ...]:
        return self.group_keys or DEFAULT_GROUP_KEYS[self.kind]

    def scales(self) -> tuple[str, str]:
        dx, dy = DEFAULT_SCALES[self.kind]
        return (self.xscale or dx, self.yscale or dy)


def spec_from_json(text: str) -> FigureSpec:
    """Build a spec from a small JSON object mirroring the field names.

    ``csvs`` may be a single string or a list. Unknown keys are rejected so
    typos fail loudly.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecError("spec file must hold a JSON object")
    known = {f.name for f in fields(FigureSpec)}
    unknown = set(data) - known
    if unknown:
        raise SpecError(f"unknown spec keys: {sorted(unknown)}")
    if "group_keys" in data and data["group_keys"] is not None:
        data["group_keys"] = tuple(data["group_keys"])
    missing = {"csvs", "kind", "out"} - set(data)
    if missing:
        raise SpecError(f"spec file lacks required keys: {sorted(missing)}")
    return FigureSpec(**data)
