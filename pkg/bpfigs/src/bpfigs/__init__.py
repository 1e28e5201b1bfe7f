"""Batch figure renderer for decoder sweep and trace CSVs."""

from .data import DataError
from .figspec import (DEFAULT_GROUP_KEYS, DEFAULT_SCALES, KINDS, FigureSpec,
                      SpecError, spec_from_json)
from .render import build_figure, render, save_figure

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_GROUP_KEYS",
    "DEFAULT_SCALES",
    "DataError",
    "FigureSpec",
    "KINDS",
    "SpecError",
    "build_figure",
    "render",
    "save_figure",
    "spec_from_json",
    "__version__",
]
