"""bpfigs — draw figures from decoder sweep / trace CSVs.

Subcommands mirror the figure kinds (`error-rate`, `avg-iter`, `trace`),
each taking CSV paths plus flags; `render` takes a small JSON spec file
instead. Exit codes: 0 ok, 1 usage, 2 bad input data.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .data import DataError
from .figspec import SCALES, FigureSpec, SpecError, spec_from_json
from .render import render

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_figure_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("csv", nargs="+", help="input CSV file(s)")
    p.add_argument("--out", required=True, help="image path (.png/.svg/.pdf)")
    p.add_argument("--group-keys", help="comma list of series grouping columns")
    p.add_argument("--xscale", choices=SCALES)
    p.add_argument("--yscale", choices=SCALES)
    p.add_argument("--title")


def _spec_from_args(args, kind: str) -> FigureSpec:
    keys = None
    if args.group_keys:
        keys = tuple(t for t in args.group_keys.split(",") if t)
    return FigureSpec(csvs=tuple(args.csv), kind=kind, out=args.out,
                      group_keys=keys, xscale=args.xscale,
                      yscale=args.yscale, title=args.title)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bpfigs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for cmd, kind in (("error-rate", "error_rate"),
                      ("avg-iter", "avg_iter"),
                      ("trace", "trace")):
        p = sub.add_parser(cmd, help=f"draw a {kind} figure")
        _add_figure_flags(p)
        p.set_defaults(kind=kind)

    p = sub.add_parser("render", help="draw a figure described by a JSON spec file")
    p.add_argument("spec", help="path to the spec JSON")
    p.set_defaults(kind=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.kind is None:
            spec_path = Path(args.spec)
            if not spec_path.is_file():
                raise DataError(f"spec file not found: {spec_path}")
            spec = spec_from_json(spec_path.read_text())
        else:
            spec = _spec_from_args(args, args.kind)
    except SpecError as exc:
        print(f"bpfigs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"bpfigs: {exc}", file=sys.stderr)
        return EXIT_DATA

    try:
        out = render(spec)
    except DataError as exc:
        print(f"bpfigs: {exc}", file=sys.stderr)
        return EXIT_DATA
    print(f"wrote {out}")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
