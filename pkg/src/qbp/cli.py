"""Command-line interface.

Subcommands: construct, decode, simulate, trace.  Exit codes: 0 success,
1 usage error, 2 data error (unreadable/inconsistent inputs), 3 partial
simulation results (a point hit the trial cap before its error quota).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .alist import AlistFormatError, load_alist, save_alist
from .bp2 import DecoderConfig
from .bp4 import Bp4Decoder, bp2_on_stabilizer, trace_to_csv
from .channel import (
    DecoderSetup,
    StopRule,
    SweepPlan,
    depolarizing_priors,
    run_sweep,
    sample_depolarizing,
    trial_rng,
    write_csv,
    write_json,
)
from .constructions import (
    BCH_VARIANTS,
    BicycleSpec,
    bch_parity,
    bicycle_code,
    five_qubit_code,
    hypergraph_product,
)
from .gf2 import BinaryMatrix
from .pauli import PauliString
from .stabilizer import StabilizerCode

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_PARTIAL = 3


class CliError(Exception):
    """Data-level failure: bad files, inconsistent dimensions, etc."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        raise SystemExit(_usage_error(f"{self.prog}: error: {message}"))


def _usage_error(message: str) -> int:
    print(message, file=sys.stderr)
    return EXIT_USAGE


def _add_code_source(p: argparse.ArgumentParser,
                     seed_flag: str = "--code-seed") -> None:
    g = p.add_argument_group("code source")
    g.add_argument("--five-qubit", action="store_true",
                   help="the [[5,1]] code")
    g.add_argument("--hgp", nargs=2, metavar=("H1", "H2"),
                   help=f"hypergraph product of two classical parity-check "
                        f"matrices; each is one of {'/'.join(BCH_VARIANTS)} "
                        f"(bch7 = hamming7) or an alist file path")
    g.add_argument("--bicycle", nargs=3, type=int, metavar=("N", "M", "W"),
                   help="random bicycle code (n, kept rows per type, circulant "
                        f"row weight); uses {seed_flag}")
    g.add_argument("--stabilizer-file", metavar="PATH",
                   help="stabilizer text file ('N M' header plus M Pauli rows)")
    g.add_argument(seed_flag, dest="code_seed", type=int, default=0,
                   help="seed for the bicycle circulant (default 0)")


def _classical_matrix(token: str) -> BinaryMatrix:
    aliases = {"bch7": "hamming7", "hamming7": "hamming7",
               "bch15": "bch15_7", "bch15_7": "bch15_7"}
    if token in aliases:
        return bch_parity(aliases[token])
    path = Path(token)
    if not path.exists():
        raise CliError(f"classical matrix {token!r}: not a known name or file")
    try:
        return load_alist(path.read_text())
    except AlistFormatError as exc:
        raise CliError(f"{token}: {exc}") from exc


def _build_code(args) -> StabilizerCode:
    picked = [
        bool(args.five_qubit),
        args.hgp is not None,
        args.bicycle is not None,
        args.stabilizer_file is not None,
    ]
    if sum(picked) != 1:
        raise SystemExit(_usage_error(
            "exactly one of --five-qubit / --hgp / --bicycle / "
            "--stabilizer-file is required"))
    try:
        if args.five_qubit:
            return five_qubit_code()
        if args.hgp is not None:
            h1 = _classical_matrix(args.hgp[0])
            h2 = _classical_matrix(args.hgp[1])
            return hypergraph_product(
                h1, h2, name=f"hgp_{args.hgp[0]}_{args.hgp[1]}")
        if args.bicycle is not None:
            n, m, w = args.bicycle
            return bicycle_code(BicycleSpec(n, m, w, args.code_seed))
        path = Path(args.stabilizer_file)
        if not path.exists():
            raise CliError(f"stabilizer file not found: {path}")
        return StabilizerCode.from_text(path.read_text(), name=path.stem)
    except (ValueError, OSError) as exc:
        raise CliError(str(exc)) from exc


def _add_decoder_flags(p: argparse.ArgumentParser, lists: bool = False) -> None:
    g = p.add_argument_group("decoder")
    kind = str if lists else float
    note = " (comma list builds one config per value)" if lists else ""
    g.add_argument("--schedule", default="parallel",
                   help="parallel or serial" +
                        (", or a comma list of both" if lists else ""))
    g.add_argument("--max-iter", type=int, default=90)
    g.add_argument("--alpha-c", type=kind, default=None,
                   help="check-side normalization" + note)
    g.add_argument("--alpha-v", type=kind, default=None,
                   help="variable-side normalization" + note)
    g.add_argument("--beta", type=kind, default=None,
                   help="offset for the check-to-variable pair" + note)
    g.add_argument("--bp2", action="store_true",
                   help="decode over the binary expansion instead of BP4")


def _single_config(args) -> DecoderConfig:
    try:
        return DecoderConfig(
            schedule=args.schedule,
            max_iter=args.max_iter,
            alpha_c=args.alpha_c,
            alpha_v=args.alpha_v,
            beta=args.beta,
        )
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))


def _float_list(text: str | None) -> list[float | None]:
    if text is None:
        return [None]
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise SystemExit(_usage_error(f"bad numeric list {text!r}")) from exc


# -- construct -------------------------------------------------------------------


def _cmd_construct(args) -> int:
    code = _build_code(args)
    rw = code.row_weights()
    cw = code.col_weights()
    print(f"[[{code.n},{code.k}]] {code.name}")
    print(f"rows: {code.m} (rank {code.rank})")
    print(f"row weights:    {_hist(rw)}")
    print(f"column weights: {_hist(cw)}")
    if args.out:
        Path(args.out).write_text(code.to_text())
        print(f"wrote stabilizer text to {args.out}")
    if args.out_alist:
        h, _ = code.to_binary_check()
        Path(args.out_alist).write_text(save_alist(BinaryMatrix(h)))
        print(f"wrote binary expansion alist to {args.out_alist}")
    return EXIT_OK


def _hist(values) -> str:
    vals, counts = np.unique(np.asarray(values), return_counts=True)
    return " ".join(f"{v}:{c}" for v, c in zip(vals, counts))


# -- decode / trace ----------------------------------------------------------------


def _resolve_syndrome(args, code: StabilizerCode):
    """Returns (syndrome, actual_error_or_None)."""
    given = [args.error is not None, args.syndrome is not None,
             bool(args.sample_error)]
    if sum(given) != 1:
        raise SystemExit(_usage_error(
            "exactly one of --error / --syndrome / --sample-error is required"))
    if args.error is not None:
        try:
            err = PauliString.from_string(args.error)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        if err.n != code.n:
            raise CliError(f"error acts on {err.n} qubits, code has {code.n}")
        return code.syndrome(err), err
    if args.syndrome is not None:
        text = args.syndrome.strip()
        if set(text) - {"0", "1"}:
            raise CliError("syndrome must be a bit string")
        bits = np.array([int(ch) for ch in text], dtype=np.uint8)
        if bits.size != code.m:
            raise CliError(f"syndrome has {bits.size} bits, code has {code.m} rows")
        return bits, None
    if args.seed is None:
        raise SystemExit(_usage_error("--sample-error requires --seed"))
    rng = trial_rng(args.seed, 0)
    err = sample_depolarizing(code.n, args.epsilon, rng)
    return code.syndrome(err), err


def _cmd_decode(args) -> int:
    code = _build_code(args)
    cfg = _single_config(args)
    syndrome, actual = _resolve_syndrome(args, code)
    if args.bp2:
        res = bp2_on_stabilizer(code, syndrome, args.epsilon, cfg)
    else:
        res = Bp4Decoder(code).decode(
            syndrome, depolarizing_priors(code.n, args.epsilon), cfg)
    print("SUCCESS" if res.success else "FAIL")
    print(f"estimate: {res.estimate}")
    print(f"iterations: {res.iterations}")
    if actual is not None:
        print(f"actual:   {actual}")
    return EXIT_OK


def _cmd_trace(args) -> int:
    code = _build_code(args)
    if args.bp2:
        raise SystemExit(_usage_error("trace capture is quaternary only"))
    cfg_base = _single_config(args)
    cfg = DecoderConfig(
        schedule=cfg_base.schedule, max_iter=cfg_base.max_iter,
        alpha_c=cfg_base.alpha_c, alpha_v=cfg_base.alpha_v, beta=cfg_base.beta,
        record_trace=True,
    )
    syndrome, _ = _resolve_syndrome(args, code)
    res = Bp4Decoder(code).decode(
        syndrome, depolarizing_priors(code.n, args.epsilon), cfg)
    qubits = None
    if args.qubits:
        try:
            qubits = [int(tok) for tok in args.qubits.split(",")]
        except ValueError as exc:
            raise SystemExit(_usage_error(f"bad qubit list {args.qubits!r}"))
        bad = [q for q in qubits if not 0 <= q < code.n]
        if bad:
            raise CliError(f"qubit index out of range: {bad[0]}")
    text = trace_to_csv(res.trace, qubits)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote trace for {res.iterations} iterations to {args.out}")
        print("SUCCESS" if res.success else "FAIL")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- simulate ---------------------------------------------------------------------


def _cmd_simulate(args) -> int:
    code = _build_code(args)
    try:
        epsilons = tuple(float(tok) for tok in args.epsilon_grid.split(",") if tok)
    except ValueError as exc:
        raise SystemExit(_usage_error(f"bad epsilon grid {args.epsilon_grid!r}"))
    schedules = [s.strip() for s in args.schedule.split(",") if s.strip()]
    family = "bp2" if args.bp2 else "bp4"
    setups = []
    try:
        for schedule in schedules:
            for ac in _float_list(args.alpha_c):
                for av in _float_list(args.alpha_v):
                    for beta in _float_list(args.beta):
                        setups.append(DecoderSetup(family, DecoderConfig(
                            schedule=schedule, max_iter=args.max_iter,
                            alpha_c=ac, alpha_v=av, beta=beta)))
        plan = SweepPlan(
            code=code,
            epsilons=epsilons,
            decoders=tuple(setups),
            stop_rule=StopRule(args.min_logical_errors, args.max_trials),
            master_seed=args.seed,
        )
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))

    points = list(run_sweep(plan, workers=args.workers))
    out = Path(args.out) if args.out else None
    if args.format == "csv":
        if out:
            with out.open("w", newline="") as fh:
                write_csv(points, fh)
        else:
            write_csv(points, sys.stdout)
    else:
        if out:
            with out.open("w") as fh:
                write_json(points, fh)
        else:
            write_json(points, sys.stdout)
    incomplete = [p for p in points if not p.complete]
    for p in points:
        status = "" if p.complete else "  [partial]"
        mods = "".join(
            f" {k}={v:g}"
            for k, v in (("ac", p.alpha_c), ("av", p.alpha_v), ("beta", p.beta))
            if v is not None
        )
        print(
            f"eps={p.epsilon:g} {p.decoder}/{p.schedule}{mods}: "
            f"rate={p.logical_error_rate:.3g} trials={p.trials}{status}",
            file=sys.stderr,
        )
    return EXIT_PARTIAL if incomplete else EXIT_OK


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qbp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and print its parameters")
    _add_code_source(p, seed_flag="--seed")
    p.add_argument("--out", help="write stabilizer text here")
    p.add_argument("--out-alist", help="write the binary expansion as alist")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("decode", help="decode one error or syndrome")
    _add_code_source(p)
    _add_decoder_flags(p)
    p.add_argument("--error", help="Pauli string, e.g. IIIYI")
    p.add_argument("--syndrome", help="bit string, e.g. 1111")
    p.add_argument("--sample-error", action="store_true",
                   help="draw the error from the channel (needs --seed)")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("simulate", help="Monte Carlo sweep, CSV/JSON output")
    _add_code_source(p)
    _add_decoder_flags(p, lists=True)
    p.add_argument("--epsilon-grid", required=True,
                   help="comma-separated, strictly increasing")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--min-logical-errors", type=int, default=100)
    p.add_argument("--max-trials", type=int, default=10_000_000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("trace", help="per-iteration marginal trace as CSV")
    _add_code_source(p)
    _add_decoder_flags(p)
    p.add_argument("--error", help="Pauli string")
    p.add_argument("--syndrome", help="bit string")
    p.add_argument("--sample-error", action="store_true")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--qubits", help="comma list of 0-based qubit indices")
    p.add_argument("--out", help="CSV path (stdout when omitted)")
    p.set_defaults(func=_cmd_trace)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
