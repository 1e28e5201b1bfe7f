"""Depolarizing-channel Monte Carlo harness.

Trials are reproducible by construction: trial t of a point seeded with s
draws from a Philox generator keyed by (s, t), so results do not depend on
how trials are batched across worker threads.  Trials are consumed in
fixed-size blocks and the stop rule is evaluated between blocks, which
keeps the trial count itself worker-independent.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np
from scipy.stats import norm

from .bp2 import Bp2Decoder, DecoderConfig
from .bp4 import Bp4Decoder
from .pauli import PauliString
from .stabilizer import Outcome, StabilizerCode, classify

__all__ = [
    "DepolarizingChannel",
    "depolarizing_priors",
    "sample_depolarizing",
    "trial_rng",
    "wilson_interval",
    "StopRule",
    "DecoderSetup",
    "SimPoint",
    "SweepPlan",
    "run_point",
    "run_sweep",
    "write_csv",
    "write_json",
    "points_to_csv",
    "CSV_COLUMNS",
]

_BLOCK = 256  # trials per stop-rule evaluation; fixed so results never
              # depend on the worker count


def depolarizing_priors(n: int, epsilon: float) -> np.ndarray:
    """Per-qubit prior rows (1-eps, eps/3, eps/3, eps/3)."""
    if not 0.0 < epsilon < 0.75:
        raise ValueError("epsilon must lie in (0, 0.75)")
    row = np.array([1.0 - epsilon, epsilon / 3.0, epsilon / 3.0, epsilon / 3.0])
    return np.tile(row, (n, 1))


def sample_depolarizing(n: int, epsilon: float, rng: np.random.Generator) -> PauliString:
    """IID depolarizing error: each qubit suffers X, Y or Z w.p. eps/3 each."""
    if not 0.0 <= epsilon < 0.75:
        raise ValueError("epsilon must lie in [0, 0.75)")
    u = rng.random(n)
    codes = np.zeros(n, dtype=np.uint8)
    third = epsilon / 3.0
    codes[u < epsilon] = 3          # Z
    codes[u < 2 * third] = 2        # Y
    codes[u < third] = 1            # X
    return PauliString.from_codes(codes)


@dataclass(frozen=True)
class DepolarizingChannel:
    epsilon: float

    def __post_init__(self):
        if not 0.0 < self.epsilon < 0.75:
            raise ValueError("epsilon must lie in (0, 0.75)")

    def priors(self, n: int) -> np.ndarray:
        return depolarizing_priors(n, self.epsilon)

    def sample(self, n: int, rng: np.random.Generator) -> PauliString:
        return sample_depolarizing(n, self.epsilon, rng)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Counter-style per-trial generator keyed by (seed, trial)."""
    return np.random.Generator(
        np.random.Philox(key=np.array([seed, trial], dtype=np.uint64))
    )


def wilson_interval(
    errors: int, trials: int, confidence: float = 0.95
) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    if not 0 <= errors <= trials:
        raise ValueError("errors must lie in 0..trials")
    if not 0.0 < confidence < 1.0:
        raise ValueError("confidence must lie in (0, 1)")
    z = float(norm.ppf(0.5 + confidence / 2.0))
    phat = errors / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = (
        z
        * np.sqrt(phat * (1.0 - phat) / trials + z * z / (4.0 * trials * trials))
        / denom
    )
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class StopRule:
    """Stop a point after enough logical errors or a hard trial cap."""

    min_logical_errors: int = 100
    max_trials: int = 10_000_000

    def __post_init__(self):
        if self.min_logical_errors < 1 or self.max_trials < 1:
            raise ValueError("stop rule bounds must be positive")


@dataclass(frozen=True)
class DecoderSetup:
    """Decoder family ('bp4' or 'bp2') plus its configuration."""

    family: str = "bp4"
    config: DecoderConfig = field(default_factory=DecoderConfig)

    def __post_init__(self):
        if self.family not in ("bp4", "bp2"):
            raise ValueError("family must be 'bp4' or 'bp2'")

    @property
    def label(self) -> str:
        cfg = self.config
        parts = [self.family, cfg.schedule]
        if cfg.alpha_c is not None:
            parts.append(f"ac{cfg.alpha_c:g}")
        if cfg.alpha_v is not None:
            parts.append(f"av{cfg.alpha_v:g}")
        if cfg.beta is not None:
            parts.append(f"b{cfg.beta:g}")
        return "-".join(parts)


@dataclass
class SimPoint:
    """Aggregated outcome counts for one (code, epsilon, decoder) cell."""

    code_id: str
    epsilon: float
    decoder: str
    schedule: str
    alpha_c: float | None
    alpha_v: float | None
    beta: float | None
    trials: int
    exact_successes: int
    degenerate_successes: int
    detected_errors: int
    undetected_errors: int
    iteration_sum: int
    ci_low: float
    ci_high: float
    seed: int
    complete: bool = True

    @property
    def logical_errors(self) -> int:
        return self.detected_errors + self.undetected_errors

    @property
    def logical_error_rate(self) -> float:
        return self.logical_errors / self.trials if self.trials else 0.0

    @property
    def avg_iterations(self) -> float:
        return self.iteration_sum / self.trials if self.trials else 0.0


class _TrialRunner:
    """Per-worker decoding context (decoders hold private buffers)."""

    def __init__(self, code: StabilizerCode, epsilon: float, setup: DecoderSetup):
        self.code = code
        self.epsilon = epsilon
        self.setup = setup
        # the decoder needs open-interval priors even when sampling at eps=0
        prior_eps = max(epsilon, 1e-12)
        if setup.family == "bp4":
            self.decoder = Bp4Decoder(code)
            self.priors = depolarizing_priors(code.n, prior_eps)
        else:
            h, prior_rule = code.to_binary_check()
            self.decoder = Bp2Decoder(h)
            self.priors = prior_rule(prior_eps)

    def run(self, seed: int, trials: Iterable[int]) -> tuple[dict, int]:
        counts = {outcome: 0 for outcome in Outcome}
        iteration_sum = 0
        code = self.code
        for t in trials:
            rng = trial_rng(seed, t)
            error = sample_depolarizing(code.n, self.epsilon, rng)
            z = code.syndrome(error)
            res = self.decoder.decode(z, self.priors, self.setup.config)
            estimate = res.estimate
            if self.setup.family == "bp2":
                estimate = PauliString.from_symplectic(estimate)
            counts[classify(code, error, estimate, res.success)] += 1
            iteration_sum += res.iterations
        return counts, iteration_sum


def run_point(
    code: StabilizerCode,
    epsilon: float,
    setup: DecoderSetup,
    stop_rule: StopRule | None = None,
    seed: int = 0,
    *,
    workers: int = 1,
) -> SimPoint:
    """Monte Carlo estimate of the logical error rate at one epsilon.

    Returns a partial point (``complete=False``) when the trial cap is hit
    before the requested number of logical errors is observed.
    """
    stop = stop_rule or StopRule()
    if workers < 1:
        raise ValueError("workers must be positive")
    runners = [_TrialRunner(code, epsilon, setup) for _ in range(workers)]

    counts = {outcome: 0 for outcome in Outcome}
    iteration_sum = 0
    trials_done = 0
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while trials_done < stop.max_trials:
            logical = counts[Outcome.DETECTED_ERROR] + counts[Outcome.UNDETECTED_ERROR]
            if logical >= stop.min_logical_errors:
                break
            block = min(_BLOCK, stop.max_trials - trials_done)
            indices = range(trials_done, trials_done + block)
            if pool is None:
                block_counts, block_iters = runners[0].run(seed, indices)
                for k, v in block_counts.items():
                    counts[k] += v
                iteration_sum += block_iters
            else:
                chunks = [
                    (runners[w], indices[w::workers]) for w in range(workers)
                ]
                futures = [
                    pool.submit(runner.run, seed, chunk)
                    for runner, chunk in chunks
                    if len(chunk)
                ]
                for fut in futures:
                    block_counts, block_iters = fut.result()
                    for k, v in block_counts.items():
                        counts[k] += v
                    iteration_sum += block_iters
            trials_done += block
    finally:
        if pool is not None:
            pool.shutdown()

    logical = counts[Outcome.DETECTED_ERROR] + counts[Outcome.UNDETECTED_ERROR]
    ci_low, ci_high = wilson_interval(logical, trials_done)
    cfg = setup.config
    return SimPoint(
        code_id=code.name,
        epsilon=epsilon,
        decoder=setup.family,
        schedule=cfg.schedule,
        alpha_c=cfg.alpha_c,
        alpha_v=cfg.alpha_v,
        beta=cfg.beta,
        trials=trials_done,
        exact_successes=counts[Outcome.EXACT_SUCCESS],
        degenerate_successes=counts[Outcome.DEGENERATE_SUCCESS],
        detected_errors=counts[Outcome.DETECTED_ERROR],
        undetected_errors=counts[Outcome.UNDETECTED_ERROR],
        iteration_sum=iteration_sum,
        ci_low=ci_low,
        ci_high=ci_high,
        seed=seed,
        complete=logical >= stop.min_logical_errors,
    )


@dataclass(frozen=True)
class SweepPlan:
    """A grid of epsilons crossed with a list of decoder setups."""

    code: StabilizerCode
    epsilons: tuple[float, ...]
    decoders: tuple[DecoderSetup, ...]
    stop_rule: StopRule = field(default_factory=StopRule)
    master_seed: int = 0

    def __post_init__(self):
        eps = tuple(self.epsilons)
        if any(b <= a for a, b in zip(eps, eps[1:])):
            raise ValueError("epsilon grid must be strictly increasing")
        if any(not 0.0 < e < 0.75 for e in eps):
            raise ValueError("epsilons must lie in (0, 0.75)")


def _point_seed(master_seed: int, i_eps: int, i_dec: int) -> int:
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(i_eps, i_dec))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def run_sweep(plan: SweepPlan, *, workers: int = 1) -> Iterator[SimPoint]:
    """Yield one SimPoint per (epsilon, decoder), epsilons ascending."""
    for i_eps, eps in enumerate(plan.epsilons):
        for i_dec, setup in enumerate(plan.decoders):
            yield run_point(
                plan.code,
                eps,
                setup,
                plan.stop_rule,
                _point_seed(plan.master_seed, i_eps, i_dec),
                workers=workers,
            )


# -- serialization ----------------------------------------------------------------

CSV_COLUMNS = [
    "code_id", "epsilon", "decoder", "schedule", "alpha_c", "alpha_v", "beta",
    "trials", "exact_success", "degenerate_success", "detected", "undetected",
    "avg_iter", "ci_low", "ci_high", "seed",
]


def _point_row(p: SimPoint) -> dict:
    return {
        "code_id": p.code_id,
        "epsilon": f"{p.epsilon:.10g}",
        "decoder": p.decoder,
        "schedule": p.schedule,
        "alpha_c": "" if p.alpha_c is None else f"{p.alpha_c:.10g}",
        "alpha_v": "" if p.alpha_v is None else f"{p.alpha_v:.10g}",
        "beta": "" if p.beta is None else f"{p.beta:.10g}",
        "trials": p.trials,
        "exact_success": p.exact_successes,
        "degenerate_success": p.degenerate_successes,
        "detected": p.detected_errors,
        "undetected": p.undetected_errors,
        "avg_iter": f"{p.avg_iterations:.10g}",
        "ci_low": f"{p.ci_low:.10g}",
        "ci_high": f"{p.ci_high:.10g}",
        "seed": p.seed,
    }


def write_csv(points: Iterable[SimPoint], file) -> None:
    """Stream points to ``file`` as CSV (header plus one row per point)."""
    writer = csv.DictWriter(file, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for p in points:
        writer.writerow(_point_row(p))


def write_json(points: Iterable[SimPoint], file) -> None:
    """JSON mirror of the CSV schema (numbers stay numbers, absent is null)."""
    rows = []
    for p in points:
        rows.append({
            "code_id": p.code_id,
            "epsilon": p.epsilon,
            "decoder": p.decoder,
            "schedule": p.schedule,
            "alpha_c": p.alpha_c,
            "alpha_v": p.alpha_v,
            "beta": p.beta,
            "trials": p.trials,
            "exact_success": p.exact_successes,
            "degenerate_success": p.degenerate_successes,
            "detected": p.detected_errors,
            "undetected": p.undetected_errors,
            "avg_iter": p.avg_iterations,
            "ci_low": p.ci_low,
            "ci_high": p.ci_high,
            "seed": p.seed,
        })
    json.dump(rows, file, indent=2)
    file.write("\n")


def points_to_csv(points: Iterable[SimPoint]) -> str:
    buf = io.StringIO()
    write_csv(points, buf)
    return buf.getvalue()
