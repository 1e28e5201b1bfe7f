"""Binary delta-rule belief propagation over a parity-check matrix.

Messages are passed as single scalars per edge (the difference of the
two-point belief), so one iteration costs the same number of message
updates under either schedule.  The check-to-variable pair can be reshaped
by exactly one of three modifiers:

    alpha_c   r0 <- ((1+delta)/2)^(1/alpha_c), r1 analogous
    alpha_v   variable outputs q0/q1 raised to 1/alpha_v before normalizing
    beta      offset: divide the larger of r0/r1 by e^beta if the ratio
              exceeds e^beta, otherwise flatten both to 1/2
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .gf2 import as_dense

__all__ = [
    "BinaryPrior",
    "DecoderConfig",
    "DecodeResult",
    "Bp2Decoder",
    "bp2_decode",
]

SCHEDULES = ("parallel", "serial")


@dataclass(frozen=True)
class BinaryPrior:
    """Per-bit prior (p0, p1); both probabilities must be in (0, 1)."""

    p0: float
    p1: float

    def __post_init__(self):
        if not (0.0 < self.p0 < 1.0 and 0.0 < self.p1 < 1.0):
            raise ValueError("prior probabilities must lie in (0, 1)")
        if abs(self.p0 + self.p1 - 1.0) > 1e-9:
            raise ValueError("prior must sum to 1")


@dataclass(frozen=True)
class DecoderConfig:
    """Schedule, iteration cap, and at most one message modifier.

    ``record_trace`` keeps normalized per-iteration posteriors for every
    variable; ``halt_on_match`` may be disabled for diagnostics so the
    decoder always runs ``max_iter`` iterations.
    """

    schedule: str = "parallel"
    max_iter: int = 30
    alpha_c: float | None = None
    alpha_v: float | None = None
    beta: float | None = None
    clamp_eps: float = 1e-12
    record_trace: bool = False
    halt_on_match: bool = True

    def __post_init__(self):
        if self.schedule not in SCHEDULES:
            raise ValueError(f"schedule must be one of {SCHEDULES}")
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise ValueError("max_iter must be a positive integer")
        active = [
            name
            for name, value in (
                ("alpha_c", self.alpha_c),
                ("alpha_v", self.alpha_v),
                ("beta", self.beta),
            )
            if value is not None
        ]
        if len(active) > 1:
            raise ValueError(f"at most one modifier may be active, got {active}")
        if self.alpha_c is not None and not self.alpha_c > 0:
            raise ValueError("alpha_c must be positive")
        if self.alpha_v is not None and not self.alpha_v > 0:
            raise ValueError("alpha_v must be positive")
        if self.beta is not None and self.beta < 0:
            raise ValueError("beta must be nonnegative")
        if not 0.0 < self.clamp_eps < 0.5:
            raise ValueError("clamp_eps must lie in (0, 0.5)")

    def mode_param(self) -> tuple[int, float]:
        """Kernel (mode, parameter) pair.

        alpha = 1 and beta = 0 are exact identities, so they are routed to
        the unmodified path; this keeps the equality bitwise rather than
        depending on pow/exp rounding.
        """
        if self.alpha_c is not None and self.alpha_c != 1.0:
            return K.MOD_ALPHA_C, 1.0 / self.alpha_c
        if self.alpha_v is not None and self.alpha_v != 1.0:
            return K.MOD_ALPHA_V, 1.0 / self.alpha_v
        if self.beta is not None and self.beta != 0.0:
            return K.MOD_BETA, math.exp(self.beta)
        return K.MOD_NONE, 0.0


@dataclass
class DecodeResult:
    """Outcome of one decoding call.

    estimate is a bit vector for the binary decoder and a PauliString for
    the quaternary one.  iterations counts executed iterations (equal to
    max_iter when the decoder fails).  trace holds normalized posteriors
    per iteration when requested; message_log holds per-iteration copies of
    the d messages; message_bounds and edge_updates expose the kernel
    instrumentation (message extrema and update counts).
    """

    success: bool
    estimate: object
    iterations: int
    trace: np.ndarray | None = None
    message_log: list | None = None
    message_bounds: dict = field(default_factory=dict)
    edge_updates: tuple[int, int] = (0, 0)


def coerce_binary_priors(priors, n: int) -> np.ndarray:
    if isinstance(priors, np.ndarray) and priors.shape == (n, 2):
        arr = priors.astype(float, copy=True)
    else:
        seq = list(priors)
        if len(seq) != n:
            raise ValueError(f"expected {n} priors, got {len(seq)}")
        arr = np.empty((n, 2))
        for i, p in enumerate(seq):
            if isinstance(p, BinaryPrior):
                arr[i] = (p.p0, p.p1)
            else:
                arr[i] = p
    if not np.all((arr > 0.0) & (arr < 1.0)):
        raise ValueError("prior probabilities must lie in (0, 1)")
    if np.max(np.abs(arr.sum(axis=1) - 1.0)) > 1e-9:
        raise ValueError("priors must sum to 1")
    return arr


class _TannerArrays:
    """Flat check-major and variable-major adjacency used by the kernels."""

    def __init__(self, by_check: list[np.ndarray], n_var: int):
        lengths = [idx.size for idx in by_check]
        self.n_chk = len(by_check)
        self.n_var = n_var
        self.chk_ptr = np.zeros(self.n_chk + 1, dtype=np.int64)
        np.cumsum(lengths, out=self.chk_ptr[1:])
        self.n_edges = int(self.chk_ptr[-1])
        self.chk_var = (
            np.concatenate(by_check).astype(np.int64)
            if self.n_edges
            else np.zeros(0, dtype=np.int64)
        )
        self.edge_chk = np.repeat(
            np.arange(self.n_chk, dtype=np.int64), lengths
        )
        # variable-major view: stable sort keeps each variable's edges in
        # ascending check order
        order = np.argsort(self.chk_var, kind="stable")
        self.var_edge = order.astype(np.int64)
        counts = np.bincount(self.chk_var, minlength=n_var)
        self.var_ptr = np.zeros(n_var + 1, dtype=np.int64)
        np.cumsum(counts, out=self.var_ptr[1:])
        self.max_var_degree = int(counts.max()) if n_var else 0


class Bp2Decoder:
    """Reusable binary decoder for one parity-check matrix.

    Instances hold preallocated message buffers and are therefore not
    thread-safe; build one decoder per worker.
    """

    def __init__(self, h):
        dense = as_dense(h)
        self.h = dense
        self.m, self.n = dense.shape
        by_check = [np.nonzero(row)[0] for row in dense]
        self.graph = _TannerArrays(by_check, self.n)
        g = self.graph
        self._d = np.zeros(g.n_edges)
        self._delta = np.zeros(g.n_edges)
        self._r0 = np.zeros(g.n_edges)
        self._r1 = np.zeros(g.n_edges)
        self._q_post = np.zeros((self.n, 2))
        self._e_hat = np.zeros(self.n, dtype=np.uint8)
        self._pre = np.zeros((g.max_var_degree + 1, 2))
        self._suf = np.zeros((g.max_var_degree + 1, 2))

    def decode(
        self,
        syndrome,
        priors,
        cfg: DecoderConfig,
        *,
        record_messages: bool = False,
    ) -> DecodeResult:
        g = self.graph
        z_bits = np.asarray(syndrome, dtype=np.uint8).ravel()
        if z_bits.size != self.m:
            raise ValueError(f"syndrome length {z_bits.size} != {self.m} checks")
        if z_bits.size and z_bits.max() > 1:
            raise ValueError("syndrome bits must be 0 or 1")
        prior = coerce_binary_priors(priors, self.n)
        z_sign = 1.0 - 2.0 * z_bits.astype(float)
        mode, param = cfg.mode_param()
        stats = np.array([np.inf, -np.inf, np.inf, -np.inf, 0.0])
        counts = np.zeros(2, dtype=np.int64)

        K.bp2_init(g.var_ptr, g.var_edge, prior, self._d, stats)
        step = K.bp2_parallel_step if cfg.schedule == "parallel" else K.bp2_serial_step

        trace = [] if cfg.record_trace else None
        message_log = [] if record_messages else None
        success = False
        iterations = 0
        for _ in range(cfg.max_iter):
            matched = step(
                g.chk_ptr, g.chk_var, g.edge_chk, g.var_ptr, g.var_edge,
                z_bits, z_sign, prior, self._d, self._delta, self._r0, self._r1,
                self._q_post, self._e_hat, mode, param, cfg.clamp_eps,
                self._pre, self._suf, stats, counts,
            )
            iterations += 1
            if trace is not None:
                post = self._q_post.copy()
                post /= post.sum(axis=1, keepdims=True)
                trace.append(post)
            if message_log is not None:
                message_log.append(self._d.copy())
            if matched:
                success = True
                if cfg.halt_on_match:
                    break
                continue
            success = False

        bounds = {
            "d": (float(stats[0]), float(stats[1])),
            "delta": (float(stats[2]), float(stats[3])),
            "pair_dev": float(stats[4]),
        }
        return DecodeResult(
            success=success,
            estimate=self._e_hat.copy(),
            iterations=iterations,
            trace=np.stack(trace) if trace else None,
            message_log=message_log,
            message_bounds=bounds,
            edge_updates=(int(counts[0]), int(counts[1])),
        )


def bp2_decode(
    h,
    syndrome,
    priors,
    cfg: DecoderConfig | None = None,
    *,
    record_messages: bool = False,
) -> DecodeResult:
    """One-shot decode; builds a throwaway :class:`Bp2Decoder`."""
    return Bp2Decoder(h).decode(
        syndrome, priors, cfg or DecoderConfig(), record_messages=record_messages
    )
