"""Quaternary belief propagation for stabilizer codes.

Two implementations of the same check-node marginalization live here:

* :class:`Bp4Decoder` / :func:`bp4_decode` -- the production delta-rule
  decoder.  Each edge carries the scalar difference between the "commutes
  with this row" and "anticommutes" belief masses, so check updates reduce
  to signed products and both schedules exchange one scalar per edge per
  iteration.
* :func:`conventional_bp4` -- a plain reference decoder passing 4-vector
  messages, with the check update done by convolving per-neighbor
  commute/anticommute mass pairs under the syndrome parity constraint.
  It exists as an independent cross-check for the delta rule and is only
  meant for test-scale codes.

:func:`bp2_on_stabilizer` decodes the same syndrome with the binary decoder
over the M x 2N expansion of the code.
"""

from __future__ import annotations

import io

import numpy as np

from . import _kernels as K
from .bp2 import Bp2Decoder, DecodeResult, DecoderConfig, _TannerArrays
from .pauli import PauliString
from .stabilizer import StabilizerCode

__all__ = [
    "Bp4Decoder",
    "bp4_decode",
    "conventional_bp4",
    "bp2_on_stabilizer",
    "coerce_quaternary_priors",
    "trace_to_csv",
]


def coerce_quaternary_priors(priors, n: int) -> np.ndarray:
    arr = np.asarray(priors, dtype=float)
    if arr.shape != (n, 4):
        raise ValueError(f"expected priors of shape ({n}, 4), got {arr.shape}")
    arr = arr.copy()
    if not np.all((arr > 0.0) & (arr < 1.0)):
        raise ValueError("prior probabilities must lie in (0, 1)")
    if np.max(np.abs(arr.sum(axis=1) - 1.0)) > 1e-9:
        raise ValueError("priors must sum to 1")
    return arr


class Bp4Decoder:
    """Reusable delta-rule decoder bound to one stabilizer code.

    Holds preallocated message buffers; use one instance per thread.
    """

    def __init__(self, code: StabilizerCode):
        self.code = code
        by_check = [
            np.array([q for q, _ in adj], dtype=np.int64) for adj in code.check_adj
        ]
        self.graph = _TannerArrays(by_check, code.n)
        self.chk_pauli = (
            np.concatenate(
                [np.array([int(p) for _, p in adj], dtype=np.uint8)
                 for adj in code.check_adj]
            )
            if self.graph.n_edges
            else np.zeros(0, dtype=np.uint8)
        )
        g = self.graph
        self._d = np.zeros(g.n_edges)
        self._delta = np.zeros(g.n_edges)
        self._r0 = np.zeros(g.n_edges)
        self._r1 = np.zeros(g.n_edges)
        self._q_post = np.zeros((code.n, 4))
        self._e_hat = np.zeros(code.n, dtype=np.uint8)
        self._pre = np.zeros((g.max_var_degree + 1, 4))
        self._suf = np.zeros((g.max_var_degree + 1, 4))

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
        if z_bits.size != self.code.m:
            raise ValueError(f"syndrome length {z_bits.size} != {self.code.m} checks")
        if z_bits.size and z_bits.max() > 1:
            raise ValueError("syndrome bits must be 0 or 1")
        prior = coerce_quaternary_priors(priors, self.code.n)
        z_sign = 1.0 - 2.0 * z_bits.astype(float)
        mode, param = cfg.mode_param()
        stats = np.array([np.inf, -np.inf, np.inf, -np.inf, 0.0])
        counts = np.zeros(2, dtype=np.int64)

        K.bp4_init(g.var_ptr, g.var_edge, self.chk_pauli, prior, self._d, stats)
        step = K.bp4_parallel_step if cfg.schedule == "parallel" else K.bp4_serial_step

        trace = [] if cfg.record_trace else None
        message_log = [] if record_messages else None
        success = False
        iterations = 0
        for _ in range(cfg.max_iter):
            matched = step(
                g.chk_ptr, g.chk_var, self.chk_pauli, g.edge_chk, g.var_ptr,
                g.var_edge, z_bits, z_sign, prior, self._d, self._delta,
                self._r0, self._r1, self._q_post, self._e_hat, mode, param,
                cfg.clamp_eps, self._pre, self._suf, stats, counts,
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
            estimate=PauliString.from_codes(self._e_hat),
            iterations=iterations,
            trace=np.stack(trace) if trace else None,
            message_log=message_log,
            message_bounds=bounds,
            edge_updates=(int(counts[0]), int(counts[1])),
        )


def bp4_decode(
    code: StabilizerCode,
    syndrome,
    priors,
    cfg: DecoderConfig | None = None,
    *,
    record_messages: bool = False,
) -> DecodeResult:
    """One-shot delta-rule decode of a syndrome."""
    return Bp4Decoder(code).decode(
        syndrome, priors, cfg or DecoderConfig(), record_messages=record_messages
    )


# -- reference decoder ----------------------------------------------------------


def _pair_conv(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float]:
    return (a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def conventional_bp4(
    code: StabilizerCode,
    syndrome,
    priors,
    schedule: str = "parallel",
    max_iter: int = 30,
    *,
    clamp_eps: float = 1e-12,
    record_trace: bool = False,
    halt_on_match: bool = True,
    max_check_degree: int = 32,
) -> DecodeResult:
    """Reference 4-vector decoder (test-scale only).

    The check-to-variable message for candidate W sums the product of the
    neighbors' beliefs over all of their joint assignments whose total
    commutation parity with the row matches the syndrome bit; with the
    neighbors aggregated into commute/anticommute mass pairs this is a
    two-bucket parity convolution.
    """
    if schedule not in ("parallel", "serial"):
        raise ValueError("schedule must be 'parallel' or 'serial'")
    if max_iter < 1:
        raise ValueError("max_iter must be a positive integer")
    z_bits = np.asarray(syndrome, dtype=np.uint8).ravel()
    if z_bits.size != code.m:
        raise ValueError(f"syndrome length {z_bits.size} != {code.m} checks")
    prior = coerce_quaternary_priors(priors, code.n)

    # adjacency with explicit edge ids, check-major
    edge_var: list[int] = []
    edge_pauli: list[int] = []
    edge_check: list[int] = []
    edges_of_check: list[list[int]] = []
    edges_of_var: list[list[int]] = [[] for _ in range(code.n)]
    for m, adj in enumerate(code.check_adj):
        if len(adj) > max_check_degree:
            raise ValueError(
                f"check degree {len(adj)} exceeds the reference-decoder guard "
                f"({max_check_degree})"
            )
        ids = []
        for q, p in adj:
            e = len(edge_var)
            edge_var.append(q)
            edge_pauli.append(int(p))
            edge_check.append(m)
            edges_of_var[q].append(e)
            ids.append(e)
        edges_of_check.append(ids)
    n_edges = len(edge_var)

    # anti[e][w]: does candidate w anticommute with the row's Pauli on edge e
    anti = np.zeros((n_edges, 4), dtype=np.uint8)
    for e in range(n_edges):
        s = edge_pauli[e]
        for w in range(4):
            anti[e, w] = 1 if (w != 0 and w != s) else 0

    q_msg = np.empty((n_edges, 4))
    for e in range(n_edges):
        q_msg[e] = prior[edge_var[e]]
    r_msg = np.ones((n_edges, 4))

    def check_update(m: int, only_edge: int | None = None) -> None:
        ids = edges_of_check[m]
        k = len(ids)
        pairs = []
        for e in ids:
            mass1 = float(q_msg[e] @ anti[e])
            pairs.append((float(q_msg[e].sum()) - mass1, mass1))
        pref = [(1.0, 0.0)] * (k + 1)
        for i in range(k):
            pref[i + 1] = _pair_conv(pref[i], pairs[i])
        suff = [(1.0, 0.0)] * (k + 1)
        for i in range(k - 1, -1, -1):
            suff[i] = _pair_conv(suff[i + 1], pairs[i])
        zm = int(z_bits[m])
        for i, e in enumerate(ids):
            if only_edge is not None and e != only_edge:
                continue
            even, odd = _pair_conv(pref[i], suff[i + 1])
            t0 = even if zm == 0 else odd   # value seen by commuting candidates
            t1 = odd if zm == 0 else even
            t0 = min(max(t0, clamp_eps), 1.0 - clamp_eps)
            t1 = min(max(t1, clamp_eps), 1.0 - clamp_eps)
            tot = t0 + t1
            t0 /= tot
            t1 /= tot
            for w in range(4):
                r_msg[e, w] = t1 if anti[e, w] else t0

    def var_output(n: int, only_edge: int | None = None) -> None:
        ids = edges_of_var[n]
        for e in ids:
            if only_edge is not None and e != only_edge:
                continue
            out = prior[n].copy()
            for e2 in ids:
                if e2 != e:
                    out *= r_msg[e2]
            tot = out.sum()
            if tot <= 0.0:
                out[:] = 0.25
            else:
                out /= tot
            q_msg[e] = out

    def posterior(n: int) -> np.ndarray:
        out = prior[n].copy()
        for e in edges_of_var[n]:
            out *= r_msg[e]
        return out

    q_post = np.zeros((code.n, 4))
    trace = [] if record_trace else None
    success = False
    iterations = 0
    for _ in range(max_iter):
        if schedule == "parallel":
            for m in range(code.m):
                check_update(m)
            for n in range(code.n):
                var_output(n)
            for n in range(code.n):
                q_post[n] = posterior(n)
        else:
            for n in range(code.n):
                for e in edges_of_var[n]:
                    # refresh this edge's incoming message with current beliefs
                    check_update(edge_check[e], only_edge=e)
                var_output(n)
                q_post[n] = posterior(n)
        e_hat = np.array([int(np.argmax(q_post[n])) for n in range(code.n)],
                         dtype=np.uint8)
        iterations += 1
        if trace is not None:
            post = q_post.copy()
            post /= post.sum(axis=1, keepdims=True)
            trace.append(post)
        matched = True
        for m in range(code.m):
            par = 0
            for e in edges_of_check[m]:
                par ^= int(anti[e, e_hat[edge_var[e]]])
            if par != int(z_bits[m]):
                matched = False
                break
        if matched:
            success = True
            if halt_on_match:
                break
            continue
        success = False

    return DecodeResult(
        success=success,
        estimate=PauliString.from_codes(e_hat),
        iterations=iterations,
        trace=np.stack(trace) if trace else None,
    )


# -- binary decoding of stabilizer syndromes -------------------------------------


def bp2_on_stabilizer(
    code: StabilizerCode,
    syndrome,
    epsilon: float,
    cfg: DecoderConfig | None = None,
    *,
    record_messages: bool = False,
) -> DecodeResult:
    """Decode a stabilizer syndrome with the binary decoder.

    The code is expanded to its M x 2N binary check matrix and each of the
    2N bits gets the depolarizing marginal p1 = 2*epsilon/3.  The returned
    estimate is converted back to a PauliString.
    """
    h, prior_rule = code.to_binary_check()
    dec = Bp2Decoder(h)
    res = dec.decode(
        syndrome, prior_rule(epsilon), cfg or DecoderConfig(),
        record_messages=record_messages,
    )
    res.estimate = PauliString.from_symplectic(res.estimate)
    return res


def trace_to_csv(trace: np.ndarray, qubits=None) -> str:
    """Render a quaternary marginal trace as CSV.

    Columns: iteration (1-based), qubit, pI, pX, pY, pZ.
    """
    if trace is None:
        raise ValueError("decode was run without record_trace")
    if trace.ndim != 3 or trace.shape[2] != 4:
        raise ValueError("expected a trace of shape (iterations, qubits, 4)")
    sel = range(trace.shape[1]) if qubits is None else qubits
    buf = io.StringIO()
    buf.write("iteration,qubit,pI,pX,pY,pZ\n")
    for it in range(trace.shape[0]):
        for q in sel:
            row = trace[it, q]
            buf.write(
                f"{it + 1},{q},{row[0]:.12g},{row[1]:.12g},"
                f"{row[2]:.12g},{row[3]:.12g}\n"
            )
    return buf.getvalue()
