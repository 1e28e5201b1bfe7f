"""Stabilizer code model: syndromes, degeneracy, and the binary expansion.

A code is given by M mutually commuting Pauli rows on N qubits.  The
syndrome of an error E is the vector of symplectic inner products with the
rows; an estimate that differs from the actual error by a product of rows
is operationally identical to it (degenerate success).
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Sequence

import numpy as np
import scipy.sparse as sp

from .gf2 import RowSpace
from .pauli import Pauli, PauliString

__all__ = [
    "StabilizerCode",
    "Outcome",
    "classify",
]


class Outcome(Enum):
    """Trial outcome buckets for decoding experiments."""

    EXACT_SUCCESS = "exact_success"
    DEGENERATE_SUCCESS = "degenerate_success"
    DETECTED_ERROR = "detected_error"
    UNDETECTED_ERROR = "undetected_error"

    @property
    def is_logical_error(self) -> bool:
        return self in (Outcome.DETECTED_ERROR, Outcome.UNDETECTED_ERROR)


class StabilizerCode:
    """M commuting Pauli rows on N qubits.

    Rows are validated for pairwise commutation at construction; the GF(2)
    elimination used by :meth:`stabilizer_membership` is also built eagerly
    so instances can be shared read-only between worker threads.
    """

    def __init__(self, rows: Sequence[PauliString | str], name: str | None = None):
        parsed = [
            r if isinstance(r, PauliString) else PauliString.from_string(r)
            for r in rows
        ]
        if not parsed:
            raise ValueError("a stabilizer code needs at least one row")
        n = parsed[0].n
        for r in parsed:
            if r.n != n:
                raise ValueError("all rows must act on the same number of qubits")
        self.rows: tuple[PauliString, ...] = tuple(parsed)
        self.n = n
        self.m = len(parsed)
        self.name = name or f"stabilizer_{self.n}x{self.m}"

        x = np.stack([r.x_bits for r in parsed])  # (m, n)
        z = np.stack([r.z_bits for r in parsed])
        comm = (x @ z.T + z @ x.T) % 2
        bad = np.argwhere(np.triu(comm, k=1))
        if bad.size:
            i, j = bad[0]
            raise ValueError(f"rows {i} and {j} anticommute; not a stabilizer code")

        self._row_x = x
        self._row_z = z
        # binary check matrix: row m is (z_bits || x_bits) so that
        # H @ (x_E || z_E) mod 2 reproduces the syndrome.
        self._binary_check = np.hstack([z, x]).astype(np.uint8)
        self._binary_check.setflags(write=False)
        self._syndrome_op = sp.csr_matrix(self._binary_check, dtype=np.int64)
        self._row_space = RowSpace(np.hstack([x, z]))

        # adjacency: per-check (qubit, Pauli) pairs and per-qubit check lists
        self.check_adj: list[list[tuple[int, Pauli]]] = []
        self.var_adj: list[list[int]] = [[] for _ in range(n)]
        for mi, row in enumerate(parsed):
            codes = row.codes()
            support = np.nonzero(codes)[0]
            self.check_adj.append([(int(q), Pauli(int(codes[q]))) for q in support])
            for q in support:
                self.var_adj[int(q)].append(mi)

    # -- basic parameters ----------------------------------------------------

    @property
    def rank(self) -> int:
        return self._row_space.rank

    @property
    def k(self) -> int:
        """Number of logical qubits, N minus the GF(2) rank of the rows."""
        return self.n - self.rank

    def row_weights(self) -> np.ndarray:
        return np.array([r.weight() for r in self.rows])

    def col_weights(self) -> np.ndarray:
        return np.array([len(a) for a in self.var_adj])

    # -- syndrome and degeneracy ----------------------------------------------

    def syndrome(self, error: PauliString) -> np.ndarray:
        """Length-M binary syndrome of ``error``."""
        if error.n != self.n:
            raise ValueError("error length does not match code")
        vec = np.concatenate([error.x_bits, error.z_bits])
        return np.asarray(self._syndrome_op @ vec % 2, dtype=np.uint8).ravel()

    def stabilizer_membership(self, op: PauliString) -> bool:
        """True when ``op`` is a product of stabilizer rows (phase ignored)."""
        if op.n != self.n:
            raise ValueError("operator length does not match code")
        return self._row_space.contains(op.to_symplectic())

    def to_binary_check(self) -> tuple[np.ndarray, Callable[[float], np.ndarray]]:
        """Binary-decoder view of the code.

        Returns the M x 2N check matrix H with rows (z_bits || x_bits) and a
        prior rule mapping a depolarizing rate to per-bit (p0, p1) pairs:
        each of the 2N bits flips with probability 2*epsilon/3 (two of the
        three Pauli errors touch any given bit).
        """
        h = self._binary_check

        def priors(epsilon: float) -> np.ndarray:
            if not 0.0 < epsilon < 0.75:
                raise ValueError("epsilon must lie in (0, 0.75)")
            p1 = 2.0 * epsilon / 3.0
            out = np.empty((2 * self.n, 2))
            out[:, 0] = 1.0 - p1
            out[:, 1] = p1
            return out

        return h, priors

    # -- text round trip -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(str(r) for r in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, name: str | None = None) -> "StabilizerCode":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty stabilizer text")
        header = lines[0].split()
        if len(header) != 2:
            raise ValueError("header must be 'N M'")
        n, m = (int(tok) for tok in header)
        body = lines[1:]
        if len(body) != m:
            raise ValueError(f"expected {m} rows, found {len(body)}")
        rows = []
        for ln in body:
            if len(ln) != n:
                raise ValueError(f"row {ln!r} does not have length {n}")
            rows.append(PauliString.from_string(ln))
        return cls(rows, name=name)

    def __repr__(self) -> str:
        return f"StabilizerCode(n={self.n}, m={self.m}, k={self.k}, name={self.name!r})"


def classify(
    code: StabilizerCode,
    actual: PauliString,
    estimate: PauliString,
    converged: bool,
) -> Outcome:
    """Bucket one decoding trial.

    A non-converged decoder is a detected error.  A converged estimate is an
    exact success when it equals the actual error, a degenerate success when
    it differs from it by a stabilizer, and an undetected error otherwise.
    """
    if not converged:
        return Outcome.DETECTED_ERROR
    if estimate == actual:
        return Outcome.EXACT_SUCCESS
    if code.stabilizer_membership(actual * estimate):
        return Outcome.DEGENERATE_SUCCESS
    return Outcome.UNDETECTED_ERROR
