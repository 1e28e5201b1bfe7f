"""Code constructors: five-qubit, bicycle, hypergraph product, BCH parity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import BinaryMatrix, as_dense, rref
from .pauli import PauliString
from .stabilizer import StabilizerCode

__all__ = [
    "five_qubit_code",
    "BicycleSpec",
    "bicycle_code",
    "hypergraph_product",
    "bch_parity",
    "css_code",
]

FIVE_QUBIT_ROWS = ("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ")


def five_qubit_code() -> StabilizerCode:
    """The [[5,1]] code; its four rows correct any single-qubit error."""
    return StabilizerCode(FIVE_QUBIT_ROWS, name="five_qubit")


def css_code(hx, hz, name: str | None = None) -> StabilizerCode:
    """CSS code with X-type rows on the support of hx and Z-type on hz."""
    hx = as_dense(hx)
    hz = as_dense(hz)
    if hx.shape[1] != hz.shape[1]:
        raise ValueError("hx and hz must have the same number of columns")
    n = hx.shape[1]
    zeros = np.zeros(n, dtype=np.uint8)
    rows = [PauliString(r, zeros) for r in hx]
    rows += [PauliString(zeros, r) for r in hz]
    return StabilizerCode(rows, name=name)


# -- bicycle ------------------------------------------------------------------


@dataclass(frozen=True)
class BicycleSpec:
    """Parameters of a random bicycle code.

    n: block length (even); m: rows kept per half after deletion;
    row_weight: number of ones in each circulant row; seed: RNG seed for the
    circulant column choice.
    """

    n: int
    m: int
    row_weight: int
    seed: int

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise ValueError("n must be even and positive")
        half = self.n // 2
        if not 0 < self.m <= half:
            raise ValueError("m must lie in 1..n/2")
        if not 0 < self.row_weight <= half:
            raise ValueError("row_weight must lie in 1..n/2")


def _circulant(first_row: np.ndarray) -> np.ndarray:
    size = first_row.size
    out = np.empty((size, size), dtype=np.uint8)
    for i in range(size):
        out[i] = np.roll(first_row, i)
    return out


def bicycle_code(spec: BicycleSpec) -> StabilizerCode:
    """Random bicycle code: H0 = [C | C^T] with rows deleted evenly.

    C is an (n/2 x n/2) circulant of the given row weight built from
    ``spec.seed``.  n/2 - m rows of H0 are then deleted greedily, each step
    removing the row whose removal most reduces the column-weight variance
    (ties resolved toward the lowest row index).  The same n-column matrix H
    provides both the X-type and the Z-type checks; [C|C^T] is self-dual, so
    the result is a valid CSS code.
    """
    half = spec.n // 2
    rng = np.random.default_rng(spec.seed)
    offsets = rng.choice(half, size=spec.row_weight, replace=False)
    first = np.zeros(half, dtype=np.uint8)
    first[offsets] = 1
    c = _circulant(first)
    h = np.hstack([c, c.T])

    keep = np.arange(half)
    for _ in range(half - spec.m):
        sub = h[keep]
        colw = sub.sum(axis=0)
        # column weights after deleting each candidate row, variance per row
        after = colw[None, :] - sub
        variances = after.var(axis=1)
        drop = int(np.argmin(variances))  # argmin takes the first = lowest index
        keep = np.delete(keep, drop)
    h = h[keep]

    name = f"bicycle_n{spec.n}_m{spec.m}_w{spec.row_weight}_s{spec.seed}"
    return css_code(h, h, name=name)


# -- hypergraph product ---------------------------------------------------------


def hypergraph_product(h1, h2, name: str | None = None) -> StabilizerCode:
    """Hypergraph product of two classical parity-check matrices.

    For h1 (m1 x n1) and h2 (m2 x n2) the X/Z check matrices on
    N = n1*n2 + m1*m2 qubits are

        HX = [h1 (x) I_n2 | I_m1 (x) h2^T]
        HZ = [I_n1 (x) h2 | h1^T (x) I_m2]

    which satisfy HX @ HZ^T = 0 mod 2 by construction.
    """
    a = as_dense(h1)
    b = as_dense(h2)
    m1, n1 = a.shape
    m2, n2 = b.shape
    hx = np.hstack([np.kron(a, np.eye(n2, dtype=np.uint8)),
                    np.kron(np.eye(m1, dtype=np.uint8), b.T)])
    hz = np.hstack([np.kron(np.eye(n1, dtype=np.uint8), b),
                    np.kron(a.T, np.eye(m2, dtype=np.uint8))])
    return css_code(hx % 2, hz % 2, name=name or f"hgp_{m1}x{n1}_{m2}x{n2}")


# -- cyclic BCH parity matrices --------------------------------------------------


def _poly_divmod(num: np.ndarray, den: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """GF(2)[x] division; polynomials as coefficient arrays, lowest degree first."""
    num = num.copy()
    dn = int(np.max(np.nonzero(den)[0]))
    quot = np.zeros(max(num.size - dn, 1), dtype=np.uint8)
    for shift in range(num.size - dn - 1, -1, -1):
        if num[shift + dn]:
            quot[shift] = 1
            num[shift : shift + dn + 1] ^= den[: dn + 1]
    return quot, num


# generator polynomials, lowest-degree coefficient first
_BCH_GENERATORS = {
    # [7,4,3]: g(x) = x^3 + x + 1
    "hamming7": (7, np.array([1, 1, 0, 1], dtype=np.uint8)),
    # [15,7,5]: g(x) = x^8 + x^7 + x^6 + x^4 + 1
    "bch15_7": (15, np.array([1, 0, 0, 0, 1, 0, 1, 1, 1], dtype=np.uint8)),
}

BCH_VARIANTS = tuple(sorted(_BCH_GENERATORS))


def bch_parity(variant: str) -> BinaryMatrix:
    """Full-rank parity-check matrix of a small cyclic BCH code.

    The rows start as cyclic shifts of the reversed check polynomial
    h(x) = (x^n + 1) / g(x) and are reduced to row echelon form.
    Variants: 'hamming7' ([7,4,3]) and 'bch15_7' ([15,7,5]).
    """
    try:
        n, gen = _BCH_GENERATORS[variant]
    except KeyError:
        raise ValueError(
            f"unknown BCH variant {variant!r}; options: {', '.join(BCH_VARIANTS)}"
        ) from None
    modulus = np.zeros(n + 1, dtype=np.uint8)
    modulus[0] = modulus[n] = 1
    check, rem = _poly_divmod(modulus, gen)
    if rem.any():
        raise ValueError(f"generator of {variant!r} does not divide x^{n}+1")
    k = int(np.max(np.nonzero(check)[0]))  # deg h = dimension of the code
    rev = check[: k + 1][::-1]
    rows = np.zeros((n - k, n), dtype=np.uint8)
    for i in range(n - k):
        rows[i, i : i + k + 1] = rev

    reduced, pivots = rref(rows)
    if len(pivots) != n - k:
        raise ValueError(f"parity rows of {variant!r} are not full rank")
    return BinaryMatrix(reduced)
