"""Pauli algebra over the bit-pair (symplectic) representation.

An n-qubit Pauli operator, with global phase ignored, is a pair of binary
vectors: ``x_bits`` marks positions acted on by X or Y, ``z_bits`` marks
positions acted on by Z or Y.  Two operators commute exactly when their
symplectic inner product

    <E, F> = sum_j (E.x[j] * F.z[j] + E.z[j] * F.x[j])  mod 2

vanishes; the product of two operators (again up to phase) is the XOR of
their bit vectors.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np

__all__ = [
    "Pauli",
    "PauliString",
    "inner_single",
    "inner",
    "multiply",
    "weight",
    "to_symplectic",
    "from_symplectic",
]

PAULI_CHARS = "IXYZ"

# bit pairs indexed by Pauli code: I=0, X=1, Y=2, Z=3
_X_BIT = np.array([0, 1, 1, 0], dtype=np.uint8)
_Z_BIT = np.array([0, 0, 1, 1], dtype=np.uint8)
# code indexed by x + 2*z
_CODE_FROM_BITS = np.array([0, 1, 3, 2], dtype=np.uint8)


class Pauli(IntEnum):
    """Single-qubit Pauli operator."""

    I = 0
    X = 1
    Y = 2
    Z = 3

    @property
    def x_bit(self) -> int:
        return int(_X_BIT[self.value])

    @property
    def z_bit(self) -> int:
        return int(_Z_BIT[self.value])

    @classmethod
    def from_bits(cls, x: int, z: int) -> "Pauli":
        return cls(int(_CODE_FROM_BITS[(x & 1) + 2 * (z & 1)]))


def inner_single(a: Pauli, b: Pauli) -> int:
    """Symplectic inner product of two single-qubit Paulis (1 = anticommute)."""
    a = Pauli(a)
    b = Pauli(b)
    return (a.x_bit * b.z_bit + a.z_bit * b.x_bit) % 2


def _as_bits(arr, n: int | None = None) -> np.ndarray:
    bits = np.asarray(arr)
    if bits.dtype == np.bool_:
        bits = bits.astype(np.uint8)
    # always copy so the stored vector is private and can be frozen
    bits = np.array(bits, dtype=np.uint8, order="C", copy=True)
    if bits.ndim != 1:
        raise ValueError("bit vector must be one-dimensional")
    if bits.size and bits.max() > 1:
        raise ValueError("bit vector entries must be 0 or 1")
    if n is not None and bits.size != n:
        raise ValueError(f"expected length {n}, got {bits.size}")
    return bits


class PauliString:
    """Immutable n-qubit Pauli operator (phase ignored).

    The text form reads left to right: qubit 0 is the leftmost letter.
    """

    __slots__ = ("x_bits", "z_bits")

    def __init__(self, x_bits, z_bits):
        x = _as_bits(x_bits)
        z = _as_bits(z_bits, n=x.size)
        x.setflags(write=False)
        z.setflags(write=False)
        self.x_bits = x
        self.z_bits = z

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_string(cls, text: str) -> "PauliString":
        text = text.strip().upper()
        codes = np.empty(len(text), dtype=np.uint8)
        for i, ch in enumerate(text):
            idx = PAULI_CHARS.find(ch)
            if idx < 0:
                raise ValueError(f"invalid Pauli character {ch!r}")
            codes[i] = idx
        return cls.from_codes(codes)

    @classmethod
    def from_codes(cls, codes) -> "PauliString":
        codes = np.asarray(codes, dtype=np.uint8)
        if codes.size and codes.max() > 3:
            raise ValueError("Pauli codes must lie in 0..3")
        return cls(_X_BIT[codes], _Z_BIT[codes])

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        zeros = np.zeros(n, dtype=np.uint8)
        return cls(zeros, zeros.copy())

    @classmethod
    def from_symplectic(cls, vec) -> "PauliString":
        vec = _as_bits(vec)
        if vec.size % 2:
            raise ValueError("symplectic vector must have even length")
        half = vec.size // 2
        return cls(vec[:half], vec[half:])

    # -- views -------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.x_bits.size

    def __len__(self) -> int:
        return self.n

    def codes(self) -> np.ndarray:
        """Per-qubit Pauli codes (0=I, 1=X, 2=Y, 3=Z)."""
        return _CODE_FROM_BITS[self.x_bits + 2 * self.z_bits]

    def to_symplectic(self) -> np.ndarray:
        """Length-2n binary vector (x_bits followed by z_bits)."""
        return np.concatenate([self.x_bits, self.z_bits])

    def weight(self) -> int:
        return int(np.count_nonzero(self.x_bits | self.z_bits))

    # -- algebra -----------------------------------------------------------

    def inner(self, other: "PauliString") -> int:
        """Symplectic inner product; 1 exactly when the operators anticommute."""
        if other.n != self.n:
            raise ValueError("length mismatch")
        terms = (self.x_bits & other.z_bits) ^ (self.z_bits & other.x_bits)
        return int(terms.sum() & 1)

    def __mul__(self, other: "PauliString") -> "PauliString":
        if other.n != self.n:
            raise ValueError("length mismatch")
        return PauliString(self.x_bits ^ other.x_bits, self.z_bits ^ other.z_bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return (
            self.n == other.n
            and bool(np.array_equal(self.x_bits, other.x_bits))
            and bool(np.array_equal(self.z_bits, other.z_bits))
        )

    def __hash__(self) -> int:
        return hash((self.x_bits.tobytes(), self.z_bits.tobytes()))

    def __str__(self) -> str:
        return "".join(PAULI_CHARS[c] for c in self.codes())

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r})"


# Functional aliases matching the operator names used throughout.

def inner(a: PauliString, b: PauliString) -> int:
    return a.inner(b)


def multiply(a: PauliString, b: PauliString) -> PauliString:
    return a * b


def weight(a: PauliString) -> int:
    return a.weight()


def to_symplectic(a: PauliString) -> np.ndarray:
    return a.to_symplectic()


def from_symplectic(vec) -> PauliString:
    return PauliString.from_symplectic(vec)
