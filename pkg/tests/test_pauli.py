"""Pauli algebra: the commutation table is the ground truth everything else
builds on, so it is pinned exhaustively against an independent lookup."""

import numpy as np
import pytest

from helpers import ANTI
from qbp.pauli import (
    Pauli,
    PauliString,
    from_symplectic,
    inner,
    inner_single,
    multiply,
    to_symplectic,
    weight,
)

PAULIS = "IXYZ"


def test_single_qubit_anticommutation_exhaustive():
    # distinct non-identity pairs anticommute, everything else commutes
    for p in range(4):
        for q in range(4):
            expected = int(p != 0 and q != 0 and p != q)
            assert inner_single(p, q) == expected == ANTI[p, q]


def test_enum_bit_conventions():
    assert [Pauli(c).x_bit for c in range(4)] == [0, 1, 1, 0]
    assert [Pauli(c).z_bit for c in range(4)] == [0, 0, 1, 1]
    for c in range(4):
        p = Pauli(c)
        assert Pauli.from_bits(p.x_bit, p.z_bit) is p


def test_inner_frozen_examples():
    xyz = PauliString.from_string("XYZ")
    zzy = PauliString.from_string("ZZY")
    assert inner(xyz, zzy) == 1
    assert inner(PauliString.from_string("XIZ"), PauliString.from_string("IXZ")) == 0


def test_inner_symmetry_and_product_rule():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        n = int(rng.integers(1, 9))
        a = PauliString.from_codes(rng.integers(0, 4, n))
        b = PauliString.from_codes(rng.integers(0, 4, n))
        c = PauliString.from_codes(rng.integers(0, 4, n))
        assert inner(a, b) == inner(b, a)
        # the inner product is linear over products (phases are dropped)
        assert inner(a * b, c) == (inner(a, c) + inner(b, c)) % 2


def test_multiply_frozen_example():
    a = PauliString.from_string("XYI")
    b = PauliString.from_string("IYZ")
    assert str(a * b) == "XIZ"
    assert str(multiply(a, b)) == "XIZ"


def test_multiply_properties():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 10))
        a = PauliString.from_codes(rng.integers(0, 4, n))
        b = PauliString.from_codes(rng.integers(0, 4, n))
        c = PauliString.from_codes(rng.integers(0, 4, n))
        assert a * a == PauliString.identity(n)
        assert a * PauliString.identity(n) == a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a  # phase-free composition is abelian


def test_string_round_trip_and_codes():
    s = "IXYZZYXI"
    p = PauliString.from_string(s)
    assert str(p) == s
    assert p.n == len(p) == 8
    assert p.codes().tolist() == [0, 1, 2, 3, 3, 2, 1, 0]
    assert PauliString.from_codes(p.codes()) == p
    assert weight(p) == 6


def test_symplectic_round_trip():
    rng = np.random.default_rng(99)
    for _ in range(50):
        n = int(rng.integers(1, 12))
        p = PauliString.from_codes(rng.integers(0, 4, n))
        vec = to_symplectic(p)
        assert vec.shape == (2 * n,)
        assert np.array_equal(vec[:n], p.x_bits)
        assert np.array_equal(vec[n:], p.z_bits)
        assert from_symplectic(vec) == p
        assert p.to_symplectic().tolist() == vec.tolist()


def test_bits_are_read_only():
    p = PauliString.from_string("XYZ")
    with pytest.raises((ValueError, RuntimeError)):
        p.x_bits[0] = 1
    with pytest.raises((ValueError, RuntimeError)):
        p.z_bits[0] = 1


def test_hash_consistency():
    a = PauliString.from_string("XYZI")
    b = PauliString.from_codes([1, 2, 3, 0])
    assert a == b and hash(a) == hash(b)
    assert a != PauliString.from_string("XYZZ")
    assert a != "XYZI"


def test_invalid_inputs():
    with pytest.raises(ValueError):
        PauliString.from_string("XQZ")
    with pytest.raises(ValueError):
        PauliString.from_codes([0, 4])
    a = PauliString.from_string("XX")
    b = PauliString.from_string("XXX")
    with pytest.raises(ValueError):
        inner(a, b)
    with pytest.raises(ValueError):
        multiply(a, b)
    with pytest.raises(ValueError):
        from_symplectic(np.array([1, 0, 1], dtype=np.uint8))


def test_identity_and_weight():
    e = PauliString.identity(6)
    assert str(e) == "IIIIII"
    assert e.weight() == 0
    assert PauliString.from_string("XIYIZ").weight() == 3
