import random

import pytest

from gexforms.f2linalg import (
    BitMatrix,
    BitVector,
    is_invertible,
    kernel_basis,
    rank,
    symplectic_basis,
)

CYCLE3 = BitMatrix(3, 3, (0b110, 0b101, 0b011))  # rows (011),(101),(110)


def test_rank_identity_and_zero():
    assert rank(BitMatrix.identity(3)) == 3
    assert rank(BitMatrix.zero(4, 4)) == 0


def test_rank_dependent_rows():
    assert rank(CYCLE3) == 2


def test_kernel_zero_and_identity():
    assert len(kernel_basis(BitMatrix.zero(2, 2))) == 2
    assert kernel_basis(BitMatrix.identity(3)) == []


def test_kernel_cycle():
    basis = kernel_basis(CYCLE3)
    assert basis == [BitVector(3, 0b111)]


def test_kernel_vectors_annihilate_and_are_independent():
    rng = random.Random(7)
    for _ in range(50):
        m = BitMatrix(5, 6, tuple(rng.getrandbits(6) for _ in range(5)))
        basis = kernel_basis(m)
        assert len(basis) == 6 - rank(m)
        for v in basis:
            assert m.matvec(v).is_zero()
        if basis:
            assert rank(BitMatrix.from_rows(basis)) == len(basis)


def test_is_invertible():
    assert is_invertible(BitMatrix.identity(4))
    assert not is_invertible(BitMatrix.zero(3, 3))
    assert is_invertible(BitMatrix(2, 2, (0b11, 0b10)))
    with pytest.raises(ValueError):
        is_invertible(BitMatrix.zero(2, 3))


def test_symplectic_zero_form():
    pairs, radical = symplectic_basis(BitMatrix.zero(3, 3))
    assert pairs == []
    assert len(radical) == 3


def test_symplectic_hyperbolic():
    b = BitMatrix(2, 2, (0b10, 0b01))
    pairs, radical = symplectic_basis(b)
    assert len(pairs) == 1 and radical == []


def test_symplectic_cycle():
    pairs, radical = symplectic_basis(CYCLE3)
    assert len(pairs) == 1
    assert radical == [BitVector(3, 0b111)]


def _bilinear(b, u, v):
    acc = 0
    for i in range(b.rows):
        if (u.bits >> i) & 1:
            acc ^= b.data[i]
    return (acc & v.bits).bit_count() & 1


def test_symplectic_block_structure_random():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randrange(1, 8)
        data = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.getrandbits(1):
                    data[i] |= 1 << j
                    data[j] |= 1 << i
        b = BitMatrix(n, n, tuple(data))
        pairs, radical = symplectic_basis(b)
        assert 2 * len(pairs) == rank(b)
        cols = [v for p in pairs for v in p] + radical
        t = BitMatrix.from_cols(cols)
        assert is_invertible(t)
        for i, u in enumerate(cols):
            for j, v in enumerate(cols):
                expected = 0
                if i // 2 == j // 2 and i != j and i < 2 * len(pairs):
                    expected = 1
                assert _bilinear(b, u, v) == expected


def test_rank_permutation_invariant():
    rng = random.Random(13)
    for _ in range(50):
        m = BitMatrix(4, 5, tuple(rng.getrandbits(5) for _ in range(4)))
        r = rank(m)
        rows = list(m.data)
        rng.shuffle(rows)
        assert rank(BitMatrix(4, 5, tuple(rows))) == r
        perm = list(range(5))
        rng.shuffle(perm)
        shuffled = tuple(
            sum(((row >> j) & 1) << perm[j] for j in range(5)) for row in rows
        )
        assert rank(BitMatrix(4, 5, shuffled)) == r


def test_symplectic_rejects_non_alternating():
    with pytest.raises(ValueError):
        symplectic_basis(BitMatrix.identity(2))
    with pytest.raises(ValueError):
        symplectic_basis(BitMatrix(2, 2, (0b10, 0b00)))
