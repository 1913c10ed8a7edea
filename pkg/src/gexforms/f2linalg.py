"""Exact linear algebra over GF(2) on word-packed vectors and matrices.

Vectors are stored as plain Python ints (bit i = coordinate i), wrapped in
small frozen dataclasses that carry the dimension.  Everything is immutable
and pure; dimensions are capped at 64 so a vector always fits a machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_DIM = 64


def _parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True)
class BitVector:
    """A vector in GF(2)^dim, coordinates packed into an int."""

    dim: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension {self.dim} out of range [0, {MAX_DIM}]")
        if self.bits >> self.dim:
            raise ValueError("bits set beyond dimension")

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.dim:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return BitVector(self.dim, self.bits ^ other.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_string(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.dim))

    @staticmethod
    def from_string(s: str, dim: int | None = None) -> "BitVector":
        if dim is not None and len(s) != dim:
            raise ValueError(f"expected {dim} bits, got {len(s)}")
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid bit character {ch!r}")
        return BitVector(len(s), bits)

    @staticmethod
    def unit(dim: int, i: int) -> "BitVector":
        if not 0 <= i < dim:
            raise ValueError(f"unit index {i} out of range")
        return BitVector(dim, 1 << i)

    @staticmethod
    def zero(dim: int) -> "BitVector":
        return BitVector(dim, 0)


@dataclass(frozen=True)
class BitMatrix:
    """A rows x cols matrix over GF(2); each row packed into an int (bit j = column j)."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if not (0 <= self.rows <= MAX_DIM and 0 <= self.cols <= MAX_DIM):
            raise ValueError("matrix dimensions out of range")
        if len(self.data) != self.rows:
            raise ValueError("row count mismatch")
        for r in self.data:
            if r >> self.cols:
                raise ValueError("row bits set beyond column count")

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def col(self, j: int) -> BitVector:
        bits = 0
        for i in range(self.rows):
            bits |= ((self.data[i] >> j) & 1) << i
        return BitVector(self.rows, bits)

    def matvec(self, v: BitVector) -> BitVector:
        """Matrix-vector product Mv over GF(2)."""
        if v.dim != self.cols:
            raise ValueError("dimension mismatch")
        bits = 0
        for i in range(self.rows):
            bits |= _parity(self.data[i] & v.bits) << i
        return BitVector(self.rows, bits)

    def matvec_bits(self, v: int) -> int:
        bits = 0
        for i in range(self.rows):
            bits |= _parity(self.data[i] & v) << i
        return bits

    def transpose(self) -> "BitMatrix":
        data = []
        for j in range(self.cols):
            row = 0
            for i in range(self.rows):
                row |= ((self.data[i] >> j) & 1) << i
            data.append(row)
        return BitMatrix(self.cols, self.rows, tuple(data))

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ot = other.transpose()
        data = tuple(
            sum(_parity(self.data[i] & ot.data[j]) << j for j in range(other.cols))
            for i in range(self.rows)
        )
        return BitMatrix(self.rows, other.cols, data)

    @staticmethod
    def identity(n: int) -> "BitMatrix":
        return BitMatrix(n, n, tuple(1 << i for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "BitMatrix":
        return BitMatrix(rows, cols, (0,) * rows)

    @staticmethod
    def from_rows(rows: list[BitVector]) -> "BitMatrix":
        if not rows:
            raise ValueError("cannot infer column count from empty row list")
        cols = rows[0].dim
        if any(r.dim != cols for r in rows):
            raise ValueError("inconsistent row dimensions")
        return BitMatrix(len(rows), cols, tuple(r.bits for r in rows))

    @staticmethod
    def from_cols(cols: list[BitVector]) -> "BitMatrix":
        return BitMatrix.from_rows(cols).transpose()

    def to_strings(self) -> list[str]:
        return [
            "".join(str((r >> j) & 1) for j in range(self.cols)) for r in self.data
        ]


def rank(m: BitMatrix) -> int:
    """GF(2) rank via Gaussian elimination (lowest-index pivot first)."""
    rows = list(m.data)
    r = 0
    for col in range(m.cols):
        pivot = None
        for i in range(r, len(rows)):
            if (rows[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        r += 1
    return r


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """A basis of the right kernel {v : Mv = 0}, in deterministic order.

    Reduces M to reduced row-echelon form; each free column yields one basis
    vector with a 1 in that column and back-substituted pivot entries.
    """
    rows = list(m.data)
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        pivot = None
        for i in range(r, len(rows)):
            if (rows[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for col in range(m.cols):
        if col in pivot_set:
            continue
        bits = 1 << col
        for pr, pc in enumerate(pivots):
            if (rows[pr] >> col) & 1:
                bits |= 1 << pc
        basis.append(BitVector(m.cols, bits))
    return basis


def is_invertible(m: BitMatrix) -> bool:
    if m.rows != m.cols:
        raise ValueError("is_invertible requires a square matrix")
    return rank(m) == m.rows


def symplectic_basis(
    b: BitMatrix,
) -> tuple[list[tuple[BitVector, BitVector]], list[BitVector]]:
    """Decompose an alternating bilinear form into hyperbolic pairs plus radical.

    Returns (pairs, radical) where each pair (a_i, b_i) satisfies B(a_i, b_i) = 1,
    B vanishes across distinct pairs and on/against the radical, and the pairs
    together with the radical form a basis.  Deterministic: always grabs the
    lowest-index available vector.
    """
    n = b.rows
    if b.rows != b.cols:
        raise ValueError("alternating form must be square")
    for i in range(n):
        if b.entry(i, i):
            raise ValueError("form has nonzero diagonal (not alternating)")
        for j in range(i + 1, n):
            if b.entry(i, j) != b.entry(j, i):
                raise ValueError("form is not symmetric")

    def _parity_acc(u: int, v: int) -> int:
        acc = 0
        for i in range(n):
            if (u >> i) & 1:
                acc ^= b.data[i]
        return _parity(acc & v)

    working = [1 << i for i in range(n)]
    pairs: list[tuple[BitVector, BitVector]] = []
    radical: list[int] = []
    while working:
        v = working[0]
        partner = None
        for w in working[1:]:
            if _parity_acc(v, w):
                partner = w
                break
        if partner is None:
            radical.append(v)
            working = working[1:]
            continue
        pairs.append((BitVector(n, v), BitVector(n, partner)))
        rest = []
        for u in working:
            if u in (v, partner):
                continue
            u2 = u
            if _parity_acc(u, partner):
                u2 ^= v
            if _parity_acc(u, v):
                u2 ^= partner
            rest.append(u2)
        working = rest
    return pairs, [BitVector(n, r) for r in radical]


@lru_cache(maxsize=None)
def invertible_matrices(n: int) -> tuple[BitMatrix, ...]:
    """All invertible n x n matrices over GF(2), in lexicographic column order.

    Cached; only sensible for n <= 4 (|GL(4, GF(2))| = 20160).
    """
    if n > 4:
        raise ValueError("invertible-matrix enumeration capped at n = 4")
    results: list[BitMatrix] = []

    def extend(cols: list[int], span: set[int]):
        if len(cols) == n:
            results.append(BitMatrix.from_cols([BitVector(n, c) for c in cols]))
            return
        for c in range(1, 1 << n):
            if c in span:
                continue
            new_span = {s ^ c for s in span} | span
            extend(cols + [c], new_span)

    extend([], {0})
    return tuple(results)
