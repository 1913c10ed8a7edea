"""Quadratic forms over GF(2): evaluation, polar forms, classification, isometry.

A form is stored by its values on the standard basis (``diag``) and the polar
coefficients b_ij for i < j (``upper``, one packed int per row).  Every form on
GF(2)^l is isometric to exactly one of

    H+^m1 (+) 0^m2        H- (+) H+^(m1-1) (+) 0^m2        H+^m1 (+) Q1 (+) 0^(m2-1)

with 2*m1 + m2 = l, plus the zero form; ``classify`` computes which, and
``normal_form_witness`` produces an explicit change of basis onto it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .f2linalg import (
    MAX_DIM,
    BitMatrix,
    BitVector,
    invertible_matrices,
    is_invertible,
    kernel_basis,
    rank,
    symplectic_basis,
)

_parity = lambda x: x.bit_count() & 1


class Kind(enum.Enum):
    PLUS = "Plus"
    MINUS = "Minus"
    QONE = "QOne"
    ZERO = "Zero"


@dataclass(frozen=True)
class QuadraticForm:
    """dim-dimensional quadratic form; upper[i] holds bits b_ij for j > i."""

    dim: int
    diag: int
    upper: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension {self.dim} out of range")
        if self.diag >> self.dim:
            raise ValueError("diag bits set beyond dimension")
        if len(self.upper) != self.dim:
            raise ValueError("upper row count mismatch")
        for i, row in enumerate(self.upper):
            if row & ((1 << (i + 1)) - 1) or row >> self.dim:
                raise ValueError(f"upper row {i} has bits outside j > i range")

    # -- evaluation ---------------------------------------------------------

    def eval_bits(self, v: int) -> int:
        acc = self.diag & v
        w = v
        while w:
            i = (w & -w).bit_length() - 1
            w &= w - 1
            acc ^= self.upper[i] & v
        return _parity(acc)

    def __call__(self, v: BitVector) -> int:
        if v.dim != self.dim:
            raise ValueError("dimension mismatch")
        return self.eval_bits(v.bits)

    @cached_property
    def value_table(self) -> tuple[int, ...]:
        """Q(v) for every v in 0..2^dim-1 (only materialized for small dims)."""
        return tuple(self.eval_bits(v) for v in range(1 << self.dim))

    def is_zero_form(self) -> bool:
        return self.diag == 0 and not any(self.upper)

    # -- polar form ---------------------------------------------------------

    def polar(self) -> BitMatrix:
        """The associated alternating bilinear form B_Q as a symmetric matrix."""
        n = self.dim
        data = list(self.upper)
        for i in range(n):
            for j in range(i + 1, n):
                if (self.upper[i] >> j) & 1:
                    data[j] |= 1 << i
        return BitMatrix(n, n, tuple(data))

    def bilinear_bits(self, u: int, v: int) -> int:
        """B_Q(u, v) = Q(u+v) + Q(u) + Q(v)."""
        return self.eval_bits(u ^ v) ^ self.eval_bits(u) ^ self.eval_bits(v)

    # -- serialization ------------------------------------------------------

    def to_string(self) -> str:
        d = "".join(str((self.diag >> i) & 1) for i in range(self.dim))
        u = "".join(
            str((self.upper[i] >> j) & 1)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )
        return f"l={self.dim};d={d};u={u}"


def parse_form(spec: str) -> QuadraticForm:
    """Parse the `l=<dim>;d=<bits>;u=<bits>` serialization; rejects bad counts."""
    parts = spec.strip().split(";")
    if len(parts) != 3:
        raise ValueError("form spec must have three ;-separated fields l, d, u")
    fields = {}
    for part, key in zip(parts, ("l", "d", "u")):
        if not part.startswith(key + "="):
            raise ValueError(f"expected field {key}= in {part!r}")
        fields[key] = part[2:]
    try:
        dim = int(fields["l"])
    except ValueError:
        raise ValueError(f"invalid dimension {fields['l']!r}") from None
    if not 0 <= dim <= MAX_DIM:
        raise ValueError(f"dimension {dim} out of range [0, {MAX_DIM}]")
    d = fields["d"]
    if len(d) != dim:
        raise ValueError(f"field d needs {dim} bits, got {len(d)}")
    u = fields["u"]
    if len(u) != dim * (dim - 1) // 2:
        raise ValueError(f"field u needs {dim * (dim - 1) // 2} bits, got {len(u)}")
    if set(d + u) - {"0", "1"}:
        raise ValueError("fields d and u must be binary strings")
    diag = sum(1 << i for i, ch in enumerate(d) if ch == "1")
    upper = [0] * dim
    k = 0
    for i in range(dim):
        for j in range(i + 1, dim):
            if u[k] == "1":
                upper[i] |= 1 << j
            k += 1
    return QuadraticForm(dim, diag, tuple(upper))


# -- standard constructors ----------------------------------------------------


def h_plus() -> QuadraticForm:
    """H+(x, y) = xy."""
    return QuadraticForm(2, 0b00, (0b10, 0))


def h_minus() -> QuadraticForm:
    """H-(x, y) = x^2 + y^2 + xy."""
    return QuadraticForm(2, 0b11, (0b10, 0))


def q_one() -> QuadraticForm:
    """Q1(x) = x^2."""
    return QuadraticForm(1, 1, (0,))


def zero_form(n: int) -> QuadraticForm:
    return QuadraticForm(n, 0, (0,) * n)


def direct_sum(q: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    n, n2 = q.dim, q2.dim
    if n + n2 > MAX_DIM:
        raise ValueError("combined dimension exceeds cap")
    upper = list(q.upper) + [row << n for row in q2.upper]
    return QuadraticForm(n + n2, q.diag | (q2.diag << n), tuple(upper))


def sum_forms(*qs: QuadraticForm) -> QuadraticForm:
    acc = zero_form(0)
    for q in qs:
        acc = direct_sum(acc, q)
    return acc


# -- change of basis ----------------------------------------------------------


@dataclass(frozen=True)
class Isometry:
    """An invertible change of basis carrying one form onto another."""

    map: BitMatrix

    def __post_init__(self):
        if not is_invertible(self.map):
            raise ValueError("isometry matrix must be invertible")


def change_basis(q: QuadraticForm, t: BitMatrix) -> QuadraticForm:
    """The form v -> Q(Tv); columns of T are the new basis vectors."""
    n = q.dim
    if t.rows != n or t.cols != n:
        raise ValueError("basis change must be square of matching dimension")
    if not is_invertible(t):
        raise ValueError("basis change must be invertible")
    cols = [t.col(j).bits for j in range(n)]
    diag = 0
    upper = [0] * n
    for i in range(n):
        diag |= q.eval_bits(cols[i]) << i
        for j in range(i + 1, n):
            upper[i] |= q.bilinear_bits(cols[i], cols[j]) << j
    return QuadraticForm(n, diag, tuple(upper))


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class FormClass:
    """Complete isometry invariant: hyperbolic rank m1, kind, corank m2."""

    dim: int
    m1: int
    kind: Kind
    m2: int

    def __post_init__(self):
        if 2 * self.m1 + self.m2 != self.dim:
            raise ValueError("2*m1 + m2 must equal dim")
        if self.kind is Kind.MINUS and self.m1 < 1:
            raise ValueError("Minus kind requires m1 >= 1")
        if self.kind is Kind.QONE and self.m2 < 1:
            raise ValueError("QOne kind requires m2 >= 1")
        if self.kind is Kind.ZERO and self.m1 != 0:
            raise ValueError("Zero kind requires m1 = 0")

    def describe(self) -> str:
        parts = []
        m1, m2 = self.m1, self.m2
        if self.kind is Kind.MINUS:
            parts.append("H-")
            m1 -= 1
        if m1 > 0:
            parts.append("H+" if m1 == 1 else f"H+^{m1}")
        if self.kind is Kind.QONE:
            parts.append("Q1")
            m2 -= 1
        if m2 > 0:
            parts.append("0" if m2 == 1 else f"0^{m2}")
        return " + ".join(parts) if parts else "0^0"


def classify(q: QuadraticForm) -> FormClass:
    """Normal-form descriptor of q (complete isometry invariant).

    Radical of the polar form first; if Q is nonzero there the class is QOne
    (which absorbs the Arf sign); otherwise the Arf-type sum over a symplectic
    basis separates Plus from Minus.
    """
    n = q.dim
    if q.is_zero_form():
        return FormClass(n, 0, Kind.ZERO, n)
    p = q.polar()
    pairs, radical = symplectic_basis(p)
    m1 = len(pairs)
    m2 = n - 2 * m1
    # Q restricted to the radical is linear, so basis values decide it.
    if any(q.eval_bits(r.bits) for r in radical):
        return FormClass(n, m1, Kind.QONE, m2)
    arf = 0
    for a, b in pairs:
        arf ^= q.eval_bits(a.bits) & q.eval_bits(b.bits)
    return FormClass(n, m1, Kind.MINUS if arf else Kind.PLUS, m2)


def standard_form(fc: FormClass) -> QuadraticForm:
    """The canonical representative: H- first, then H+ blocks, then Q1, then zeros."""
    parts: list[QuadraticForm] = []
    m1 = fc.m1
    if fc.kind is Kind.MINUS:
        parts.append(h_minus())
        m1 -= 1
    parts.extend(h_plus() for _ in range(m1))
    m2 = fc.m2
    if fc.kind is Kind.QONE:
        parts.append(q_one())
        m2 -= 1
    parts.append(zero_form(m2))
    return sum_forms(*parts)


def is_isometric(q: QuadraticForm, q2: QuadraticForm) -> bool:
    return q.dim == q2.dim and classify(q) == classify(q2)


# -- constructive witnesses ---------------------------------------------------


def _combine_minus_pairs(
    p1: tuple[int, int], p2: tuple[int, int]
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Rewrite two H- hyperbolic pairs as two H+ pairs spanning the same space."""
    a1, b1 = p1
    a2, b2 = p2
    return (a1 ^ a2 ^ b2, b1 ^ a2 ^ b2), (a2 ^ a1 ^ b1, b2 ^ a1 ^ b1)


def normal_form_witness(q: QuadraticForm) -> Isometry:
    """An invertible T with change_basis(q, T) equal, datum for datum, to
    standard_form(classify(q))."""
    n = q.dim
    if n == 0:
        return Isometry(BitMatrix.identity(0))
    pairs_v, radical_v = symplectic_basis(q.polar())
    ev = q.eval_bits

    plus: list[tuple[int, int]] = []
    minus: list[tuple[int, int]] = []
    for av, bv in pairs_v:
        a, b = av.bits, bv.bits
        qa, qb = ev(a), ev(b)
        if qa and qb:
            minus.append((a, b))
        elif qa:
            plus.append((b, a ^ b))
        elif qb:
            plus.append((a, a ^ b))
        else:
            plus.append((a, b))

    rads = [r.bits for r in radical_v]
    q_on_radical = any(ev(r) for r in rads)

    while len(minus) >= 2:
        p1, p2 = _combine_minus_pairs(minus[0], minus[1])
        minus = minus[2:]
        plus = [p1, p2] + plus

    cols: list[int] = []
    if q_on_radical:
        idx = next(i for i, r in enumerate(rads) if ev(r))
        r1 = rads[idx]
        others = [r if not ev(r) else r ^ r1 for i, r in enumerate(rads) if i != idx]
        if minus:
            a, b = minus.pop()
            plus = [(a ^ r1, b ^ r1)] + plus
        for a, b in plus:
            cols.extend((a, b))
        cols.append(r1)
        cols.extend(others)
    else:
        for a, b in minus:
            cols.extend((a, b))
        for a, b in plus:
            cols.extend((a, b))
        cols.extend(rads)

    t = BitMatrix.from_cols([BitVector(n, c) for c in cols])
    return Isometry(t)


# -- exhaustive oracle --------------------------------------------------------

ORACLE_DIM_CAP = 4


def isometry_oracle(q: QuadraticForm, q2: QuadraticForm) -> Isometry | None:
    """Exhaustively search GL(dim, GF(2)) for T with change_basis(q2, T) = q.

    Independent ground truth for classify; capped at dim 4 (20160 matrices).
    Returns the first witness in the fixed enumeration order, or None.
    """
    if q.dim != q2.dim:
        raise ValueError("oracle requires equal dimensions")
    n = q.dim
    if n > ORACLE_DIM_CAP:
        raise ValueError(f"oracle capped at dimension {ORACLE_DIM_CAP}")
    if n == 0:
        return Isometry(BitMatrix.identity(0))
    t1 = q.value_table
    t2 = q2.value_table
    for t in invertible_matrices(n):
        # change_basis(q2, t) == q  <=>  q2(Tv) == q(v) for all v
        if all(t2[t.matvec_bits(v)] == t1[v] for v in range(1 << n)):
            return Isometry(t)
    return None


def all_forms(dim: int):
    """Iterate every quadratic form on GF(2)^dim (2^(dim(dim+1)/2) of them)."""
    nupper = dim * (dim - 1) // 2
    positions = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    for diag in range(1 << dim):
        for ubits in range(1 << nupper):
            upper = [0] * dim
            for k, (i, j) in enumerate(positions):
                if (ubits >> k) & 1:
                    upper[i] |= 1 << j
            yield QuadraticForm(dim, diag, tuple(upper))


def random_form(dim: int, rng) -> QuadraticForm:
    upper = [0] * dim
    for i in range(dim):
        for j in range(i + 1, dim):
            if rng.getrandbits(1):
                upper[i] |= 1 << j
    return QuadraticForm(dim, rng.getrandbits(dim), tuple(upper))


def random_invertible(dim: int, rng) -> BitMatrix:
    while True:
        m = BitMatrix(dim, dim, tuple(rng.getrandbits(dim) for _ in range(dim)))
        if rank(m) == dim:
            return m
