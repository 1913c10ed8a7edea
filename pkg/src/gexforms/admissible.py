"""Admissible quadratic forms, decided three independent ways.

A form is admissible when it has a basis of vectors that all take value 1 and
none of which is B_Q-isolated within the basis.  The fast path reads the
verdict off the classification; the constructive path builds an explicit
basis; the brute-force path searches every candidate basis and serves as the
independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .f2linalg import BitMatrix, BitVector, is_invertible
from .quadform import Kind, QuadraticForm, classify, normal_form_witness


@dataclass(frozen=True)
class AdmissibleBasis:
    """A basis with Q = 1 on every vector and a B_Q-partner for each vector."""

    vectors: tuple[BitVector, ...]


def check_basis(q: QuadraticForm, basis: AdmissibleBasis) -> bool:
    """Verify all three admissible-basis invariants by direct evaluation."""
    vs = basis.vectors
    if len(vs) != q.dim or any(v.dim != q.dim for v in vs):
        return False
    if q.dim == 0:
        return False
    if not is_invertible(BitMatrix.from_cols(list(vs))):
        return False
    if any(q.eval_bits(v.bits) != 1 for v in vs):
        return False
    for i, v in enumerate(vs):
        if not any(
            q.bilinear_bits(v.bits, w.bits) for j, w in enumerate(vs) if j != i
        ):
            return False
    return True


def is_admissible(q: QuadraticForm) -> bool:
    """Classification-based verdict: zero summands never matter, and the
    admissible classes are exactly Plus with m1 >= 2, any Minus, and QOne
    with m1 >= 2."""
    fc = classify(q)
    if fc.kind is Kind.ZERO:
        return False
    if fc.kind is Kind.MINUS:
        return True
    if fc.kind is Kind.PLUS:
        return fc.m1 >= 2
    return fc.m1 >= 2  # QOne


def _minus_case_basis(m: int, m2: int) -> list[int]:
    """Basis for H- (+) H+^(m-1) (+) 0^m2 in normal-form coordinates."""
    vs = [(1 << (2 * i)) | (1 << (2 * i + 1)) for i in range(m)]
    vs.append(1)
    vs.extend(1 | (1 << (2 * k)) for k in range(1, m))
    vs.extend(vs[0] | (1 << (2 * m + j)) for j in range(m2))
    return vs


def _plus_case_basis(m: int) -> list[int]:
    """Basis for H+^m (m >= 2) in normal-form coordinates."""
    vs = [(1 << (2 * i)) | (1 << (2 * i + 1)) for i in range(m)]
    vs.append(1 | (1 << (2 * m - 2)) | (1 << (2 * m - 1)))
    vs.extend(
        (1 << (2 * k - 2)) | (1 << (2 * k - 1)) | (1 << (2 * k + 1))
        for k in range(1, m)
    )
    return vs


def admissible_witness(q: QuadraticForm) -> AdmissibleBasis | None:
    """A concrete admissible basis for q, or None.

    Builds the explicit basis for the standard representative, then pulls it
    back through the normal-form change of basis.
    """
    if not is_admissible(q):
        return None
    fc = classify(q)
    m, m2 = fc.m1, fc.m2
    if fc.kind is Kind.MINUS:
        std = _minus_case_basis(m, m2)
    elif fc.kind is Kind.PLUS:
        std = _plus_case_basis(m)
        std.extend(std[0] | (1 << (2 * m + j)) for j in range(m2))
    else:  # QOne, m >= 2
        std = _plus_case_basis(m)
        std.append(1 | (1 << (2 * m)))
        std.extend(std[0] | (1 << (2 * m + 1 + j)) for j in range(m2 - 1))
    t = normal_form_witness(q).map
    return AdmissibleBasis(tuple(t.matvec(BitVector(q.dim, w)) for w in std))


BRUTEFORCE_DIM_CAP = 6


def is_admissible_bruteforce(q: QuadraticForm) -> AdmissibleBasis | None:
    """Backtracking search for an admissible basis straight from the definition.

    Candidates are the vectors with Q = 1; the search walks increasing vector
    values while maintaining linear independence, and prunes a branch as soon
    as some chosen vector can no longer find a B_Q-partner.  Returns the
    lexicographically first basis, or None.  Guaranteed budget up to dim 6;
    larger inputs run best-effort.
    """
    n = q.dim
    if n == 0:
        return None
    ev = q.eval_bits
    candidates = [v for v in range(1, 1 << n) if ev(v)]

    # B_Q(v, u) = parity(pv & u) where pv is v applied to the polar matrix.
    polar = q.polar().data

    def prow(v: int) -> int:
        acc = 0
        w = v
        while w:
            i = (w & -w).bit_length() - 1
            w &= w - 1
            acc ^= polar[i]
        return acc

    # Iteratively drop candidates with no partner among the remaining ones.
    while True:
        rows = {v: prow(v) for v in candidates}
        kept = [
            v
            for v in candidates
            if any((rows[v] & u).bit_count() & 1 for u in candidates if u != v)
        ]
        if len(kept) == len(candidates):
            break
        candidates = kept
    if len(candidates) < n:
        return None

    # Candidates must span the whole space.
    span = {0}
    for v in candidates:
        if v not in span:
            span |= {s ^ v for s in span}
    if len(span) != 1 << n:
        return None

    k = len(candidates)
    partner_masks = []
    for i, v in enumerate(candidates):
        pm = 0
        rv = prow(v)
        for j, u in enumerate(candidates):
            if j != i and (rv & u).bit_count() & 1:
                pm |= 1 << j
        partner_masks.append(pm)
    full_tail = [(1 << k) - (1 << i) for i in range(k + 1)]  # indices >= i

    chosen: list[int] = []
    echelon: list[int] = []  # reduced vectors, one pivot each

    def reduce(v: int) -> int:
        for e in echelon:
            if (v >> (e.bit_length() - 1)) & 1:
                v ^= e
        return v

    def search(start: int, chosen_mask: int, unpartnered: int) -> bool:
        depth = len(chosen)
        if depth == n:
            return unpartnered == 0
        if k - start < n - depth:
            return False
        remaining = full_tail[start]
        # every unpartnered chosen vector needs a partner still ahead
        um = unpartnered
        while um:
            i = (um & -um).bit_length() - 1
            um &= um - 1
            if not partner_masks[i] & remaining:
                return False
        for idx in range(start, k):
            v = candidates[idx]
            red = reduce(v)
            if red == 0:
                continue
            new_unpartnered = unpartnered & ~partner_masks[idx]
            if not partner_masks[idx] & chosen_mask:
                new_unpartnered |= 1 << idx
            chosen.append(idx)
            echelon.append(red)
            if search(idx + 1, chosen_mask | (1 << idx), new_unpartnered):
                return True
            chosen.pop()
            echelon.pop()
        return False

    if search(0, 0, 0):
        return AdmissibleBasis(tuple(BitVector(n, candidates[i]) for i in chosen))
    return None
