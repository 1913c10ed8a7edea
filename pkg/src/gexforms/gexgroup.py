"""Central extensions of GF(2)^l by GF(2) built from a quadratic form.

The cocycle is the upper-triangular matrix M with M_ii = Q(e_i) and
M_ij = B_Q(e_i, e_j) for i < j, giving the multiplication law

    (u, eps) * (v, delta) = (u + v, eps + delta + u^T M v).

Squares recover Q and commutators recover B_Q, so the group determines the
form and vice versa.  Elements are packed as ints ((vec << 1) | central) for
the hot loops; the GroupElement wrapper is the friendly surface.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .f2linalg import BitVector, kernel_basis
from .quadform import (
    FormClass,
    Kind,
    QuadraticForm,
    classify,
    direct_sum,
    parse_form,
    zero_form,
)

_parity = lambda x: x.bit_count() & 1

FROM_FORM_DIM_CAP = 16
ISO_ORACLE_ORDER_CAP = 64


@dataclass(frozen=True)
class GroupElement:
    vec: BitVector
    central: int

    def packed(self) -> int:
        return (self.vec.bits << 1) | self.central


@dataclass(frozen=True)
class GexGroup:
    """Group of order 2^(dim+1) presented by a quadratic form via its cocycle."""

    form: QuadraticForm
    cocycle: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.form.dim > FROM_FORM_DIM_CAP:
            raise ValueError(f"group dimension capped at {FROM_FORM_DIM_CAP}")
        rows = tuple(
            self.form.upper[i] | (((self.form.diag >> i) & 1) << i)
            for i in range(self.form.dim)
        )
        object.__setattr__(self, "cocycle", rows)

    @property
    def dim(self) -> int:
        return self.form.dim

    @property
    def order(self) -> int:
        return 1 << (self.form.dim + 1)

    def identity(self) -> GroupElement:
        return GroupElement(BitVector.zero(self.dim), 0)

    def central_involution(self) -> GroupElement:
        return GroupElement(BitVector.zero(self.dim), 1)

    # -- packed-int operations (hot path) ------------------------------------

    def cocycle_bits(self, u: int, v: int) -> int:
        acc = 0
        w = u
        rows = self.cocycle
        while w:
            i = (w & -w).bit_length() - 1
            w &= w - 1
            acc ^= rows[i] & v
        return _parity(acc)

    def pmul(self, x: int, y: int) -> int:
        u, v = x >> 1, y >> 1
        return ((u ^ v) << 1) | ((x ^ y ^ self.cocycle_bits(u, v)) & 1)

    def pinv(self, x: int) -> int:
        v = x >> 1
        return (v << 1) | ((x ^ self.form.eval_bits(v)) & 1)

    def psquare(self, x: int) -> int:
        return self.form.eval_bits(x >> 1)

    def pcommutator(self, x: int, y: int) -> int:
        gh = self.pmul(x, y)
        return self.pmul(gh, self.pmul(self.pinv(x), self.pinv(y)))

    def porder(self, x: int) -> int:
        if x >> 1 == 0:
            return 1 if x == 0 else 2
        return 4 if self.form.eval_bits(x >> 1) else 2

    def elements_packed(self):
        return range(self.order)

    # -- element-level surface ------------------------------------------------

    def element(self, packed: int) -> GroupElement:
        return GroupElement(BitVector(self.dim, packed >> 1), packed & 1)

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        if a.vec.dim != self.dim or b.vec.dim != self.dim:
            raise ValueError("element dimension mismatch")
        return self.element(self.pmul(a.packed(), b.packed()))

    def inv(self, a: GroupElement) -> GroupElement:
        return self.element(self.pinv(a.packed()))

    def square(self, a: GroupElement) -> GroupElement:
        return self.element(self.psquare(a.packed()))

    def commutator(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.element(self.pcommutator(a.packed(), b.packed()))

    def elements(self) -> list[GroupElement]:
        return [self.element(x) for x in self.elements_packed()]

    def to_string(self) -> str:
        return "gex:" + self.form.to_string()


def from_form(q: QuadraticForm) -> GexGroup:
    return GexGroup(q)


def parse_group(spec: str) -> GexGroup:
    if not spec.startswith("gex:"):
        raise ValueError("group spec must start with 'gex:'")
    return GexGroup(parse_form(spec[4:]))


# -- subgroups ---------------------------------------------------------------


def center(g: GexGroup) -> list[GroupElement]:
    """{(v, eps) : v in radical(B_Q)}; both central fibers over the radical."""
    rad = kernel_basis(g.form.polar())
    span = {0}
    for r in rad:
        span |= {s ^ r.bits for s in span}
    packed = sorted((v << 1) | e for v in span for e in (0, 1))
    return [g.element(x) for x in packed]


def commutator_subgroup(g: GexGroup) -> list[GroupElement]:
    if any(g.form.polar().data):
        return [g.identity(), g.central_involution()]
    return [g.identity()]


def squares_subgroup(g: GexGroup) -> list[GroupElement]:
    if not g.form.is_zero_form():
        return [g.identity(), g.central_involution()]
    return [g.identity()]


def frattini(g: GexGroup) -> list[GroupElement]:
    """Phi(G) = G^2 . [G,G] for a 2-group; here both live in the central fiber."""
    if len(squares_subgroup(g)) > 1 or len(commutator_subgroup(g)) > 1:
        return [g.identity(), g.central_involution()]
    return [g.identity()]


def is_generalized_extraspecial(g: GexGroup) -> bool:
    """True iff Phi(G) = [G,G] = Z2 with Phi central: equivalently B_Q != 0."""
    return any(g.form.polar().data)


# -- the group <-> form dictionary --------------------------------------------


def q_from_group(g: GexGroup) -> QuadraticForm:
    """Reconstruct the form from squares of lifts and commutators."""
    n = g.dim
    diag = 0
    upper = [0] * n
    for i in range(n):
        ei = 1 << (i + 1)  # packed lift (e_i, 0)
        diag |= g.psquare(ei) << i
        for j in range(i + 1, n):
            upper[i] |= (g.pcommutator(ei, 1 << (j + 1)) & 1) << j
    return QuadraticForm(n, diag, tuple(upper))


def central_product(g1: GexGroup, g2: GexGroup) -> GexGroup:
    """Amalgamate the central involutions: modeled as the form direct sum."""
    for g in (g1, g2):
        if len(frattini(g)) == 1:
            raise ValueError(
                "central product needs a nontrivial Frattini subgroup on each side"
            )
    return GexGroup(direct_sum(g1.form, g2.form))


def direct_z2(g: GexGroup, n: int) -> GexGroup:
    if g.dim + n > FROM_FORM_DIM_CAP:
        raise ValueError(f"group dimension capped at {FROM_FORM_DIM_CAP}")
    return GexGroup(direct_sum(g.form, zero_form(n)))


class BaseKind(enum.Enum):
    Q8_POWER = "Q8^*m"
    Q8_POWER_D8 = "Q8^*(m-1)*D8"
    Q8_POWER_Z4 = "Q8^*m*Z4"
    ELEMENTARY_ABELIAN = "Z2^k"


@dataclass(frozen=True)
class GroupClass:
    """Isomorphism-class descriptor: base central product plus a Z2^n factor.

    Q8_POWER(m): Q8^*m (m >= 1).  Q8_POWER_D8(m): Q8^*(m-1) * D8 (m >= 1,
    m = 1 is plain D8).  Q8_POWER_Z4(m): Q8^*m * Z4 (m >= 0, m = 0 is plain
    Z4).  ELEMENTARY_ABELIAN: Z2^z2rank with m unused (the degenerate case the
    classification of generalized extraspecial groups leaves out).
    """

    base: BaseKind
    m: int
    z2rank: int

    def describe(self) -> str:
        if self.base is BaseKind.ELEMENTARY_ABELIAN:
            return f"Z2^{self.z2rank}"
        def power(k: int) -> str:
            return "Q8" if k == 1 else f"Q8^*{k}"

        if self.base is BaseKind.Q8_POWER:
            core = power(self.m)
        elif self.base is BaseKind.Q8_POWER_D8:
            core = "D8" if self.m == 1 else f"{power(self.m - 1)}*D8"
        else:
            core = "Z4" if self.m == 0 else f"{power(self.m)}*Z4"
        if self.z2rank:
            return f"{core} x Z2" + (f"^{self.z2rank}" if self.z2rank > 1 else "")
        return core


def group_class_of_form_class(fc: FormClass) -> GroupClass:
    """Translate a form class into the central-product decomposition.

    H-^m collapses to Q8^*m for m odd and Q8^*(m-1)*D8 for m even (and dually
    for the Plus kind); a Q1 summand contributes the Z4 factor and eats one
    radical dimension.
    """
    if fc.kind is Kind.ZERO:
        return GroupClass(BaseKind.ELEMENTARY_ABELIAN, 0, fc.dim + 1)
    if fc.kind is Kind.QONE:
        return GroupClass(BaseKind.Q8_POWER_Z4, fc.m1, fc.m2 - 1)
    if fc.kind is Kind.MINUS:
        base = BaseKind.Q8_POWER if fc.m1 % 2 == 1 else BaseKind.Q8_POWER_D8
    else:  # PLUS, m1 >= 1
        base = BaseKind.Q8_POWER if fc.m1 % 2 == 0 else BaseKind.Q8_POWER_D8
    return GroupClass(base, fc.m1, fc.m2)


def classify_group(g: GexGroup) -> GroupClass:
    return group_class_of_form_class(classify(g.form))


# -- reference multiplication tables -------------------------------------------
# Index tables for the two extraspecial atoms, with the designated central
# involution.  Q8 elements: 1, -1, i, -i, j, -j, k, -k (central: -1 at index 1).
# D8 elements: e, r, r^2, r^3, s, rs, r^2 s, r^3 s (central: r^2 at index 2).

Q8_TABLE = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 0, 3, 2, 5, 4, 7, 6),
    (2, 3, 1, 0, 6, 7, 5, 4),
    (3, 2, 0, 1, 7, 6, 4, 5),
    (4, 5, 7, 6, 1, 0, 2, 3),
    (5, 4, 6, 7, 0, 1, 3, 2),
    (6, 7, 4, 5, 3, 2, 1, 0),
    (7, 6, 5, 4, 2, 3, 0, 1),
)
Q8_CENTRAL = 1

D8_TABLE = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 2, 3, 0, 5, 6, 7, 4),
    (2, 3, 0, 1, 6, 7, 4, 5),
    (3, 0, 1, 2, 7, 4, 5, 6),
    (4, 7, 6, 5, 0, 3, 2, 1),
    (5, 4, 7, 6, 1, 0, 3, 2),
    (6, 5, 4, 7, 2, 1, 0, 3),
    (7, 6, 5, 4, 3, 2, 1, 0),
)
D8_CENTRAL = 2

Z4_TABLE = tuple(tuple((a + b) % 4 for b in range(4)) for a in range(4))
Z4_CENTRAL = 2


def form_from_table(
    table: tuple[tuple[int, ...], ...], central: int
) -> QuadraticForm:
    """Extract the squaring form of an explicit group table over its central
    involution: pick coset representatives for G/<c>, a basis among them, then
    read Q off squares and B_Q off commutators."""
    size = len(table)
    identity = next(
        i for i in range(size) if all(table[i][j] == j for j in range(size))
    )
    if table[central][central] != identity or central == identity:
        raise ValueError("central element must be an involution")
    if any(table[central][x] != table[x][central] for x in range(size)):
        raise ValueError("designated element is not central")

    def inv_of(x: int) -> int:
        return next(y for y in range(size) if table[x][y] == identity)

    # Cosets of <c>, keyed by their smaller member.
    coset_of = {x: min(x, table[central][x]) for x in range(size)}
    reps = sorted(set(coset_of.values()))
    if len(reps) * 2 != size:
        raise ValueError("central involution does not halve the group")

    # Greedy basis over the elementary abelian quotient.
    span = {coset_of[identity]}
    basis: list[int] = []
    for r in reps:
        if coset_of[r] in span:
            continue
        basis.append(r)
        span = span | {coset_of[table[s][r]] for s in span}
    n = len(basis)
    if 1 << n != len(reps):
        raise ValueError("quotient by the central involution is not elementary abelian")

    diag = 0
    upper = [0] * n
    for i, gi in enumerate(basis):
        sq = table[gi][gi]
        if sq == central:
            diag |= 1 << i
        elif sq != identity:
            raise ValueError("squares must land in the central subgroup")
        for j in range(i + 1, n):
            gj = basis[j]
            comm = table[table[gi][gj]][table[inv_of(gi)][inv_of(gj)]]
            if comm == central:
                upper[i] |= 1 << j
            elif comm != identity:
                raise ValueError("commutators must land in the central subgroup")
    return QuadraticForm(n, diag, tuple(upper))


# -- brute-force isomorphism oracle ---------------------------------------------


class TableGroup:
    """A finite group given by any multiplication callable on range(order)."""

    def __init__(self, order: int, mul):
        self.order = order
        self.mul = mul
        self.identity = next(
            x for x in range(order) if all(mul(x, y) == y for y in range(order))
        )

    @classmethod
    def from_gex(cls, g: GexGroup) -> "TableGroup":
        return cls(g.order, g.pmul)

    @classmethod
    def from_table(cls, table) -> "TableGroup":
        return cls(len(table), lambda x, y: table[x][y])

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for x in range(self.order):
            y, o = x, 1
            while y != self.identity:
                y = self.mul(y, x)
                o += 1
            orders.append(o)
        return tuple(orders)

    @cached_property
    def center_size(self) -> int:
        n = self.order
        return sum(
            all(self.mul(x, y) == self.mul(y, x) for y in range(n)) for x in range(n)
        )

    def generating_set(self) -> list[int]:
        gens: list[int] = []
        span = {self.identity}
        for x in range(self.order):
            if x in span:
                continue
            gens.append(x)
            frontier = [self.identity]
            span = {self.identity}
            while frontier:
                y = frontier.pop()
                for g in gens:
                    z = self.mul(y, g)
                    if z not in span:
                        span.add(z)
                        frontier.append(z)
            if len(span) == self.order:
                break
        return gens


def _try_generator_images(g1: TableGroup, g2: TableGroup, gens, imgs):
    """Close the partial map sending gens -> imgs; None on any conflict."""
    m = {g1.identity: g2.identity}
    frontier = [g1.identity]
    while frontier:
        x = frontier.pop()
        fx = m[x]
        for g, h in zip(gens, imgs):
            xg = g1.mul(x, g)
            fxh = g2.mul(fx, h)
            prev = m.get(xg)
            if prev is None:
                m[xg] = fxh
                frontier.append(xg)
            elif prev != fxh:
                return None
    if len(set(m.values())) != len(m):
        return None
    return m


def _is_full_isomorphism(g1: TableGroup, g2: TableGroup, m) -> bool:
    if len(m) != g1.order:
        return False
    items = list(m.items())
    return all(
        m[g1.mul(x, y)] == g2.mul(fx, fy) for x, fx in items for y, fy in items
    )


def iso_oracle_tables(g1: TableGroup, g2: TableGroup) -> bool:
    """Exhaustive generator-image isomorphism search with order-census pruning."""
    if g1.order != g2.order:
        return False
    if g1.order > ISO_ORACLE_ORDER_CAP:
        raise ValueError(f"isomorphism oracle capped at order {ISO_ORACLE_ORDER_CAP}")
    if Counter(g1.element_orders) != Counter(g2.element_orders):
        return False
    if g1.center_size != g2.center_size:
        return False
    gens = g1.generating_set()
    by_order: dict[int, list[int]] = {}
    for x in range(g2.order):
        by_order.setdefault(g2.element_orders[x], []).append(x)
    candidates = [by_order.get(g1.element_orders[g], []) for g in gens]

    def extend(depth: int, imgs: list[int]) -> bool:
        if depth == len(gens):
            m = _try_generator_images(g1, g2, gens, imgs)
            return m is not None and _is_full_isomorphism(g1, g2, m)
        for h in candidates[depth]:
            partial = _try_generator_images(
                g1, g2, gens[: depth + 1], imgs + [h]
            )
            if partial is None:
                continue
            if extend(depth + 1, imgs + [h]):
                return True
        return False

    return extend(0, [])


def iso_oracle(g1: GexGroup, g2: GexGroup) -> bool:
    """Ground truth for classify_group: explicit-table isomorphism search."""
    return iso_oracle_tables(TableGroup.from_gex(g1), TableGroup.from_gex(g2))
