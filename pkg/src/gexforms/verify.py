"""The aggregated verification suite behind `gexforms verify-paper`.

Each check pits an implementation path against an independent route (an
exhaustive oracle, an explicit construction, or a published table) and
reports pass/fail with timing.  The CLI exits nonzero when any check fails.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass

from . import admissible as adm
from . import clifford, gexgroup, quadform

DEFAULT_SEED = 271828
SEED_ENV_VAR = "GEXFORMS_SEED"


def get_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    return int(raw) if raw else DEFAULT_SEED


@dataclass(frozen=True)
class CheckResult:
    name: str
    claim: str
    ok: bool
    detail: str
    elapsed: float

    def format(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name} ({self.claim}) {self.elapsed:.2f}s {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> int:
        return sum(c.ok for c in self.checks)

    @property
    def failed(self) -> int:
        return sum(not c.ok for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        return f"{self.passed}/{len(self.checks)} checks passed"


def _check(name: str, claim: str, fn) -> CheckResult:
    start = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, claim, ok, detail, time.perf_counter() - start)


# -- individual checks ---------------------------------------------------------


def check_classification_complete(max_dim: int = 3):
    """classify is a complete isometry invariant, against the GL exhaustion."""
    checked = 0
    for dim in range(max_dim + 1):
        forms = list(quadform.all_forms(dim))
        classes = [quadform.classify(q) for q in forms]
        for i, q in enumerate(forms):
            for j in range(i, len(forms)):
                witness = quadform.isometry_oracle(q, forms[j])
                if (classes[i] == classes[j]) != (witness is not None):
                    return False, f"disagreement at {q.to_string()} vs {forms[j].to_string()}"
                checked += 1
    return True, f"{checked} form pairs"


def check_admissibility(max_exhaustive_dim: int = 4, random_per_dim: int = 200):
    """Classification-based admissibility equals the backtracking search."""
    rng = random.Random(get_seed())
    checked = 0
    anchors = [
        (quadform.h_plus(), False),
        (quadform.direct_sum(quadform.h_plus(), quadform.q_one()), False),
        (quadform.h_minus(), True),
        (quadform.direct_sum(quadform.h_plus(), quadform.h_plus()), True),
    ]
    for q, expected in anchors:
        if adm.is_admissible(q) != expected:
            return False, f"anchor {q.to_string()} expected {expected}"
    for dim in range(1, max_exhaustive_dim + 1):
        for q in quadform.all_forms(dim):
            basis = adm.is_admissible_bruteforce(q)
            if adm.is_admissible(q) != (basis is not None):
                return False, f"oracle disagreement at {q.to_string()}"
            if basis is not None and not adm.check_basis(q, basis):
                return False, f"invalid search basis at {q.to_string()}"
            checked += 1
    for dim in (5, 6):
        for _ in range(random_per_dim):
            q = quadform.random_form(dim, rng)
            if adm.is_admissible(q) != (adm.is_admissible_bruteforce(q) is not None):
                return False, f"oracle disagreement at {q.to_string()}"
            checked += 1
    return True, f"{checked} forms"


def check_splitting(max_dim: int = 3, max_zeros: int = 3):
    """Admissibility ignores zero orthogonal summands."""
    checked = 0
    for dim in range(1, max_dim + 1):
        for q in quadform.all_forms(dim):
            base = adm.is_admissible(q)
            for n in range(max_zeros + 1):
                padded = quadform.direct_sum(q, quadform.zero_form(n))
                if adm.is_admissible(padded) != base:
                    return False, f"splitting broken at {q.to_string()} + 0^{n}"
                checked += 1
    return True, f"{checked} padded forms"


def check_dictionary(rounds: int = 50):
    """Reference tables give the advertised forms; products act on forms blockwise."""
    rng = random.Random(get_seed() + 1)
    table_expect = [
        (gexgroup.Q8_TABLE, gexgroup.Q8_CENTRAL, quadform.h_minus(), "Q8"),
        (gexgroup.D8_TABLE, gexgroup.D8_CENTRAL, quadform.h_plus(), "D8"),
        (gexgroup.Z4_TABLE, gexgroup.Z4_CENTRAL, quadform.q_one(), "Z4"),
    ]
    for table, central, expected, label in table_expect:
        got = gexgroup.form_from_table(table, central)
        if not quadform.is_isometric(got, expected):
            return False, f"{label} table form is {got.to_string()}"
    for _ in range(rounds):
        d1 = rng.randrange(1, 5)
        d2 = rng.randrange(1, 5)
        q1, q2 = quadform.random_form(d1, rng), quadform.random_form(d2, rng)
        g1, g2 = gexgroup.from_form(q1), gexgroup.from_form(q2)
        try:
            prod = gexgroup.central_product(g1, g2)
        except ValueError:
            continue  # a factor with trivial Frattini subgroup
        if gexgroup.q_from_group(prod) != quadform.direct_sum(q1, q2):
            return False, "central product form mismatch"
        n = rng.randrange(0, 4)
        padded = gexgroup.direct_z2(g1, n)
        if gexgroup.q_from_group(padded) != quadform.direct_sum(
            q1, quadform.zero_form(n)
        ):
            return False, "Z2-factor form mismatch"
    return True, f"3 tables + {rounds} random products"


def check_central_products():
    """Order, Frattini size, and the Q8*Q8 = D8*D8 coincidence."""
    q8 = gexgroup.from_form(quadform.h_minus())
    d8 = gexgroup.from_form(quadform.h_plus())
    q8q8 = gexgroup.central_product(q8, q8)
    d8d8 = gexgroup.central_product(d8, d8)
    if q8q8.order != 32:
        return False, f"|Q8*Q8| = {q8q8.order}"
    if len(gexgroup.frattini(q8q8)) != 2:
        return False, "Frattini of a central product must have order 2"
    if gexgroup.classify_group(q8q8) != gexgroup.classify_group(d8d8):
        return False, "Q8*Q8 and D8*D8 classify differently"
    if not gexgroup.iso_oracle(q8q8, d8d8):
        return False, "oracle rejects Q8*Q8 = D8*D8"
    if gexgroup.iso_oracle(q8, d8):
        return False, "oracle conflates Q8 and D8"
    return True, "orders, Frattini, and order-32 isomorphism"


def check_group_laws(max_dim: int = 3):
    """Squaring gives Q and commutators give B_Q, over every element pair."""
    checked = 0
    for dim in range(max_dim + 1):
        for q in quadform.all_forms(dim):
            g = gexgroup.from_form(q)
            for x in g.elements_packed():
                if g.psquare(x) != q.eval_bits(x >> 1):
                    return False, f"squaring law at {q.to_string()}"
                for y in g.elements_packed():
                    comm = g.pcommutator(x, y)
                    if comm >> 1 or (comm & 1) != q.bilinear_bits(x >> 1, y >> 1):
                        return False, f"commutator law at {q.to_string()}"
                    checked += 1
    return True, f"{checked} element pairs"


def check_psi(max_exhaustive: int = 8, sampled: tuple[int, ...] = (9, 10)):
    rng = random.Random(get_seed() + 2)
    for n in range(2, max_exhaustive + 1):
        if not clifford.verify_psi(n):
            return False, f"generator map fails at n={n}"
    for n in sampled:
        if not clifford.verify_psi(n, sample_pairs=1000, rng=rng):
            return False, f"generator map fails at n={n} (sampled)"
    return True, f"exhaustive n<=%d, sampled n=%s" % (max_exhaustive, list(sampled))


def check_en_table(n_max: int = 17):
    rows = clifford.verify_en_table(n_max)
    bad = [r for r in rows if not r.ok]
    if bad:
        return False, "; ".join(r.format() for r in bad)
    return True, f"{len(rows)} rows, n=2..{n_max}"


SUITE = [
    (
        "form-classification-complete",
        "normal forms of quadratic forms over GF(2), degenerate included",
        check_classification_complete,
    ),
    (
        "admissibility-theorem-vs-search",
        "admissible forms are H+^m (m>=2), H- + H+^(m-1), H+^m + Q1 (m>=2)",
        check_admissibility,
    ),
    (
        "zero-summand-splitting",
        "admissibility is unchanged by zero orthogonal summands",
        check_splitting,
    ),
    (
        "group-form-dictionary",
        "Q8, D8, Z4 carry H-, H+, Q1; products act blockwise on forms",
        check_dictionary,
    ),
    (
        "central-product-identities",
        "central products amalgamate the involution; Q8*Q8 = D8*D8",
        check_central_products,
    ),
    (
        "group-model-laws",
        "squares realize Q and commutators realize B_Q",
        check_group_laws,
    ),
    (
        "clifford-presentation-iso",
        "E(n) matches the presented group on n-1 anticommuting generators",
        check_psi,
    ),
    (
        "clifford-mod8-table",
        "E(n) x Z2 decomposes into central products by n mod 8",
        check_en_table,
    ),
]


def run_suite() -> VerificationReport:
    return VerificationReport(
        tuple(_check(name, claim, fn) for name, claim, fn in SUITE)
    )
