import random

import pytest

from gexforms.f2linalg import BitVector
from gexforms.admissible import (
    AdmissibleBasis,
    BRUTEFORCE_DIM_CAP,
    admissible_witness,
    check_basis,
    is_admissible,
    is_admissible_bruteforce,
)
from gexforms.quadform import (
    all_forms,
    change_basis,
    direct_sum,
    h_minus,
    h_plus,
    q_one,
    random_form,
    random_invertible,
    sum_forms,
    zero_form,
)

RNG_SEED = 271828


def test_anchor_verdicts():
    assert not is_admissible(h_plus())
    assert not is_admissible(direct_sum(h_plus(), q_one()))
    assert is_admissible(direct_sum(h_plus(), h_plus()))
    assert is_admissible(h_minus())


def test_more_verdicts():
    assert not is_admissible(zero_form(3))
    assert not is_admissible(q_one())
    assert not is_admissible(direct_sum(q_one(), zero_form(2)))
    assert is_admissible(direct_sum(h_minus(), zero_form(3)))
    assert is_admissible(sum_forms(h_plus(), h_plus(), q_one()))
    assert is_admissible(sum_forms(h_minus(), h_plus(), q_one()))
    assert is_admissible(direct_sum(h_minus(), h_plus()))


def test_verdict_is_an_isometry_invariant():
    rng = random.Random(RNG_SEED)
    for _ in range(100):
        dim = rng.randrange(1, 8)
        q = random_form(dim, rng)
        t = random_invertible(dim, rng)
        assert is_admissible(change_basis(q, t)) == is_admissible(q)


def test_check_basis_accepts_hand_built_example():
    # H-: both basis vectors already work -- Q(e1) = Q(e2) = 1, B(e1, e2) = 1.
    basis = AdmissibleBasis((BitVector(2, 0b01), BitVector(2, 0b10)))
    assert check_basis(h_minus(), basis)


def test_check_basis_rejections():
    hm = h_minus()
    # dependent vectors
    assert not check_basis(hm, AdmissibleBasis((BitVector(2, 1), BitVector(2, 1))))
    # wrong count
    assert not check_basis(hm, AdmissibleBasis((BitVector(2, 1),)))
    # wrong vector dimension
    assert not check_basis(hm, AdmissibleBasis((BitVector(3, 1), BitVector(3, 2))))
    # Q = 0 on a basis vector (e1 for H+)
    hp2 = direct_sum(h_plus(), h_plus())
    assert not check_basis(
        hp2, AdmissibleBasis(tuple(BitVector(4, 1 << i) for i in range(4)))
    )
    # all values 1 but e3 = (1,1,1) is B_Q-isolated: Q1 (+) Q1 (+) Q1
    q = sum_forms(q_one(), q_one(), q_one())
    vs = (BitVector(3, 0b001), BitVector(3, 0b010), BitVector(3, 0b111))
    assert all(q.eval_bits(v.bits) for v in vs)
    assert not check_basis(q, AdmissibleBasis(vs))


def test_witness_none_iff_inadmissible_small():
    for dim in range(1, 5):
        for q in all_forms(dim):
            w = admissible_witness(q)
            assert (w is not None) == is_admissible(q)
            if w is not None:
                assert check_basis(q, w)


def test_witness_random_larger_dims():
    rng = random.Random(RNG_SEED + 1)
    found = 0
    for _ in range(300):
        q = random_form(rng.randrange(5, 11), rng)
        w = admissible_witness(q)
        if w is not None:
            found += 1
            assert check_basis(q, w)
    assert found > 0


def test_witness_each_admissible_class_shape():
    # one representative per admissible class shape, zeros included
    shapes = [
        h_minus(),
        direct_sum(h_minus(), zero_form(2)),
        sum_forms(h_minus(), h_plus(), h_plus()),
        direct_sum(h_plus(), h_plus()),
        sum_forms(h_plus(), h_plus(), zero_form(1)),
        sum_forms(h_plus(), h_plus(), q_one()),
        sum_forms(h_plus(), h_plus(), q_one(), zero_form(2)),
        sum_forms(h_minus(), h_minus(), q_one()),
    ]
    for q in shapes:
        w = admissible_witness(q)
        assert w is not None and check_basis(q, w)


def test_bruteforce_agrees_exhaustively_small():
    for dim in range(1, 5):
        for q in all_forms(dim):
            basis = is_admissible_bruteforce(q)
            assert (basis is not None) == is_admissible(q)
            if basis is not None:
                assert check_basis(q, basis)


def test_bruteforce_random_at_cap():
    rng = random.Random(RNG_SEED + 2)
    for _ in range(100):
        q = random_form(BRUTEFORCE_DIM_CAP, rng)
        basis = is_admissible_bruteforce(q)
        assert (basis is not None) == is_admissible(q)
        if basis is not None:
            assert check_basis(q, basis)


def test_bruteforce_is_deterministic():
    q = sum_forms(h_minus(), h_plus())
    b1 = is_admissible_bruteforce(q)
    b2 = is_admissible_bruteforce(q)
    assert b1 == b2


def test_zero_dimension():
    q = zero_form(0)
    assert not is_admissible(q)
    assert admissible_witness(q) is None
    assert is_admissible_bruteforce(q) is None
