import random

import pytest

from cyclecomm.errors import DegreeTooSmall, NotEvenClass
from cyclecomm.perm import (
    CycleType,
    Permutation,
    commutator,
    conjugate,
    cycle_type,
    from_cycle,
    identity,
    is_n_cycle,
    perm_from_cycles,
    shift,
)
from cyclecomm.sampling import random_even_perm, random_perm
from cyclecomm.solver import NotEven, Reason, Witness, verify, witness_for_class, witness_for_perm


def test_three_three_at_six():
    w = witness_for_class(6, CycleType.of(3, 3))
    assert w.tau == shift(6) and w.cls == CycleType.of(3, 3) and verify(w)


def test_degree_two():
    w = witness_for_class(2, (1, 1))
    assert (w.tau, w.pi, w.rho) == (shift(2), shift(2), identity(2))


def test_four_three_two_witness():
    w = witness_for_class(9, CycleType.of(4, 3, 2))
    assert w.pi == from_cycle((1, 2, 4, 5, 8, 7, 9, 6, 3))


def test_identity_target():
    w = witness_for_perm(identity(8))
    assert w.tau == w.pi == shift(8)


def test_product_of_three_cycles():
    rho = perm_from_cycles([(1, 2, 3), (4, 5, 6)], 6)
    w = witness_for_perm(rho)
    assert commutator(w.tau, w.pi) == rho and verify(w)


def test_errors():
    with pytest.raises(NotEven):
        witness_for_perm(perm_from_cycles([(1, 2)], 6))
    with pytest.raises(NotEvenClass):
        witness_for_class(6, CycleType.of(4, 1, 1))
    with pytest.raises(DegreeTooSmall, match=r"\(2,2\)"):
        witness_for_class(4, CycleType.of(2, 2))
    with pytest.raises(ValueError):
        witness_for_class(7, CycleType.of(3, 3))


def test_brute_force_small():
    assert verify(witness_for_class(5, CycleType.of(3, 1, 1), brute_force_small=True))
    assert verify(witness_for_class(4, CycleType.of(3, 1), brute_force_small=True))
    with pytest.raises(DegreeTooSmall):
        witness_for_class(5, CycleType.of(2, 2, 1), brute_force_small=True)


def test_verify_reasons():
    s6 = shift(6)
    assert verify(Witness(s6, s6, s6)).reason is Reason.TARGET_MISMATCH
    assert verify(Witness(s6, identity(6), identity(6))).reason is Reason.PI_NOT_N_CYCLE
    assert verify(Witness(identity(6), s6, identity(6))).reason is Reason.TAU_NOT_N_CYCLE
    assert verify(Witness(s6, s6, identity(7))).reason is Reason.DEGREE_MISMATCH


def test_tampered_witness_fails():
    w = witness_for_class(10, CycleType.of(5, 3, 1, 1))
    images = list(w.pi.images)
    images[3], images[6] = images[6], images[3]
    assert not verify(Witness(w.tau, Permutation(tuple(images)), w.rho))


def test_random_targets_and_equivariance():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.choice([2] + list(range(6, 120)))
        rho = random_even_perm(rng, n)
        assert verify(witness_for_perm(rho))
        phi = random_perm(rng, n)
        w = witness_for_perm(conjugate(rho, phi))
        assert verify(w) and is_n_cycle(w.tau) and cycle_type(w.rho) == cycle_type(rho)
