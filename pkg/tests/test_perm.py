import pytest
from hypothesis import given

from conftest import perm_pairs, perms
from cyclecomm.errors import DegreeMismatch, InvalidPermutation, NotConjugate
from cyclecomm.perm import (
    CycleType,
    Permutation,
    commutator,
    compose,
    conjugate,
    cycle_decomposition,
    cycle_type,
    cycle_word,
    find_conjugator,
    from_cycle,
    from_word,
    identity,
    inverse,
    is_even,
    is_n_cycle,
    perm_from_cycles,
    shift,
)


def test_compose_applies_right_argument_first():
    f = perm_from_cycles([(1, 2)], 3)
    g = perm_from_cycles([(2, 3)], 3)
    assert compose(f, g)(2) == f(g(2)) == 3


def test_shift_squared_on_three_symbols():
    s = shift(3)
    assert compose(s, s) == from_cycle((1, 3, 2))


def test_inverse_of_shift():
    assert inverse(shift(4)) == from_cycle((1, 4, 3, 2))


def test_conjugate_relabels_cycles():
    assert conjugate(shift(3), perm_from_cycles([(1, 2)], 3)) == from_cycle((1, 3, 2))


def test_commutator_definition_on_example():
    t, p = shift(6), from_cycle((1, 2, 4, 3, 6, 5))
    expected = compose(compose(inverse(t), inverse(p)), compose(t, p))
    assert commutator(t, p) == expected
    assert cycle_type(commutator(t, p)) == CycleType.of(3, 3)


def test_commutator_of_shift_with_itself_is_identity():
    assert commutator(shift(6), shift(6)) == identity(6)


def test_cycle_decomposition_is_canonical():
    p = perm_from_cycles([(6, 3), (4, 1), (2,)], 6)
    assert cycle_decomposition(p) == [(1, 4), (3, 6), (2,), (5,)]
    assert str(p) == "(1 4)(3 6)(2)(5)"
    assert str(identity(3)) == "(1)(2)(3)"


def test_cycle_type_and_parity():
    p = perm_from_cycles([(1, 2, 3), (4, 5)], 6)
    assert cycle_type(p) == CycleType.of(3, 2, 1)
    assert not is_even(p)
    assert is_even(shift(5)) and not is_even(shift(4))
    assert is_n_cycle(shift(7)) and not is_n_cycle(identity(2))


def test_cycle_type_parse_and_format():
    c = CycleType.parse("4,2,3")
    assert c.parts == (4, 3, 2) and c.n == 9 and c.is_even
    assert CycleType.parse("(2,2)") == CycleType.of(2, 2)
    assert str(c) == "(4,3,2)" and c.csv() == "4,3,2"
    with pytest.raises(ValueError):
        CycleType.parse("4,x")


def test_invalid_permutations_rejected():
    with pytest.raises(InvalidPermutation):
        Permutation((1, 1))
    with pytest.raises(InvalidPermutation):
        Permutation(())
    with pytest.raises(InvalidPermutation):
        perm_from_cycles([(1, 2), (2, 3)], 3)
    with pytest.raises(InvalidPermutation):
        perm_from_cycles([(1, 5)], 4)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(shift(3), shift(4))


def test_find_conjugator_rejects_different_types():
    with pytest.raises(NotConjugate):
        find_conjugator(shift(4), identity(4))


def test_cycle_word_round_trip():
    p = from_cycle((1, 2, 4, 3, 6, 5))
    assert cycle_word(p) == [1, 2, 4, 3, 6, 5]
    assert from_word(cycle_word(p)) == p


@given(perm_pairs(3))
def test_composition_is_associative(fgh):
    f, g, h = fgh
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(perms())
def test_inverse_laws(p):
    e = identity(p.n)
    assert compose(p, inverse(p)) == e == compose(inverse(p), p)
    assert inverse(inverse(p)) == p


@given(perm_pairs(2))
def test_commutator_inverse_swaps_arguments(tp):
    t, p = tp
    assert inverse(commutator(t, p)) == commutator(p, t)


@given(perm_pairs(3))
def test_commutator_conjugation_equivariance(tpf):
    t, p, phi = tpf
    assert commutator(conjugate(t, phi), conjugate(p, phi)) == conjugate(commutator(t, p), phi)


@given(perm_pairs(2))
def test_conjugate_matches_composition(pf):
    p, phi = pf
    assert conjugate(p, phi) == compose(compose(phi, p), inverse(phi))


@given(perm_pairs(2))
def test_conjugation_preserves_type_and_parity(pf):
    p, phi = pf
    q = conjugate(p, phi)
    assert cycle_type(q) == cycle_type(p)
    assert is_even(q) == is_even(p)


@given(perm_pairs(2))
def test_find_conjugator_of_conjugates(pf):
    p, phi = pf
    q = conjugate(p, phi)
    assert conjugate(p, find_conjugator(p, q)) == q


@given(perms())
def test_cycle_decomposition_round_trip(p):
    assert perm_from_cycles(cycle_decomposition(p), p.n) == p
    assert sum(len(c) for c in cycle_decomposition(p)) == p.n


@given(perm_pairs(2))
def test_commutators_are_even(tp):
    assert is_even(commutator(*tp))
