import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclecomm.composer import PreconditionError, add_fixed_point, stitch
from cyclecomm.constructions import SPECIALS, build_irreducible, irreducible_classes
from cyclecomm.perm import CycleType, commutator, cycle_type, from_cycle, is_n_cycle, shift

WITNESSES = [e.pi for e in SPECIALS.values()] + [build_irreducible(c) for c in irreducible_classes(18)]


def _rho(pi):
    return commutator(shift(pi.n), pi).images


def test_add_fixed_point_example():
    pi = add_fixed_point(from_cycle((1, 2, 4, 3)))
    assert pi == from_cycle((1, 2, 4, 3, 5))
    assert cycle_type(commutator(shift(5), pi)) == CycleType.of(3, 1, 1)


def test_stitch_fixture():
    pi = stitch(from_cycle((1, 2)), from_cycle((1, 2)))
    assert pi == from_cycle((1, 2, 3, 4))
    assert commutator(shift(4), pi).images == (1, 2, 3, 4)


def test_preconditions():
    with pytest.raises(PreconditionError):
        add_fixed_point(from_cycle((1, 3, 2)))
    with pytest.raises(PreconditionError):
        stitch(shift(1), from_cycle((1, 2)))


@pytest.mark.parametrize("pi", WITNESSES, ids=str)
def test_add_fixed_point_blocks(pi):
    out = add_fixed_point(pi)
    assert out(1) == 2 and is_n_cycle(out)
    rho = _rho(out)
    assert rho[: pi.n] == _rho(pi) and rho[pi.n] == pi.n + 1


@given(st.sampled_from(WITNESSES), st.sampled_from(WITNESSES))
def test_stitch_blocks(a, b):
    out = stitch(a, b)
    assert out(1) == 2 and is_n_cycle(out)
    rho = _rho(out)
    assert rho[: a.n] == _rho(a)
    assert rho[a.n :] == tuple(x + a.n for x in _rho(b))


@given(st.sampled_from(WITNESSES), st.sampled_from(WITNESSES), st.sampled_from(WITNESSES))
def test_stitch_associative_on_classes(a, b, c):
    left = stitch(stitch(a, b), c)
    right = stitch(a, stitch(b, c))
    assert cycle_type(commutator(shift(left.n), left)) == cycle_type(commutator(shift(right.n), right))
