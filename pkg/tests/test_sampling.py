import random

from hypothesis import given
from hypothesis import strategies as st

from cyclecomm.perm import is_even, is_n_cycle
from cyclecomm.sampling import random_even_class, random_even_perm, random_n_cycle


@given(st.integers(0, 2**32), st.integers(1, 500))
def test_random_even_class(seed, n):
    c = random_even_class(random.Random(seed), n)
    assert c.n == n and c.is_even


@given(st.integers(0, 2**32), st.integers(1, 200))
def test_random_even_perm_and_n_cycle(seed, n):
    rng = random.Random(seed)
    assert is_even(random_even_perm(rng, n))
    assert is_n_cycle(random_n_cycle(rng, n))
