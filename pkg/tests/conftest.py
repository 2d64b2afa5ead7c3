from hypothesis import strategies as st

from cyclecomm.perm import Permutation


@st.composite
def perms(draw, min_n=1, max_n=24, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    images = draw(st.permutations(range(1, n + 1)))
    return Permutation(tuple(images))


@st.composite
def perm_pairs(draw, count=2, max_n=24):
    n = draw(st.integers(1, max_n))
    return tuple(draw(perms(n=n)) for _ in range(count))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
