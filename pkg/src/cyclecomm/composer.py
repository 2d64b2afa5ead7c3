"""Growing witnesses: append a fixed point, or stitch two witnesses side by side.

Both operations act on the cycle of ``pi`` written from 1, ``(1 2 i ... j)``:

* ``add_fixed_point`` appends ``n+1`` after ``j``; the commutator with the
  shift gains the fixed point ``n+1`` and is otherwise unchanged;
* ``stitch`` appends the second cycle, shifted by ``n1``, after ``j1``; the
  commutator becomes the disjoint union of both commutators, the second
  one relabeled by ``+n1``.
"""

from __future__ import annotations

from .errors import CommutatorError
from .perm import Permutation, cycle_word, from_word


class PreconditionError(CommutatorError, ValueError):
    pass


def witness_word(pi: Permutation, min_degree: int = 2) -> list[int]:
    """Cycle of pi from 1, after checking pi is an n-cycle with pi(1) = 2."""
    if pi.n < min_degree:
        raise PreconditionError(f"degree {pi.n} < {min_degree}")
    if pi(1) != 2:
        raise PreconditionError(f"pi(1) = {pi(1)}, expected 2")
    word = cycle_word(pi)
    if len(word) != pi.n:
        raise PreconditionError(f"{pi} is not an {pi.n}-cycle")
    return word


def add_fixed_point(pi: Permutation) -> Permutation:
    word = witness_word(pi)
    word.append(pi.n + 1)
    return from_word(word)


def stitch(pi1: Permutation, pi2: Permutation) -> Permutation:
    word = witness_word(pi1)
    offset = pi1.n
    word.extend(x + offset for x in witness_word(pi2))
    return from_word(word)


def stitch_words(words) -> list[int]:
    """Left fold of ``stitch`` on cycle words: concatenate, shifting each by the degrees before it."""
    out: list[int] = []
    for word in words:
        offset = len(out)
        out.extend(x + offset for x in word)
    return out


def pad_word(word: list[int], count: int) -> list[int]:
    """``count`` applications of ``add_fixed_point`` on a cycle word."""
    n = len(word)
    return word + list(range(n + 1, n + count + 1))
