"""Random permutations and random even classes for sweeps and property tests."""

from __future__ import annotations

import random

from .perm import CycleType, Permutation


def random_perm(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def random_even_perm(rng: random.Random, n: int) -> Permutation:
    from .perm import is_even

    p = random_perm(rng, n)
    if not is_even(p) and n >= 2:
        images = list(p.images)
        images[0], images[1] = images[1], images[0]
        p = Permutation(tuple(images))
    return p


def random_n_cycle(rng: random.Random, n: int) -> Permutation:
    order = list(range(1, n + 1))
    rng.shuffle(order)
    images = [0] * n
    for i, x in enumerate(order):
        images[x - 1] = order[(i + 1) % n]
    return Permutation(tuple(images))


def random_even_class(rng: random.Random, n: int) -> CycleType:
    """A random even cycle type of degree n.

    The largest allowed part is drawn first, so both classes made of many
    1s, 2s and 3s and classes with a few long cycles show up often.
    """
    cap = rng.choice((2, 3, 4, 6, 12, max(1, n // 4), n))
    parts = []
    left = n
    while left:
        p = rng.randint(1, min(cap, left))
        parts.append(p)
        left -= p
    evens = [i for i, p in enumerate(parts) if p % 2 == 0]
    if len(evens) % 2:
        # split one even part p into (p-1, 1)
        i = evens[0]
        parts[i] -= 1
        parts.append(1)
    return CycleType(tuple(parts))
