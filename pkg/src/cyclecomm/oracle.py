"""Brute-force certification of the commutator map on n-cycles for small n.

Deliberately independent of the constructions: it only enumerates n-cycles
and counts commutator cycle types. Conjugating a pair (tau, pi) by phi
conjugates [tau, pi], so fixing tau to the shift permutation and running
pi over all (n-1)! n-cycles already reaches every class in the image.
``exhaustive_pairs`` checks that reduction by enumerating both arguments.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import CommutatorError, DegreeTooLarge
from .perm import CycleType, Permutation

MAX_SINGLE = 12
MAX_PAIRS = 7


@dataclass(frozen=True)
class CoverageReport:
    n: int
    reachable: frozenset[CycleType]
    all_even: frozenset[CycleType]
    missing: frozenset[CycleType]
    witness_counts: dict[CycleType, int] = field(compare=False)

    def __post_init__(self):
        if self.reachable | self.missing != self.all_even or self.reachable & self.missing:
            raise ValueError("reachable and missing must partition all_even")


def partitions(n: int, largest: int | None = None):
    """Integer partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def enumerate_even_types(n: int) -> set[CycleType]:
    """Partitions of n with an even number of even parts."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return {CycleType(p) for p in partitions(n) if sum(1 for x in p if x % 2 == 0) % 2 == 0}


def _guard(n: int, limit: int) -> None:
    if n > limit:
        raise DegreeTooLarge(f"n={n} exceeds the enumeration limit {limit}")
    if n < 1:
        raise ValueError("n must be >= 1")


def _shape(rho: list[int]) -> tuple[int, ...]:
    n = len(rho)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            length += 1
            x = rho[x]
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def _count_chunk(args: tuple[int, int]) -> Counter:
    """Commutator types of [shift, pi] over n-cycles pi = (0 first ...) with pi(0) = first (0-based)."""
    n, first = args
    counts: Counter = Counter()
    P = [0] * n
    Q = [0] * n
    rest = [x for x in range(1, n) if x != first]
    nxt = list(range(1, n)) + [0]
    prv = [n - 1] + list(range(n - 1))
    for tail in itertools.permutations(rest):
        prev = 0
        for x in (first,) + tail:
            P[prev] = x
            Q[x] = prev
            prev = x
        P[prev] = 0
        Q[0] = prev
        rho = [prv[Q[nxt[P[x]]]] for x in range(n)]
        counts[_shape(rho)] += 1
    return counts


def _chunks(n: int) -> list[tuple[int, int]]:
    return [(n, first) for first in range(1, n)]


def reachable_types(n: int, workers: int = 1) -> CoverageReport:
    """Exact image of pi -> [shift(n), pi] over C(n), by cycle type, with counts."""
    _guard(n, MAX_SINGLE)
    counts: Counter = Counter()
    if n == 1:
        counts[(1,)] = 1
    elif workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_chunk, _chunks(n)):
                counts.update(part)
    else:
        for chunk in _chunks(n):
            counts.update(_count_chunk(chunk))
    assert sum(counts.values()) == math.factorial(n - 1)
    witness_counts = {CycleType(k): v for k, v in counts.items()}
    all_even = frozenset(enumerate_even_types(n))
    reachable = frozenset(witness_counts)
    if not reachable <= all_even:
        raise CommutatorError(f"odd commutator found at n={n}: {sorted(reachable - all_even)}")
    return CoverageReport(n, reachable, all_even, all_even - reachable, witness_counts)


def _n_cycles(n: int) -> list[list[int]]:
    """All n-cycles on 0..n-1 as image lists."""
    out = []
    for tail in itertools.permutations(range(1, n)):
        images = [0] * n
        prev = 0
        for x in tail:
            images[prev] = x
            prev = x
        images[prev] = 0
        out.append(images)
    return out


def pair_counts(n: int) -> dict[CycleType, int]:
    """Number of pairs (tau, pi) of n-cycles per cycle type of [tau, pi]."""
    _guard(n, MAX_PAIRS)
    cycles = _n_cycles(n)
    inverses = []
    for images in cycles:
        inv = [0] * n
        for x, y in enumerate(images):
            inv[y] = x
        inverses.append(inv)
    counts: Counter = Counter()
    rng = range(n)
    for T, Ti in zip(cycles, inverses):
        for P, Pi in zip(cycles, inverses):
            counts[_shape([Ti[Pi[T[P[x]]]] for x in rng])] += 1
    return {CycleType(k): v for k, v in counts.items()}


def exhaustive_pairs(n: int) -> set[CycleType]:
    """Cycle types of [tau, pi] over all pairs of n-cycles."""
    return set(pair_counts(n))


def pairs_report(n: int) -> CoverageReport:
    counts = pair_counts(n)
    all_even = frozenset(enumerate_even_types(n))
    reachable = frozenset(counts)
    return CoverageReport(n, reachable, all_even, all_even - reachable, counts)


def find_pi(n: int, c: CycleType) -> Permutation | None:
    """First n-cycle pi (in enumeration order) with [shift(n), pi] of type c, or None."""
    _guard(n, MAX_SINGLE)
    if n == 1:
        return Permutation((1,)) if c.parts == (1,) else None
    target = c.parts
    nxt = list(range(1, n)) + [0]
    prv = [n - 1] + list(range(n - 1))
    for tail in itertools.permutations(range(1, n)):
        P = [0] * n
        Q = [0] * n
        prev = 0
        for x in tail:
            P[prev] = x
            Q[x] = prev
            prev = x
        P[prev] = 0
        Q[0] = prev
        if _shape([prv[Q[nxt[P[x]]]] for x in range(n)]) == target:
            return Permutation(tuple(y + 1 for y in P))
    return None


def certify_solver(n: int, failures: list | None = None) -> bool:
    """Run the constructive solver on every even class of degree n and verify each witness."""
    from .solver import verify, witness_for_class

    if not 6 <= n <= 11:
        raise ValueError("certify_solver covers 6 <= n <= 11")
    ok = True
    for c in sorted(enumerate_even_types(n)):
        try:
            w = witness_for_class(n, c)
            problem = None if verify(w) and w.cls == c else "verification failed"
        except CommutatorError as exc:
            problem = str(exc)
        if problem is not None:
            ok = False
            if failures is not None:
                failures.append((c, problem))
    return ok


def format_report(report: CoverageReport) -> str:
    """``n=<n>`` then ``<parts> <reachable|missing> <count>`` per class, parts tuples in lexicographic order."""
    lines = [f"n={report.n}"]
    for c in sorted(report.all_even, key=lambda c: c.parts):
        status = "reachable" if c in report.reachable else "missing"
        lines.append(f"{c.csv()} {status} {report.witness_counts.get(c, 0)}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> CoverageReport:
    lines = text.strip().splitlines()
    if not lines or not lines[0].startswith("n="):
        raise ValueError("report must start with n=<n>")
    n = int(lines[0][2:])
    reachable, missing, counts = set(), set(), {}
    for line in lines[1:]:
        parts, status, count = line.split()
        c = CycleType.parse(parts)
        (reachable if status == "reachable" else missing).add(c)
        if int(count):
            counts[c] = int(count)
    return CoverageReport(n, frozenset(reachable), frozenset(reachable | missing), frozenset(missing), counts)
