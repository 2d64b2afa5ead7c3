"""Exact permutation algebra on the symbols 1..n.

Composition is right-to-left: ``compose(f, g)(x) == f(g(x))``. Under that
convention the commutator ``[t, p] = t^-1 p^-1 t p`` applies ``p`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeMismatch, InvalidPermutation, NotConjugate

Cycle = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of {1..n}; ``images[x - 1]`` is the image of symbol ``x``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = self.images
        if not isinstance(images, tuple):
            images = tuple(images)
            object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise InvalidPermutation("a permutation needs degree n >= 1")
        seen = bytearray(n + 1)
        for y in images:
            if not 1 <= y <= n or seen[y]:
                raise InvalidPermutation(f"images {images!r} are not a bijection of 1..{n}")
            seen[y] = 1

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycle_decomposition(self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, n={self.n})"


@dataclass(frozen=True, slots=True, order=True)
class CycleType:
    """Cycle lengths in non-increasing order; identifies a conjugacy class of S_n."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise ValueError(f"cycle type needs positive parts, got {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> CycleType:
        return cls(parts)

    @classmethod
    def parse(cls, text: str) -> CycleType:
        """Read ``"4,2,3"`` or ``"(4,2,3)"``."""
        body = text.strip().removeprefix("C").strip().strip("()")
        try:
            return cls(tuple(int(tok) for tok in body.replace(" ", "").split(",") if tok))
        except ValueError as exc:
            raise ValueError(f"bad cycle type {text!r}") from exc

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def is_even(self) -> bool:
        return sum(1 for p in self.parts if p % 2 == 0) % 2 == 0

    def count(self, part: int) -> int:
        return self.parts.count(part)

    def without(self, part: int) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p != part)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def csv(self) -> str:
        return ",".join(map(str, self.parts))


def _check_degree(n: int) -> None:
    if n < 1:
        raise InvalidPermutation(f"degree must be >= 1, got {n}")


def _same_degree(a: Permutation, b: Permutation) -> int:
    if a.n != b.n:
        raise DegreeMismatch(f"degrees differ: {a.n} != {b.n}")
    return a.n


def identity(n: int) -> Permutation:
    _check_degree(n)
    return Permutation(tuple(range(1, n + 1)))


def shift(n: int) -> Permutation:
    """The n-cycle (1 2 ... n)."""
    _check_degree(n)
    return Permutation(tuple(range(2, n + 1)) + (1,))


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Return ``f o g``, i.e. ``x -> f(g(x))``."""
    _same_degree(f, g)
    fi = f.images
    return Permutation(tuple(fi[y - 1] for y in g.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for x, y in enumerate(p.images, 1):
        inv[y - 1] = x
    return Permutation(tuple(inv))


def commutator(t: Permutation, p: Permutation) -> Permutation:
    """``[t, p] = t^-1 p^-1 t p``, evaluated right to left."""
    n = _same_degree(t, p)
    ti, pi = t.images, p.images
    t_inv = [0] * (n + 1)
    p_inv = [0] * (n + 1)
    for x in range(1, n + 1):
        t_inv[ti[x - 1]] = x
        p_inv[pi[x - 1]] = x
    return Permutation(tuple(t_inv[p_inv[ti[y - 1]]] for y in pi))


def conjugate(p: Permutation, phi: Permutation) -> Permutation:
    """``phi p phi^-1``: relabel every symbol x of p's cycles as phi(x)."""
    n = _same_degree(p, phi)
    out = [0] * n
    fi = phi.images
    for x, y in enumerate(p.images, 1):
        out[fi[x - 1] - 1] = fi[y - 1]
    return Permutation(tuple(out))


def cycle_decomposition(p: Permutation) -> list[Cycle]:
    """Disjoint cycles, fixed points included.

    Each cycle starts at its smallest symbol; cycles are ordered by
    descending length, then ascending first symbol.
    """
    images = p.images
    seen = bytearray(p.n + 1)
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = 1
        x = images[start - 1]
        while x != start:
            cyc.append(x)
            seen[x] = 1
            x = images[x - 1]
        cycles.append(tuple(cyc))
    cycles.sort(key=lambda c: (-len(c), c[0]))
    return cycles


def cycle_lengths(images: Sequence[int]) -> list[int]:
    """Cycle lengths of a raw 1-based image sequence, unsorted."""
    n = len(images)
    seen = bytearray(n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            length += 1
            x = images[x - 1]
        lengths.append(length)
    return lengths


def cycle_length_at(p: Permutation, x: int) -> int:
    """Length of the cycle of p containing x."""
    length, y = 1, p(x)
    while y != x:
        y, length = p(y), length + 1
    return length


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(tuple(cycle_lengths(p.images)))


def is_even(p: Permutation) -> bool:
    return (p.n - len(cycle_lengths(p.images))) % 2 == 0


def is_n_cycle(p: Permutation) -> bool:
    images = p.images
    x, steps = images[0], 1
    while x != 1:
        x = images[x - 1]
        steps += 1
    return steps == p.n


def find_conjugator(a: Permutation, b: Permutation) -> Permutation:
    """Return phi with ``conjugate(a, phi) == b`` by aligning canonical cycle lists."""
    n = _same_degree(a, b)
    ca, cb = cycle_decomposition(a), cycle_decomposition(b)
    if [len(c) for c in ca] != [len(c) for c in cb]:
        raise NotConjugate(f"cycle types differ: {cycle_type(a)} vs {cycle_type(b)}")
    phi = [0] * n
    for c1, c2 in zip(ca, cb):
        for x, y in zip(c1, c2):
            phi[x - 1] = y
    return Permutation(tuple(phi))


def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """Build a permutation of degree n; symbols not mentioned are fixed."""
    _check_degree(n)
    images = list(range(1, n + 1))
    used = set()
    for cyc in cycles:
        cyc = tuple(cyc)
        if not cyc:
            raise InvalidPermutation("empty cycle")
        for x in cyc:
            if not 1 <= x <= n:
                raise InvalidPermutation(f"symbol {x} out of range 1..{n}")
            if x in used:
                raise InvalidPermutation(f"repeated symbol {x}")
            used.add(x)
        for i, x in enumerate(cyc):
            images[x - 1] = cyc[(i + 1) % len(cyc)]
    return Permutation(tuple(images))


def from_cycle(cycle: Sequence[int]) -> Permutation:
    """Single cycle through every symbol it mentions; degree = its maximum."""
    return perm_from_cycles([cycle], max(cycle))


def cycle_word(p: Permutation) -> list[int]:
    """The cycle of p through 1, listed starting at 1."""
    images = p.images
    word = [1]
    x = images[0]
    while x != 1:
        word.append(x)
        x = images[x - 1]
    return word


def from_word(word: Sequence[int]) -> Permutation:
    """Inverse of ``cycle_word`` for n-cycles: ``word`` lists every symbol once."""
    n = len(word)
    images = [0] * n
    for i in range(n - 1):
        images[word[i] - 1] = word[i + 1]
    images[word[-1] - 1] = word[0]
    return Permutation(tuple(images))
