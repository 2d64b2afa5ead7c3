"""Reduce an arbitrary even class to irreducible and tabulated pieces.

A plan is a small tree: leaves are irreducible classes, tabulated special
classes, or the identity class; ``Stitch`` joins pieces left to right and
``Add1`` appends fixed points. ``execute`` turns a plan into a witness
``pi`` for the shift permutation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .composer import pad_word, stitch_words
from .constructions import IrreducibleClass, build_irreducible, check_witness, special
from .errors import DegreeTooSmall, InternalExhaustion, NotEvenClass
from .perm import CycleType, Permutation, cycle_word, from_word

# Even classes that are not commutators of two n-cycles for n = 3, 4, 5.
UNREACHABLE = {3: CycleType.of(3), 4: CycleType.of(2, 2), 5: CycleType.of(2, 2, 1)}


@dataclass(frozen=True)
class Leaf:
    cls: IrreducibleClass


@dataclass(frozen=True)
class SpecialLeaf:
    cls: CycleType


@dataclass(frozen=True)
class IdentityLeaf:
    n: int


@dataclass(frozen=True)
class Stitch:
    """Pieces stitched left to right: ``stitch(stitch(p0, p1), p2) ...``."""

    pieces: tuple[BuildPlan, ...]


@dataclass(frozen=True)
class Add1:
    """``count`` fixed points appended to ``inner``."""

    inner: BuildPlan
    count: int = 1


BuildPlan = Union[Leaf, SpecialLeaf, IdentityLeaf, Stitch, Add1]


def plan_parts(p: BuildPlan) -> CycleType:
    """The class a plan realizes."""
    if isinstance(p, Leaf):
        return p.cls.cycle_type
    if isinstance(p, SpecialLeaf):
        return p.cls
    if isinstance(p, IdentityLeaf):
        return CycleType((1,) * p.n)
    if isinstance(p, Stitch):
        return CycleType(tuple(x for piece in p.pieces for x in plan_parts(piece).parts))
    return CycleType(plan_parts(p.inner).parts + (1,) * p.count)


def _twos(a: int) -> list[BuildPlan]:
    # a even, a >= 4: blocks of 2,2,2,2 with at most one 2,2,2,2,2,2
    if a % 4:
        return [SpecialLeaf(CycleType((2,) * 6))] + [SpecialLeaf(CycleType((2,) * 4))] * ((a - 6) // 4)
    return [SpecialLeaf(CycleType((2,) * 4))] * (a // 4)


def _threes(b: int) -> list[BuildPlan]:
    # b >= 2: blocks of 3,3 with at most one 3,3,3
    if b % 2:
        return [SpecialLeaf(CycleType((3, 3, 3)))] + [SpecialLeaf(CycleType((3, 3)))] * ((b - 3) // 2)
    return [SpecialLeaf(CycleType((3, 3)))] * (b // 2)


def _twos_threes(a: int, b: int) -> list[BuildPlan]:
    # a even >= 2, b >= 1
    if a == 2:
        if b == 1:
            return [SpecialLeaf(CycleType((3, 2, 2)))]
        if b == 2:
            return [SpecialLeaf(CycleType((3, 3, 2, 2)))]
        return [SpecialLeaf(CycleType((3, 2, 2)))] + _threes(b - 1)
    if b == 1:
        if a == 4:
            return [SpecialLeaf(CycleType((3, 2, 2, 2, 2)))]
        return [SpecialLeaf(CycleType((3, 2, 2)))] + _twos(a - 2)
    return _twos(a) + _threes(b)


def _pieces(parts: tuple[int, ...]) -> list[BuildPlan]:
    """Pieces for an even class with no 1s; raises InternalExhaustion for (3) and (2,2)."""
    counts = Counter(parts)
    twos, threes = counts[2], counts[3]
    odds = sorted((p for p in parts if p >= 5 and p % 2), reverse=True)
    evens = sorted((p for p in parts if p >= 4 and p % 2 == 0), reverse=True)
    pieces: list[BuildPlan] = []

    if twos % 2:
        if not evens:
            raise InternalExhaustion(f"{parts}: odd number of 2s but no other even part")
        k = evens.pop(0) // 2
        if twos == 1 and threes == 1 and not odds:
            # peeling the 2 alone would strand the 3
            pieces.append(Leaf(IrreducibleClass.even_pair_plus3(k, 1)))
            twos = threes = 0
        elif twos == 3 and not threes:
            pieces.append(Leaf(IrreducibleClass.even_plus222(k)))
            twos = 0
        else:
            pieces.append(Leaf(IrreducibleClass.even_pair(k, 1)))
            twos -= 1

    if twos and threes:
        pieces += _twos_threes(twos, threes)
    elif twos >= 4:
        pieces += _twos(twos)
    elif twos == 2:
        if odds:
            pieces.append(Leaf(IrreducibleClass.odd_plus22(odds.pop(0))))
        elif len(evens) >= 2:
            pieces.append(Leaf(IrreducibleClass.even_pair(evens.pop(0) // 2, 1)))
            pieces.append(Leaf(IrreducibleClass.even_pair(evens.pop(0) // 2, 1)))
        else:
            raise InternalExhaustion(f"{parts}: two 2s with neither an odd part nor an even pair")
    elif threes >= 2:
        pieces += _threes(threes)
    elif threes == 1:
        if odds:
            pieces.append(Leaf(IrreducibleClass.odd_plus3(odds.pop(0))))
        elif len(evens) >= 2:
            pieces.append(Leaf(IrreducibleClass.even_pair_plus3(evens.pop(0) // 2, evens.pop(0) // 2)))
        else:
            raise InternalExhaustion(f"{parts}: a single 3 with neither an odd part nor an even pair")

    if len(evens) % 2:
        raise InternalExhaustion(f"{parts}: odd number of even parts left over")
    pieces += [Leaf(IrreducibleClass.odd_single(o)) for o in odds]
    pieces += [Leaf(IrreducibleClass.even_pair(evens[i] // 2, evens[i + 1] // 2)) for i in range(0, len(evens), 2)]
    return pieces


def _join(pieces: list[BuildPlan], ones: int) -> BuildPlan:
    body = pieces[0] if len(pieces) == 1 else Stitch(tuple(pieces))
    return Add1(body, ones) if ones else body


def check_class(c: CycleType) -> None:
    if not c.is_even:
        raise NotEvenClass(f"{c} has an odd number of even parts")
    if c.n in UNREACHABLE or c.n == 1:
        raise DegreeTooSmall(c.n, UNREACHABLE.get(c.n))


def plan(c: CycleType | tuple[int, ...]) -> BuildPlan:
    """Deterministic build plan for an even class of degree 2 or >= 6."""
    if not isinstance(c, CycleType):
        c = CycleType(tuple(c))
    check_class(c)
    ones = c.count(1)
    rest = c.without(1)
    if not rest:
        return IdentityLeaf(c.n)
    if not ones:
        return _join(_pieces(rest), 0)
    if rest == (3,):
        return _join([SpecialLeaf(CycleType((3, 1)))], ones - 1)
    if rest == (2, 2):
        return _join([SpecialLeaf(CycleType((2, 2, 1, 1)))], ones - 2)
    if 2 not in rest and rest.count(3) == 1:
        without3 = tuple(p for p in rest if p != 3)
        return _join([SpecialLeaf(CycleType((3, 1)))] + _pieces(without3), ones - 1)
    return _join(_pieces(rest), ones)


@lru_cache(maxsize=4096)
def _leaf_word(leaf: Leaf | SpecialLeaf) -> tuple[int, ...]:
    pi = build_irreducible(leaf.cls) if isinstance(leaf, Leaf) else special(leaf.cls)
    return tuple(cycle_word(pi))


def _word(p: BuildPlan) -> list[int]:
    if isinstance(p, (Leaf, SpecialLeaf)):
        return list(_leaf_word(p))
    if isinstance(p, IdentityLeaf):
        return list(range(1, p.n + 1))
    if isinstance(p, Stitch):
        return stitch_words(_word(piece) for piece in p.pieces)
    return pad_word(_word(p.inner), p.count)


def execute(p: BuildPlan) -> Permutation:
    """Witness pi in C(n), pi(1) = 2, with [shift(n), pi] of the planned class (checked)."""
    pi = from_word(_word(p))
    return check_witness(pi, plan_parts(p), "plan")


def _label(p: BuildPlan) -> str:
    if isinstance(p, Leaf):
        return f"irreducible {p.cls} -> C{p.cls.cycle_type}"
    if isinstance(p, SpecialLeaf):
        return f"special C{p.cls}"
    if isinstance(p, IdentityLeaf):
        return f"identity n={p.n}"
    if isinstance(p, Stitch):
        return f"stitch {len(p.pieces)} pieces -> C{plan_parts(p)}"
    return f"add1 x{p.count} -> C{plan_parts(p)}"


def render(p: BuildPlan, indent: str = "  ") -> str:
    """Indented tree, one node per line."""
    lines = []
    stack = [(p, 0)]
    while stack:
        node, depth = stack.pop()
        lines.append(indent * depth + _label(node))
        if isinstance(node, Stitch):
            stack.extend((child, depth + 1) for child in reversed(node.pieces))
        elif isinstance(node, Add1):
            stack.append((node.inner, depth + 1))
    return "\n".join(lines)
